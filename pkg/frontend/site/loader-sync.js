/* Synchronous render-scope loader: registration step 2. Step 1 (the
 * byte-array payload script) left ENGINE_MODULE_BYTES on the global
 * scope. This scope has no asynchronous loading facilities, so the bytes
 * are decoded and the module script evaluated synchronously; the
 * instantiated module is left on the global scope for step 3. */
(() => {
  const scope = globalThis;
  const bytes = scope.ENGINE_MODULE_BYTES;
  if (!bytes) {
    throw new Error("module payload must be loaded before the loader");
  }
  let text = "";
  const chunk = 0x8000;
  for (let i = 0; i < bytes.length; i += chunk) {
    text += String.fromCharCode.apply(null, bytes.subarray(i, i + chunk));
  }
  (0, eval)(text);
  scope.ENGINE_MODULE = scope.__blocksynthEngineModule;
  if (!scope.ENGINE_MODULE) {
    throw new Error("module script did not register the engine factory");
  }
})();
