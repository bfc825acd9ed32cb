/**
 * Boot: probe host capabilities, select the backend, load the engine
 * module artifacts the right way for that backend, and hand back a
 * connected engine handle.
 *
 * Worklet path: three registration steps into the render scope, in order:
 *   1. the byte-array module payload (binary data as a script),
 *   2. the synchronous loader (instantiates the module in that scope),
 *   3. the processor script (registers the processor class).
 * Fallback path: the base64 payload is decoded and instantiated
 * asynchronously in the page context, driving a script-processor node.
 */
import { FallbackEngineNode, WorkletEngineNode } from "./node.js";
export class OverrideUnsupportedError extends Error {
}
export function probeCapabilities(context, win = globalThis) {
    return {
        workletAvailable: !!context?.audioWorklet?.addModule,
        secureContext: !!win.isSecureContext,
    };
}
/** Worklet when available on a secure page, otherwise the inline
 * fallback; explicit overrides are honored only when supportable. */
export function selectBackend(caps, override = null) {
    const workletOk = caps.workletAvailable && caps.secureContext;
    if (override === "worklet") {
        if (!workletOk) {
            throw new OverrideUnsupportedError(`worklet backend requested but unavailable (worklet_available=${caps.workletAvailable}, secure_context=${caps.secureContext})`);
        }
        return "worklet";
    }
    if (override === "script-processor")
        return "script-processor";
    return workletOk ? "worklet" : "script-processor";
}
export const DEFAULT_ARTIFACTS = {
    modulePayload: "module-payload.js",
    syncLoader: "loader-sync.js",
    processor: "processor.js",
    modulePayloadB64: "module-payload.b64.js",
};
const B64_HEADER = 'const ENGINE_MODULE_B64 = "';
const B64_FOOTER = '";\n';
/** Decode the base64 module artifact back to the module script text. */
export function decodeBase64Artifact(text) {
    if (!text.startsWith(B64_HEADER) || !text.endsWith(B64_FOOTER)) {
        throw new Error("unrecognized artifact wrapper");
    }
    const payload = text.slice(B64_HEADER.length, text.length - B64_FOOTER.length);
    const bytes = Uint8Array.from(atob(payload), (c) => c.charCodeAt(0));
    return new TextDecoder().decode(bytes);
}
async function defaultLoadText(url) {
    const res = await fetch(url);
    if (!res.ok)
        throw new Error(`failed to load ${url}: ${res.status}`);
    return res.text();
}
/**
 * Asynchronous page-context instantiation for the fallback backend:
 * load the base64 artifact, decode it, evaluate the module script in
 * global scope, and return the registered factory.
 */
export async function instantiateModuleAsync(url, loadText = defaultLoadText) {
    const artifact = await loadText(url);
    const script = decodeBase64Artifact(artifact);
    (0, eval)(script); // global-scope evaluation registers the factory
    const factory = globalThis.__blocksynthEngineModule;
    if (!factory)
        throw new Error("module script did not register the engine factory");
    return factory;
}
export async function boot(context, options = {}) {
    const artifacts = options.artifacts ?? DEFAULT_ARTIFACTS;
    const caps = probeCapabilities(context);
    const backend = selectBackend(caps, options.override ?? null);
    let handle;
    if (backend === "worklet") {
        const worklet = context.audioWorklet;
        await worklet.addModule(artifacts.modulePayload);
        await worklet.addModule(artifacts.syncLoader);
        await worklet.addModule(artifacts.processor);
        handle = new WorkletEngineNode(context, options.engine ?? {});
    }
    else {
        const factory = await instantiateModuleAsync(artifacts.modulePayloadB64, options.loadText ?? defaultLoadText);
        handle = new FallbackEngineNode(context, factory, options.engine ?? {});
    }
    handle.connect(context.destination);
    return { backend, handle, context };
}
