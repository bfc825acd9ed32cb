/**
 * Render-scope processor registration. Loaded as the third registration
 * step, after the module payload and the synchronous loader have run in
 * this scope (the loader leaves the instantiated module on globalThis as
 * ENGINE_MODULE). No imports: this compiles to a plain script.
 */

(() => {
  const scope = globalThis as any;

  class BlocksynthProcessor extends AudioWorkletProcessor {
    private core: ReturnType<EngineModuleFactory["createProcessorCore"]>;

    constructor(options?: unknown) {
      super();
      const engineModule: EngineModuleFactory = scope.ENGINE_MODULE;
      const opts = (options as any)?.processorOptions ?? {};
      const config = {
        sr: opts.sr ?? scope.sampleRate ?? 44100,
        ksmps: opts.ksmps ?? 32,
        nchnls: opts.nchnls ?? 2,
        nchnlsIn: opts.nchnlsIn ?? 0,
        zerodbfs: opts.zerodbfs ?? 32768,
      };
      this.core = engineModule.createProcessorCore(config, (reply) => {
        this.port.postMessage(reply);
      });
      this.port.onmessage = (e: MessageEvent) => {
        if (!this.core.post(e.data)) {
          this.port.postMessage({
            type: "console",
            payload: { text: "error: message inbox full; message dropped" },
          });
        }
      };
    }

    process(inputs: Float32Array[][], outputs: Float32Array[][]): boolean {
      return this.core.process(inputs[0] ?? [], outputs[0]);
    }
  }

  registerProcessor("blocksynth-processor", BlocksynthProcessor);
})();
