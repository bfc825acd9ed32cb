// Minimal ambient declarations for the audio worklet global scope and the
// engine module instance those scripts share; the DOM lib does not ship
// AudioWorkletProcessor types.

declare class AudioWorkletProcessor {
  readonly port: MessagePort;
  constructor(options?: unknown);
}

declare function registerProcessor(
  name: string,
  ctor: new (options?: unknown) => AudioWorkletProcessor,
): void;

interface EngineModuleFactory {
  version: string;
  createEngine(config: unknown): unknown;
  createProcessorCore(
    config: unknown,
    emit: (reply: { type: string; payload: unknown }) => void,
  ): {
    post(msg: unknown): boolean;
    applyMessages(): void;
    process(inputs: ArrayLike<number>[], outputs: Float32Array[]): boolean;
    running: boolean;
    cnt: number;
    status: number;
    engine: unknown;
  };
  parseOrchestra(source: string): unknown;
  parseScore(text: string): unknown;
  midiToEvent(status: number, d1: number, d2: number): unknown;
}
