/**
 * Control-context handles over the two backends. Both expose the same
 * surface: post() stamps sequence numbers and sends a wire message, reply
 * handlers observe everything the render side emits. Message application
 * always happens at render block boundaries, whichever backend runs.
 */
import { WireMessage, WireReply, isReply } from "./wire.js";

export type BackendKind = "worklet" | "script-processor";

export interface EngineHandle {
  readonly backend: BackendKind;
  post(msg: WireMessage): number;
  onReply(handler: (reply: WireReply) => void): void;
  connect(destination: AudioNode): void;
  disconnect(): void;
}

export interface EngineOptions {
  sr?: number;
  ksmps?: number;
  nchnls?: number;
  nchnlsIn?: number;
  zerodbfs?: number;
}

export class WorkletEngineNode extends AudioWorkletNode implements EngineHandle {
  readonly backend: BackendKind = "worklet";
  private seq = 0;
  private handlers: Array<(reply: WireReply) => void> = [];

  constructor(context: BaseAudioContext, options: EngineOptions = {}) {
    super(context, "blocksynth-processor", {
      numberOfInputs: options.nchnlsIn ? 1 : 0,
      numberOfOutputs: 1,
      outputChannelCount: [options.nchnls ?? 2],
      processorOptions: { sr: context.sampleRate, ...options },
    });
    this.port.onmessage = (e: MessageEvent) => {
      if (isReply(e.data)) {
        for (const h of this.handlers) h(e.data);
      }
    };
  }

  post(msg: WireMessage): number {
    this.seq += 1;
    const stamped = { ...msg, seq: this.seq };
    this.port.postMessage(stamped);
    return this.seq;
  }

  onReply(handler: (reply: WireReply) => void): void {
    this.handlers.push(handler);
  }
}

/**
 * Inline fallback: the engine runs in the page context inside a
 * ScriptProcessorNode callback. Messages still apply only at block
 * boundaries (the core drains its inbox at the start of each process),
 * so the API and semantics match the worklet path.
 */
export class FallbackEngineNode implements EngineHandle {
  readonly backend: BackendKind = "script-processor";
  readonly node: ScriptProcessorNode;
  private core: ReturnType<EngineModuleFactory["createProcessorCore"]>;
  private seq = 0;
  private handlers: Array<(reply: WireReply) => void> = [];
  private pendingReplies: WireReply[] = [];
  private lastCallbackAt = 0;
  /** Incremented when the host callback cadence shows a gap (underrun). */
  underruns = 0;

  constructor(
    context: BaseAudioContext,
    engineModule: EngineModuleFactory,
    options: EngineOptions = {},
    bufferSize = 1024,
  ) {
    const nchnls = options.nchnls ?? 2;
    const nchnlsIn = options.nchnlsIn ?? 0;
    this.core = engineModule.createProcessorCore(
      {
        sr: context.sampleRate,
        ksmps: options.ksmps ?? 32,
        nchnls,
        nchnlsIn,
        zerodbfs: options.zerodbfs ?? 32768,
      },
      (reply) => this.pendingReplies.push(reply as WireReply),
    );
    this.node = context.createScriptProcessor(bufferSize, nchnlsIn, nchnls);
    this.node.onaudioprocess = (e: AudioProcessingEvent) => {
      const ins: Float32Array[] = [];
      for (let ch = 0; ch < nchnlsIn; ch++) ins.push(e.inputBuffer.getChannelData(ch));
      const outs: Float32Array[] = [];
      for (let ch = 0; ch < nchnls; ch++) outs.push(e.outputBuffer.getChannelData(ch));
      this.trackCadence(e.playbackTime ?? 0, outs[0].length, context.sampleRate);
      this.core.process(ins, outs);
      this.flushReplies();
    };
  }

  private trackCadence(playbackTime: number, frames: number, sr: number): void {
    const expected = frames / sr;
    if (this.lastCallbackAt > 0 && playbackTime - this.lastCallbackAt > expected * 1.5) {
      this.underruns += 1;
    }
    this.lastCallbackAt = playbackTime;
  }

  private flushReplies(): void {
    for (const reply of this.pendingReplies.splice(0)) {
      for (const h of this.handlers) h(reply);
    }
  }

  post(msg: WireMessage): number {
    this.seq += 1;
    this.core.post({ ...msg, seq: this.seq });
    return this.seq;
  }

  onReply(handler: (reply: WireReply) => void): void {
    this.handlers.push(handler);
  }

  connect(destination: AudioNode): void {
    this.node.connect(destination);
  }

  disconnect(): void {
    this.node.disconnect();
  }

  /** Test/diagnostic hook: run one block cycle outside the audio thread. */
  pump(frames: number): Float32Array[] {
    const outs: Float32Array[] = [];
    const nchnls = (this.core.engine as any).config.nchnls as number;
    for (let ch = 0; ch < nchnls; ch++) outs.push(new Float32Array(frames));
    this.core.process([], outs);
    this.flushReplies();
    return outs;
  }
}
