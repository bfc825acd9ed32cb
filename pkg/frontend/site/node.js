/**
 * Control-context handles over the two backends. Both expose the same
 * surface: post() stamps sequence numbers and sends a wire message, reply
 * handlers observe everything the render side emits. Message application
 * always happens at render block boundaries, whichever backend runs.
 */
import { isReply } from "./wire.js";
export class WorkletEngineNode extends AudioWorkletNode {
    constructor(context, options = {}) {
        super(context, "blocksynth-processor", {
            numberOfInputs: options.nchnlsIn ? 1 : 0,
            numberOfOutputs: 1,
            outputChannelCount: [options.nchnls ?? 2],
            processorOptions: { sr: context.sampleRate, ...options },
        });
        this.backend = "worklet";
        this.seq = 0;
        this.handlers = [];
        this.port.onmessage = (e) => {
            if (isReply(e.data)) {
                for (const h of this.handlers)
                    h(e.data);
            }
        };
    }
    post(msg) {
        this.seq += 1;
        const stamped = { ...msg, seq: this.seq };
        this.port.postMessage(stamped);
        return this.seq;
    }
    onReply(handler) {
        this.handlers.push(handler);
    }
}
/**
 * Inline fallback: the engine runs in the page context inside a
 * ScriptProcessorNode callback. Messages still apply only at block
 * boundaries (the core drains its inbox at the start of each process),
 * so the API and semantics match the worklet path.
 */
export class FallbackEngineNode {
    constructor(context, engineModule, options = {}, bufferSize = 1024) {
        this.backend = "script-processor";
        this.seq = 0;
        this.handlers = [];
        this.pendingReplies = [];
        this.lastCallbackAt = 0;
        /** Incremented when the host callback cadence shows a gap (underrun). */
        this.underruns = 0;
        const nchnls = options.nchnls ?? 2;
        const nchnlsIn = options.nchnlsIn ?? 0;
        this.core = engineModule.createProcessorCore({
            sr: context.sampleRate,
            ksmps: options.ksmps ?? 32,
            nchnls,
            nchnlsIn,
            zerodbfs: options.zerodbfs ?? 32768,
        }, (reply) => this.pendingReplies.push(reply));
        this.node = context.createScriptProcessor(bufferSize, nchnlsIn, nchnls);
        this.node.onaudioprocess = (e) => {
            const ins = [];
            for (let ch = 0; ch < nchnlsIn; ch++)
                ins.push(e.inputBuffer.getChannelData(ch));
            const outs = [];
            for (let ch = 0; ch < nchnls; ch++)
                outs.push(e.outputBuffer.getChannelData(ch));
            this.trackCadence(e.playbackTime ?? 0, outs[0].length, context.sampleRate);
            this.core.process(ins, outs);
            this.flushReplies();
        };
    }
    trackCadence(playbackTime, frames, sr) {
        const expected = frames / sr;
        if (this.lastCallbackAt > 0 && playbackTime - this.lastCallbackAt > expected * 1.5) {
            this.underruns += 1;
        }
        this.lastCallbackAt = playbackTime;
    }
    flushReplies() {
        for (const reply of this.pendingReplies.splice(0)) {
            for (const h of this.handlers)
                h(reply);
        }
    }
    post(msg) {
        this.seq += 1;
        this.core.post({ ...msg, seq: this.seq });
        return this.seq;
    }
    onReply(handler) {
        this.handlers.push(handler);
    }
    connect(destination) {
        this.node.connect(destination);
    }
    disconnect() {
        this.node.disconnect();
    }
    /** Test/diagnostic hook: run one block cycle outside the audio thread. */
    pump(frames) {
        const outs = [];
        const nchnls = this.core.engine.config.nchnls;
        for (let ch = 0; ch < nchnls; ch++)
            outs.push(new Float32Array(frames));
        this.core.process([], outs);
        this.flushReplies();
        return outs;
    }
}
