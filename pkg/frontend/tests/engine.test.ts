/** Engine module: language, scheduling, rendering, and processor core. */
import { beforeAll, describe, expect, it } from "vitest";

import "../src/engine-module";

const factory: EngineModuleFactory = (globalThis as any).__blocksynthEngineModule;

const CFG = { sr: 8000, ksmps: 4, nchnls: 1, nchnlsIn: 0, zerodbfs: 32768 };

function makeEngine(orc: string, sco = "", cfg = CFG): any {
  const engine: any = factory.createEngine(cfg);
  const result = engine.compileOrc(orc);
  expect(result.ok, JSON.stringify(result.diagnostics)).toBe(true);
  if (sco) expect(engine.readScore(sco)).toEqual([]);
  return engine;
}

describe("orchestra compilation", () => {
  it("compiles a sine instrument", () => {
    const engine: any = factory.createEngine(CFG);
    const result = engine.compileOrc("instr 1\n out oscil(p4, p5)\nendin");
    expect(result.ok).toBe(true);
    expect(result.instruments).toEqual([1]);
  });

  it("reports unknown identifiers with line numbers", () => {
    const engine: any = factory.createEngine(CFG);
    const result = engine.compileOrc("instr 1\n out nope\nendin");
    expect(result.ok).toBe(false);
    expect(result.diagnostics[0].line).toBe(2);
    expect(result.diagnostics[0].message).toContain("unknown identifier");
  });

  it("keeps the old program when a recompile fails", () => {
    const engine = makeEngine("instr 1\n out 1\nendin", "i 1 0 1");
    expect(engine.compileOrc("instr 1\n out nope\nendin").ok).toBe(false);
    engine.performBlock();
    expect(Array.from(engine.spout)).toEqual([1, 1, 1, 1]);
  });

  it("enforces out arity and in() range", () => {
    const engine: any = factory.createEngine(CFG);
    expect(engine.compileOrc("instr 1\n out 1, 2\nendin").ok).toBe(false);
    expect(engine.compileOrc("instr 1\n out in(0)\nendin").ok).toBe(false);
  });
});

describe("rendering", () => {
  it("renders constant output for the note duration", () => {
    const engine = makeEngine("instr 1\n out p4\nendin", "i 1 0 0.001 7");
    engine.performBlock(); // 0.001s * 8000 = 8 frames -> 2 blocks
    expect(Array.from(engine.spout)).toEqual([7, 7, 7, 7]);
    engine.performBlock();
    expect(Array.from(engine.spout)).toEqual([7, 7, 7, 7]);
    engine.performBlock();
    expect(Array.from(engine.spout)).toEqual([0, 0, 0, 0]);
  });

  it("oscillator matches Math.sin phase", () => {
    const engine = makeEngine("instr 1\n out oscil(1, 1000)\nendin", "i 1 0 1");
    engine.performBlock();
    const got = Array.from(engine.spout) as number[];
    for (let k = 0; k < 4; k++) {
      expect(got[k]).toBeCloseTo(Math.sin(2 * Math.PI * 1000 * k / 8000), 12);
    }
  });

  it("is deterministic across runs", () => {
    const run = () => {
      const engine = makeEngine(
        'instr 1\n out oscil(p4, p5) + chan("m")\nendin', "i 1 0 1 0.5 441");
      const stream: number[] = [];
      for (let b = 0; b < 50; b++) {
        engine.setChannel("m", (b % 5) / 5);
        engine.performBlock();
        stream.push(...Array.from(engine.spout as Float64Array));
      }
      return stream;
    };
    expect(run()).toEqual(run());
  });

  it("samples the bus once per block", () => {
    const engine = makeEngine('instr 1\n out chan("v")\nendin', "i 1 0 1");
    engine.setChannel("v", 3);
    engine.performBlock();
    expect(Array.from(engine.spout)).toEqual([3, 3, 3, 3]);
    engine.setChannel("v", 9);
    engine.performBlock();
    expect(Array.from(engine.spout)).toEqual([9, 9, 9, 9]);
  });

  it("clamps non-finite samples to zero and counts them", () => {
    const engine = makeEngine("instr 1\n out 1 / 0\nendin", "i 1 0 0.0005");
    engine.performBlock();
    expect(Array.from(engine.spout)).toEqual([0, 0, 0, 0]);
    expect(engine.clampedSamples).toBe(4);
  });

  it("finishes after an end event and stays finished", () => {
    const engine = makeEngine("instr 1\n out 1\nendin", "i 1 0 1\ne 0");
    expect(engine.performBlock()).toBe(1);
    expect(engine.performBlock()).toBe(1);
    engine.reset();
    expect(engine.performBlock()).toBe(0);
  });

  it("drops notes for unknown instruments with a console warning", () => {
    const lines: string[] = [];
    const engine = makeEngine("instr 1\n out 1\nendin");
    engine.console = (t: string) => lines.push(t);
    engine.sendEvent({ kind: "note", instr: 9, start: 0, dur: 1, pfields: [], key: null });
    engine.performBlock();
    expect(lines.some((t) => t.includes("instr 9") && t.includes("dropped"))).toBe(true);
  });
});

describe("midi mapping", () => {
  it("maps note-on to a held note with normalized velocity and frequency", () => {
    const ev: any = factory.midiToEvent(0x90, 69, 127);
    expect(ev).toMatchObject({ kind: "note", instr: 1, dur: -1, key: 69 });
    expect(ev.pfields[0]).toBe(1);
    expect(ev.pfields[1]).toBeCloseTo(440, 9);
    expect((factory.midiToEvent(0x90, 81, 64) as any).pfields[1]).toBeCloseTo(880, 9);
  });

  it("maps note-off (and zero-velocity note-on) to a release", () => {
    expect((factory.midiToEvent(0x80, 69, 0) as any).kind).toBe("release");
    expect((factory.midiToEvent(0x90, 69, 0) as any).kind).toBe("release");
    expect(factory.midiToEvent(0xb0, 1, 2)).toBeNull();
  });

  it("held midi notes sound until released", () => {
    const engine = makeEngine("instr 1\n out p4\nendin");
    engine.sendEvent(factory.midiToEvent(0x90, 60, 127));
    for (let i = 0; i < 10; i++) {
      engine.performBlock();
      expect(engine.spout[0]).toBe(1);
    }
    engine.sendEvent(factory.midiToEvent(0x80, 60, 0));
    engine.performBlock();
    expect(engine.spout[0]).toBe(0);
  });
});

describe("processor core", () => {
  const CORE_CFG = { sr: 8000, ksmps: 32, nchnls: 1, nchnlsIn: 0, zerodbfs: 1 };

  function makeCore(orc: string, sco: string) {
    const replies: any[] = [];
    const core = factory.createProcessorCore(CORE_CFG, (r) => replies.push(r));
    let seq = 0;
    core.post({ type: "compile-orc", seq: ++seq, payload: { source: orc } });
    if (sco) core.post({ type: "read-score", seq: ++seq, payload: { text: sco } });
    core.post({ type: "start", seq: ++seq, payload: {} });
    return { core, replies, nextSeq: () => ++seq };
  }

  it("performs exactly ksmps-aligned blocks per call", () => {
    const { core } = makeCore("instr 1\n out 1\nendin", "i 1 0 60");
    let performs = 0;
    const engine: any = core.engine;
    const original = engine.performBlock.bind(engine);
    engine.performBlock = () => { performs += 1; return original(); };
    const out = [new Float32Array(128)];
    core.process([], out);
    expect(performs).toBe(4);
    expect(core.cnt).toBe(32);
    expect(Array.from(out[0]).every((v) => v === 1)).toBe(true);
  });

  it("does not touch outputs before start", () => {
    const replies: any[] = [];
    const core = factory.createProcessorCore(CORE_CFG, (r) => replies.push(r));
    const out = [new Float32Array(16).fill(5)];
    expect(core.process([], out)).toBe(true);
    expect(Array.from(out[0]).every((v) => v === 5)).toBe(true);
  });

  it("zeroes frames after the engine finishes and freezes cnt", () => {
    const { core, replies } = makeCore("instr 1\n out 1\nendin", "i 1 0 10\ne 0.008");
    const out = [new Float32Array(128)];
    core.process([], out);
    // end at 64 frames = block 2 boundary
    expect(Array.from(out[0].slice(0, 64)).every((v) => v === 1)).toBe(true);
    expect(Array.from(out[0].slice(64)).every((v) => v === 0)).toBe(true);
    const cnt = core.cnt;
    core.process([], out);
    expect(core.cnt).toBe(cnt);
    expect(Array.from(out[0]).every((v) => v === 0)).toBe(true);
    expect(replies.filter((r) => r.type === "finished")).toHaveLength(1);
  });

  it("answers get-channel with exactly one reply in request order", () => {
    const { core, replies, nextSeq } = makeCore("instr 1\n out 1\nendin", "");
    core.post({ type: "set-channel", seq: nextSeq(), payload: { name: "a", value: 4 } });
    core.post({ type: "get-channel", seq: nextSeq(), payload: { name: "a", request_id: 1 } });
    core.post({ type: "set-channel", seq: nextSeq(), payload: { name: "a", value: 9 } });
    core.post({ type: "get-channel", seq: nextSeq(), payload: { name: "a", request_id: 2 } });
    core.applyMessages();
    const values = replies.filter((r) => r.type === "channel-value");
    expect(values.map((r) => [r.payload.request_id, r.payload.value]))
      .toEqual([[1, 4], [2, 9]]);
  });

  it("bounds the inbox at 1024 messages", () => {
    const { core } = makeCore("instr 1\n out 1\nendin", "");
    core.applyMessages(); // drain setup messages
    for (let i = 0; i < 1024; i++) {
      expect(core.post({ type: "set-channel", seq: i, payload: { name: "x", value: i } })).toBe(true);
    }
    expect(core.post({ type: "start", seq: 9999, payload: {} })).toBe(false);
    core.applyMessages();
    expect(core.post({ type: "start", seq: 10000, payload: {} })).toBe(true);
  });

  it("turns engine errors into console replies, not crashes", () => {
    const { core, replies, nextSeq } = makeCore("instr 1\n out 1\nendin", "");
    core.post({ type: "read-score", seq: nextSeq(), payload: { text: "bogus" } });
    core.post({ type: "set-channel", seq: nextSeq(), payload: { name: "", value: 0 } });
    core.applyMessages();
    const errors = replies.filter((r) => r.type === "console" && r.payload.text.startsWith("error"));
    expect(errors.length).toBeGreaterThanOrEqual(2);
  });

  it("stores and lists sandbox files via messages", () => {
    const { core, replies, nextSeq } = makeCore("instr 1\n out 1\nendin", "");
    core.post({ type: "write-file", seq: nextSeq(),
                payload: { path: "a/b.bin", data: [1, 2, 3] } });
    core.post({ type: "list-files", seq: nextSeq(),
                payload: { prefix: "a/", request_id: 7 } });
    core.applyMessages();
    const listing = replies.find((r) => r.type === "file-list");
    expect(listing.payload).toEqual({ request_id: 7, entries: [["a/b.bin", 3]] });
  });
});
