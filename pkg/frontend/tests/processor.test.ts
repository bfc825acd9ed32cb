/** The worklet processor wrapper registered in the render scope. */
import { beforeAll, describe, expect, it, vi } from "vitest";

import "../src/engine-module";

const registered: Array<{ name: string; ctor: any }> = [];

beforeAll(async () => {
  (globalThis as any).AudioWorkletProcessor = class {
    port = {
      postMessage: vi.fn(),
      onmessage: null as null | ((e: { data: unknown }) => void),
    };
  };
  (globalThis as any).registerProcessor = (name: string, ctor: any) =>
    registered.push({ name, ctor });
  (globalThis as any).ENGINE_MODULE = (globalThis as any).__blocksynthEngineModule;
  (globalThis as any).sampleRate = 8000;
  await import("../src/processor");
});

function makeProcessor(options: Record<string, unknown> = {}) {
  const proc = new registered[0].ctor({ processorOptions: {
    ksmps: 8, nchnls: 1, nchnlsIn: 0, zerodbfs: 1, ...options,
  } });
  const post = (type: string, payload: Record<string, unknown>, seq: number) =>
    proc.port.onmessage!({ data: { type, seq, payload } });
  return { proc, post };
}

describe("registration", () => {
  it("registers under the expected processor name", () => {
    expect(registered).toHaveLength(1);
    expect(registered[0].name).toBe("blocksynth-processor");
  });
});

describe("process", () => {
  it("renders audio after compile + score + start over the port", () => {
    const { proc, post } = makeProcessor();
    post("compile-orc", { source: "instr 1\n out oscil(0.5, 440)\nendin" }, 1);
    post("read-score", { text: "i 1 0 1" }, 2);
    post("start", {}, 3);
    const out = [new Float32Array(64)];
    expect(proc.process([[]], [out])).toBe(true);
    const rms = Math.sqrt(out[0].reduce((a: number, v: number) => a + v * v, 0) / 64);
    expect(rms).toBeGreaterThan(0.1);
    // replies (console + compile result) went back over the port
    const types = proc.port.postMessage.mock.calls.map((c: any[]) => c[0].type);
    expect(types).toContain("compile-result");
    expect(types).toContain("console");
  });

  it("defaults the engine rate to the scope sample rate", () => {
    const { proc, post } = makeProcessor();
    post("compile-orc", { source: "instr 1\n out sr\nendin" }, 1);
    post("read-score", { text: "i 1 0 1" }, 2);
    post("start", {}, 3);
    const out = [new Float32Array(8)];
    proc.process([[]], [out]);
    expect(out[0][0]).toBe(8000);
  });

  it("reports a full inbox instead of blocking", () => {
    const { proc, post } = makeProcessor();
    for (let i = 0; i < 1024; i++) post("set-channel", { name: "x", value: i }, i);
    post("set-channel", { name: "x", value: -1 }, 2000);
    const texts = proc.port.postMessage.mock.calls
      .map((c: any[]) => c[0])
      .filter((r: any) => r.type === "console")
      .map((r: any) => r.payload.text);
    expect(texts.some((t: string) => t.includes("inbox full"))).toBe(true);
  });
});
