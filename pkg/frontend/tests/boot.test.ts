/** Boot path: capability probing, backend truth table, three-step worklet
 * registration, and asynchronous fallback instantiation. */
import { beforeEach, describe, expect, it, vi } from "vitest";

import {
  DEFAULT_ARTIFACTS,
  OverrideUnsupportedError,
  boot,
  decodeBase64Artifact,
  instantiateModuleAsync,
  probeCapabilities,
  selectBackend,
} from "../src/boot";

// tests/setup.ts provides the AudioWorkletNode stand-in.

function fakeContext(withWorklet: boolean): any {
  const loaded: string[] = [];
  const ctx: any = {
    sampleRate: 48000,
    destination: { id: "destination" },
    loaded,
    createScriptProcessor: (size: number, nin: number, nout: number) => ({
      bufferSize: size,
      onaudioprocess: null,
      connect: vi.fn(),
      disconnect: vi.fn(),
    }),
  };
  if (withWorklet) {
    ctx.audioWorklet = { addModule: async (url: string) => { loaded.push(url); } };
  }
  return ctx;
}

// A stub module artifact: enough factory surface for FallbackEngineNode.
const STUB_MODULE = `globalThis.__blocksynthEngineModule = {
  version: "stub",
  createEngine: () => ({}),
  createProcessorCore: (config, emit) => ({
    config, emit, posted: [],
    post(m) { this.posted.push(m); return true; },
    applyMessages() {},
    process(ins, outs) { return true; },
    running: false, cnt: 0, status: 0, engine: { config },
  }),
  parseOrchestra: () => ({}),
  parseScore: () => ({}),
  midiToEvent: () => null,
};`;

function b64Artifact(script: string): string {
  const payload = Buffer.from(script, "ascii").toString("base64");
  return `const ENGINE_MODULE_B64 = "${payload}";\n`;
}

beforeEach(() => {
  delete (globalThis as any).__blocksynthEngineModule;
  (globalThis as any).isSecureContext = true;
});

describe("capability probe", () => {
  it("detects worklet support and secure context", () => {
    expect(probeCapabilities(fakeContext(true), { isSecureContext: true }))
      .toEqual({ workletAvailable: true, secureContext: true });
    expect(probeCapabilities(fakeContext(false), { isSecureContext: false }))
      .toEqual({ workletAvailable: false, secureContext: false });
    expect(probeCapabilities(undefined, { isSecureContext: true }).workletAvailable)
      .toBe(false);
  });
});

describe("backend selection truth table", () => {
  const combos: Array<[boolean, boolean, string | null, string | "throws"]> = [
    [true, true, null, "worklet"],
    [true, false, null, "script-processor"],
    [false, true, null, "script-processor"],
    [false, false, null, "script-processor"],
    [true, true, "worklet", "worklet"],
    [true, false, "worklet", "throws"],
    [false, true, "worklet", "throws"],
    [false, false, "worklet", "throws"],
    [true, true, "script-processor", "script-processor"],
    [true, false, "script-processor", "script-processor"],
    [false, true, "script-processor", "script-processor"],
    [false, false, "script-processor", "script-processor"],
  ];
  it.each(combos)("worklet=%s secure=%s override=%s -> %s",
    (workletAvailable, secureContext, override, expected) => {
      const caps = { workletAvailable, secureContext };
      if (expected === "throws") {
        expect(() => selectBackend(caps, override as any)).toThrow(OverrideUnsupportedError);
      } else {
        expect(selectBackend(caps, override as any)).toBe(expected);
      }
    });
});

describe("worklet boot path", () => {
  it("loads the three registration scripts in order and connects", async () => {
    const ctx = fakeContext(true);
    const result = await boot(ctx, {});
    expect(result.backend).toBe("worklet");
    expect(ctx.loaded).toEqual([
      DEFAULT_ARTIFACTS.modulePayload,
      DEFAULT_ARTIFACTS.syncLoader,
      DEFAULT_ARTIFACTS.processor,
    ]);
    expect((result.handle as any).connected).toEqual([ctx.destination]);
    expect((result.handle as any).name).toBe("blocksynth-processor");
  });

  it("stamps increasing sequence numbers when posting", async () => {
    const ctx = fakeContext(true);
    const { handle } = await boot(ctx, {});
    const fake = handle as any;
    handle.post({ type: "start", seq: 0, payload: {} });
    handle.post({ type: "stop", seq: 0, payload: {} });
    const seqs = fake.port.postMessage.mock.calls.map((c: any[]) => c[0].seq);
    expect(seqs).toEqual([1, 2]);
  });
});

describe("fallback boot path", () => {
  it("decodes the base64 artifact asynchronously on insecure origins", async () => {
    (globalThis as any).isSecureContext = false;
    const ctx = fakeContext(true); // worklet exists but the page is insecure
    const loads: string[] = [];
    const result = await boot(ctx, {
      loadText: async (url) => { loads.push(url); return b64Artifact(STUB_MODULE); },
    });
    expect(result.backend).toBe("script-processor");
    expect(loads).toEqual([DEFAULT_ARTIFACTS.modulePayloadB64]);
    expect(ctx.loaded).toEqual([]); // no worklet registration happened
  });

  it("is used when the context has no worklet at all", async () => {
    const ctx = fakeContext(false);
    const result = await boot(ctx, {
      loadText: async () => b64Artifact(STUB_MODULE),
    });
    expect(result.backend).toBe("script-processor");
  });

  it("propagates load failures for a visible error banner", async () => {
    const ctx = fakeContext(false);
    await expect(boot(ctx, {
      loadText: async () => { throw new Error("404 not found"); },
    })).rejects.toThrow("404");
  });
});

describe("artifact decoding", () => {
  it("round-trips module text through the base64 artifact", () => {
    expect(decodeBase64Artifact(b64Artifact(STUB_MODULE))).toBe(STUB_MODULE);
  });

  it("rejects unknown wrappers", () => {
    expect(() => decodeBase64Artifact("var nope;\n")).toThrow("wrapper");
  });

  it("instantiateModuleAsync registers and returns the factory", async () => {
    const factory = await instantiateModuleAsync(
      "x.js", async () => b64Artifact(STUB_MODULE));
    expect(factory.version).toBe("stub");
  });
});
