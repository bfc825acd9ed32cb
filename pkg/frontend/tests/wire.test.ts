/** Wire schema compatibility, including fixtures generated by the engine
 * package's canonical encoder. */
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import "../src/engine-module";
import * as wire from "../src/wire";

const factory: EngineModuleFactory = (globalThis as any).__blocksynthEngineModule;

const fixtures = JSON.parse(readFileSync(
  join(dirname(fileURLToPath(import.meta.url)), "fixtures", "wire-messages.json"),
  "utf8",
));

describe("builders", () => {
  it("produce schema-valid messages", () => {
    const msgs = [
      wire.compileOrc("instr 1\nendin"),
      wire.readScore("i 1 0 1"),
      wire.event({ kind: "note", instr: 1, start: 0, dur: 1, pfields: [1], key: null }),
      wire.setChannel("a", 1),
      wire.getChannel("a", 2),
      wire.midi(0x90, 60, 100),
      wire.writeFile("f", [1, 2]),
      wire.listFiles("", 3),
      wire.start(),
      wire.stop(),
      wire.reset(),
    ];
    for (const m of msgs) expect(wire.isMessage(m)).toBe(true);
    expect(new Set(msgs.map((m) => m.type)).size).toBe(wire.MESSAGE_TYPES.length);
  });

  it("reject malformed shapes", () => {
    expect(wire.isMessage({ type: "nope", seq: 1, payload: {} })).toBe(false);
    expect(wire.isMessage({ type: "start", payload: {} })).toBe(false);
    expect(wire.isReply({ type: "console" })).toBe(false);
    expect(wire.isReply(null)).toBe(false);
  });
});

describe("fixtures from the engine package", () => {
  it("every fixture message validates against this schema", () => {
    for (const msg of fixtures.messages) {
      expect(wire.isMessage(msg), msg.type).toBe(true);
    }
    const types = fixtures.messages.map((m: wire.WireMessage) => m.type);
    for (const t of wire.MESSAGE_TYPES) expect(types).toContain(t);
  });

  it("every fixture reply validates against this schema", () => {
    for (const reply of fixtures.replies) {
      expect(wire.isReply(reply), reply.type).toBe(true);
    }
    const types = fixtures.replies.map((r: wire.WireReply) => r.type);
    for (const t of wire.REPLY_TYPES) expect(types).toContain(t);
  });

  it("the processor core accepts the full fixture conversation", () => {
    const replies: wire.WireReply[] = [];
    const core = factory.createProcessorCore(
      { sr: 8000, ksmps: 4, nchnls: 1, nchnlsIn: 0, zerodbfs: 32768 },
      (r) => replies.push(r as wire.WireReply),
    );
    for (const msg of fixtures.messages) core.post(msg);
    core.applyMessages();
    const byType = new Map<string, wire.WireReply[]>();
    for (const r of replies) {
      byType.set(r.type, [...(byType.get(r.type) ?? []), r]);
    }
    // compile-orc fixture compiles cleanly
    expect((byType.get("compile-result")![0].payload as any).ok).toBe(true);
    // get-channel fixture is answered with the set-channel fixture's value
    const value = byType.get("channel-value")![0].payload as any;
    expect(value).toEqual({ request_id: 3, value: 1200.5 });
    // write-file/list-files fixtures round-trip through the sandbox fs
    const listing = byType.get("file-list")![0].payload as any;
    expect(listing).toEqual({ request_id: 4, entries: [["assets/a.bin", 4]] });
    // the reset fixture leaves a fresh engine
    expect((core.engine as any).blockIndex).toBe(0);
  });

  it("fixture note events drive the engine", () => {
    const core = factory.createProcessorCore(
      { sr: 8000, ksmps: 4, nchnls: 1, nchnlsIn: 0, zerodbfs: 1 },
      () => {});
    core.post(fixtures.messages.find((m: any) => m.type === "compile-orc"));
    core.post({ type: "event", seq: 90, payload: {
      event: { kind: "note", instr: 1, start: 0, dur: 1, pfields: [0.5, 440], key: null },
    } });
    core.post({ type: "start", seq: 91, payload: {} });
    const out = [new Float32Array(64)];
    core.process([], out);
    expect(Math.max(...Array.from(out[0]).map(Math.abs))).toBeGreaterThan(0.1);
  });
});
