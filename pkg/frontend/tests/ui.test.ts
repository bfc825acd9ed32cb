// @vitest-environment jsdom
/** Live-coding UI: 1:1 action-to-message mapping, console mirroring, and
 * the secondary acceptance scenarios (badge, audible evaluate, broken
 * code leaving audio uninterrupted). */
import { beforeEach, describe, expect, it } from "vitest";

import "../src/engine-module";
import { FallbackEngineNode } from "../src/node";
import { LiveSession, bindUi, showError } from "../src/ui";
import type { WireMessage, WireReply } from "../src/wire";

const factory: EngineModuleFactory = (globalThis as any).__blocksynthEngineModule;

const PAGE = `
  <div id="error-banner" hidden></div>
  <span id="backend-badge"></span>
  <span id="dropout-counter">0</span>
  <textarea id="editor"></textarea>
  <button id="evaluate"></button>
  <button id="start"></button>
  <button id="stop"></button>
  <input id="score-input" value="i 1 0 2 0.5 220">
  <button id="score-send"></button>
  <input id="slider-cutoff" type="range" min="0" max="2000" value="0">
  <input id="slider-gain" type="range" min="0" max="1" step="0.01" value="1">
  <button data-note="60"></button>
  <button data-note="72"></button>
  <div id="console"></div>
`;

class RecordingHandle {
  backend = "worklet" as const;
  posted: WireMessage[] = [];
  handlers: Array<(r: WireReply) => void> = [];
  seq = 0;
  post(msg: WireMessage): number {
    this.seq += 1;
    this.posted.push({ ...msg, seq: this.seq });
    return this.seq;
  }
  onReply(h: (r: WireReply) => void): void { this.handlers.push(h); }
  emit(r: WireReply): void { for (const h of this.handlers) h(r); }
  connect(): void {}
  disconnect(): void {}
}

function press(el: HTMLElement, type = "click"): void {
  el.dispatchEvent(new window.Event(type, { bubbles: true }));
}

beforeEach(() => {
  document.body.innerHTML = PAGE;
});

describe("action-to-message mapping", () => {
  it("maps each control to exactly one message type", () => {
    const handle = new RecordingHandle();
    const ui = bindUi(document);
    ui.editor.value = "instr 1\n out 1\nendin";
    const session = new LiveSession(handle as any, ui);
    press(ui.evaluateButton);
    press(ui.startButton);
    press(ui.scoreButton);
    ui.sliders[0].input.value = "440";
    press(ui.sliders[0].input, "input");
    press(ui.keys[0].button, "mousedown");
    press(ui.keys[0].button, "mouseup");
    press(ui.stopButton);
    expect(handle.posted.map((m) => m.type)).toEqual([
      "compile-orc", "start", "read-score", "set-channel", "midi", "midi", "stop",
    ]);
    expect(handle.posted[0].payload).toEqual({ source: "instr 1\n out 1\nendin" });
    expect(handle.posted[3].payload).toEqual({ name: "cutoff", value: 440 });
    expect(handle.posted[4].payload).toEqual({ status: 0x90, d1: 60, d2: 100 });
    expect(handle.posted[5].payload).toEqual({ status: 0x80, d1: 60, d2: 0 });
    expect(session.lastCompileOk).toBeNull(); // no reply yet: UI holds no engine state
  });

  it("shows the backend badge from the handle", () => {
    const handle = new RecordingHandle();
    new LiveSession(handle as any, bindUi(document));
    expect(document.getElementById("backend-badge")!.textContent).toBe("worklet");
  });

  it("mirrors console replies and compile diagnostics", () => {
    const handle = new RecordingHandle();
    const session = new LiveSession(handle as any, bindUi(document));
    handle.emit({ type: "console", payload: { text: "compiled instr 1" } });
    handle.emit({ type: "compile-result", payload: {
      ok: false, diagnostics: [[2, 6, "unknown identifier 'x'"]],
    } });
    const consoleText = document.getElementById("console")!.textContent!;
    expect(consoleText).toContain("compiled instr 1");
    expect(consoleText).toContain("line 2:6: unknown identifier 'x'");
    expect(session.lastCompileOk).toBe(false);
  });

  it("counts dropouts visibly", () => {
    const handle = new RecordingHandle();
    const session = new LiveSession(handle as any, bindUi(document));
    session.recordDropout();
    session.recordDropout();
    expect(document.getElementById("dropout-counter")!.textContent).toBe("2");
  });

  it("shows a visible banner on boot failure", () => {
    const banner = document.getElementById("error-banner")!;
    showError(banner, "failed to start audio: no module");
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toContain("no module");
  });
});

describe("live session against the real engine (fallback backend)", () => {
  function makeLiveSession() {
    const ctx: any = {
      sampleRate: 8000,
      destination: {},
      createScriptProcessor: () => ({ connect() {}, disconnect() {}, onaudioprocess: null }),
    };
    const handle = new FallbackEngineNode(
      ctx, factory, { ksmps: 8, nchnls: 1, nchnlsIn: 0, zerodbfs: 1 });
    const ui = bindUi(document);
    ui.editor.value = "instr 1\n out oscil(p4 * 0.5, p5)\nendin";
    const session = new LiveSession(handle, ui);
    return { session, handle, ui };
  }

  const rms = (xs: Float32Array) =>
    Math.sqrt(xs.reduce((a, v) => a + v * v, 0) / xs.length);

  it("evaluates a sine instrument audibly via a note key", () => {
    const { session, handle, ui } = makeLiveSession();
    press(ui.evaluateButton);
    press(ui.startButton);
    press(ui.keys[0].button, "mousedown");
    const out = handle.pump(64);
    expect(rms(out[0])).toBeGreaterThan(0.05);
    expect(document.getElementById("console")!.textContent).toContain("compiled instr 1");
    expect(session.lastCompileOk).toBe(true);
    expect(document.getElementById("backend-badge")!.textContent).toBe("script-processor");
  });

  it("keeps audio uninterrupted when a broken evaluate fails", () => {
    const { session, handle, ui } = makeLiveSession();
    press(ui.evaluateButton);
    press(ui.startButton);
    press(ui.keys[0].button, "mousedown");
    const before = rms(handle.pump(64)[0]);
    expect(before).toBeGreaterThan(0.05);
    ui.editor.value = "instr 1\n out broken_name\nendin";
    press(ui.evaluateButton);
    const after = handle.pump(64)[0];
    expect(rms(after)).toBeGreaterThan(0.05); // old program keeps sounding
    expect(session.lastCompileOk).toBe(false);
    expect(document.getElementById("console")!.textContent).toContain("unknown identifier");
  });

  it("slider moves change the sound on the next block", () => {
    const { handle, ui } = makeLiveSession();
    ui.editor.value = 'instr 1\n out chan("gain")\nendin';
    press(ui.evaluateButton);
    press(ui.startButton);
    press(ui.scoreButton); // i 1 0 2 ...
    handle.pump(8);
    ui.sliders[1].input.value = "0.75";
    press(ui.sliders[1].input, "input");
    const out = handle.pump(8);
    expect(Array.from(out[0])).toEqual(new Array(8).fill(0.75));
  });
});
