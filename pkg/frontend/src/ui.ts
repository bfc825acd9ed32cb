/**
 * Live-coding UI: editor, run controls, score input, channel sliders,
 * MIDI keys, console pane, backend badge, and a dropout counter. Every
 * action maps 1:1 onto one control message; the UI holds no engine state
 * beyond mirrors of replies.
 */
import { EngineHandle } from "./node.js";
import * as wire from "./wire.js";

export interface UiElements {
  editor: HTMLTextAreaElement;
  evaluateButton: HTMLButtonElement;
  startButton: HTMLButtonElement;
  stopButton: HTMLButtonElement;
  scoreInput: HTMLInputElement;
  scoreButton: HTMLButtonElement;
  sliders: Array<{ channel: string; input: HTMLInputElement }>;
  keys: Array<{ note: number; button: HTMLButtonElement }>;
  consolePane: HTMLElement;
  backendBadge: HTMLElement;
  dropoutCounter: HTMLElement;
  errorBanner: HTMLElement;
}

export class LiveSession {
  readonly handle: EngineHandle;
  readonly ui: UiElements;
  dropouts = 0;
  lastCompileOk: boolean | null = null;

  constructor(handle: EngineHandle, ui: UiElements) {
    this.handle = handle;
    this.ui = ui;
    ui.backendBadge.textContent = handle.backend;
    handle.onReply((reply) => this.onReply(reply));

    ui.evaluateButton.addEventListener("click", () => this.evaluate());
    ui.startButton.addEventListener("click", () => this.handle.post(wire.start()));
    ui.stopButton.addEventListener("click", () => this.handle.post(wire.stop()));
    ui.scoreButton.addEventListener("click", () => this.sendScore());
    for (const { channel, input } of ui.sliders) {
      input.addEventListener("input", () => {
        this.handle.post(wire.setChannel(channel, Number(input.value)));
      });
    }
    for (const { note, button } of ui.keys) {
      button.addEventListener("mousedown", () => this.noteOn(note));
      button.addEventListener("mouseup", () => this.noteOff(note));
    }
  }

  evaluate(): void {
    // Compiling never stops playback; a failed compile leaves the old
    // program (and any sounding notes) untouched.
    this.handle.post(wire.compileOrc(this.ui.editor.value));
  }

  sendScore(): void {
    this.handle.post(wire.readScore(this.ui.scoreInput.value));
  }

  noteOn(note: number, velocity = 100): void {
    this.handle.post(wire.midi(0x90, note, velocity));
  }

  noteOff(note: number): void {
    this.handle.post(wire.midi(0x80, note, 0));
  }

  recordDropout(): void {
    this.dropouts += 1;
    this.ui.dropoutCounter.textContent = String(this.dropouts);
  }

  private appendConsole(text: string): void {
    const line = this.ui.consolePane.ownerDocument.createElement("div");
    line.textContent = text;
    this.ui.consolePane.appendChild(line);
    this.ui.consolePane.scrollTop = this.ui.consolePane.scrollHeight;
  }

  private onReply(reply: wire.WireReply): void {
    switch (reply.type) {
      case "console":
        this.appendConsole(String((reply.payload as any).text));
        break;
      case "compile-result": {
        const p = reply.payload as { ok: boolean; diagnostics: [number, number, string][] };
        this.lastCompileOk = p.ok;
        if (!p.ok) {
          for (const [line, column, message] of p.diagnostics) {
            this.appendConsole(`line ${line}:${column}: ${message}`);
          }
        }
        break;
      }
      case "finished":
        this.appendConsole("performance finished");
        break;
      default:
        break;
    }
  }
}

export function showError(banner: HTMLElement, message: string): void {
  banner.textContent = message;
  banner.hidden = false;
}

/** Collect the UI elements by id from a built page. */
export function bindUi(doc: Document): UiElements {
  const get = <T extends HTMLElement>(id: string): T => {
    const el = doc.getElementById(id);
    if (!el) throw new Error(`missing element #${id}`);
    return el as T;
  };
  const sliders = [
    { channel: "cutoff", input: get<HTMLInputElement>("slider-cutoff") },
    { channel: "gain", input: get<HTMLInputElement>("slider-gain") },
  ];
  const keys = Array.from(doc.querySelectorAll<HTMLButtonElement>("[data-note]")).map(
    (button) => ({ note: Number(button.dataset.note), button }),
  );
  return {
    editor: get<HTMLTextAreaElement>("editor"),
    evaluateButton: get<HTMLButtonElement>("evaluate"),
    startButton: get<HTMLButtonElement>("start"),
    stopButton: get<HTMLButtonElement>("stop"),
    scoreInput: get<HTMLInputElement>("score-input"),
    scoreButton: get<HTMLButtonElement>("score-send"),
    sliders,
    keys,
    consolePane: get("console"),
    backendBadge: get("backend-badge"),
    dropoutCounter: get("dropout-counter"),
    errorBanner: get("error-banner"),
  };
}
