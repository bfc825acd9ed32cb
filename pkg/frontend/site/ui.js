import * as wire from "./wire.js";
export class LiveSession {
    constructor(handle, ui) {
        this.dropouts = 0;
        this.lastCompileOk = null;
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
    evaluate() {
        // Compiling never stops playback; a failed compile leaves the old
        // program (and any sounding notes) untouched.
        this.handle.post(wire.compileOrc(this.ui.editor.value));
    }
    sendScore() {
        this.handle.post(wire.readScore(this.ui.scoreInput.value));
    }
    noteOn(note, velocity = 100) {
        this.handle.post(wire.midi(0x90, note, velocity));
    }
    noteOff(note) {
        this.handle.post(wire.midi(0x80, note, 0));
    }
    recordDropout() {
        this.dropouts += 1;
        this.ui.dropoutCounter.textContent = String(this.dropouts);
    }
    appendConsole(text) {
        const line = this.ui.consolePane.ownerDocument.createElement("div");
        line.textContent = text;
        this.ui.consolePane.appendChild(line);
        this.ui.consolePane.scrollTop = this.ui.consolePane.scrollHeight;
    }
    onReply(reply) {
        switch (reply.type) {
            case "console":
                this.appendConsole(String(reply.payload.text));
                break;
            case "compile-result": {
                const p = reply.payload;
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
export function showError(banner, message) {
    banner.textContent = message;
    banner.hidden = false;
}
/** Collect the UI elements by id from a built page. */
export function bindUi(doc) {
    const get = (id) => {
        const el = doc.getElementById(id);
        if (!el)
            throw new Error(`missing element #${id}`);
        return el;
    };
    const sliders = [
        { channel: "cutoff", input: get("slider-cutoff") },
        { channel: "gain", input: get("slider-gain") },
    ];
    const keys = Array.from(doc.querySelectorAll("[data-note]")).map((button) => ({ note: Number(button.dataset.note), button }));
    return {
        editor: get("editor"),
        evaluateButton: get("evaluate"),
        startButton: get("start"),
        stopButton: get("stop"),
        scoreInput: get("score-input"),
        scoreButton: get("score-send"),
        sliders,
        keys,
        consolePane: get("console"),
        backendBadge: get("backend-badge"),
        dropoutCounter: get("dropout-counter"),
        errorBanner: get("error-banner"),
    };
}
