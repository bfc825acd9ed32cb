/** Page entry: boot on first user gesture, then wire up the live session. */
import { boot } from "./boot.js";
import { FallbackEngineNode } from "./node.js";
import { LiveSession, bindUi, showError } from "./ui.js";
import * as wire from "./wire.js";

const STARTER_ORC = `instr 1
  amp = p4 * chan("gain")
  env = line(1, p3, 0)
  cut = chan("cutoff")
  sig = oscil(amp * env, p5) + oscil(amp * env * 0.3, p5 * 2 + cut)
  out sig, sig
endin
`;

async function startPage(): Promise<void> {
  const ui = bindUi(document);
  ui.editor.value = STARTER_ORC;
  try {
    const context = new AudioContext();
    await context.resume();
    // zerodbfs 1: note velocities and score amplitudes are normalized.
    const result = await boot(context, {
      engine: { ksmps: 32, nchnls: 2, nchnlsIn: 0, zerodbfs: 1 },
    });
    const session = new LiveSession(result.handle, ui);
    session.handle.post(wire.setChannel("gain", 1));
    session.evaluate();
    session.handle.post(wire.start());
    if (result.handle instanceof FallbackEngineNode) {
      const node = result.handle;
      setInterval(() => {
        while (session.dropouts < node.underruns) session.recordDropout();
      }, 500);
    }
  } catch (err) {
    showError(ui.errorBanner, `failed to start audio: ${(err as Error).message}`);
  }
}

const overlay = document.getElementById("start-overlay");
if (overlay) {
  overlay.addEventListener("click", () => {
    overlay.remove();
    void startPage();
  }, { once: true });
}
