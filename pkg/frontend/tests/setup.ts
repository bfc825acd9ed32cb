/** Test scaffolding: node/jsdom environments have no Web Audio, so the
 * worklet node base class is stubbed before any module imports. */
import { vi } from "vitest";

class FakeAudioWorkletNode {
  context: any;
  name: string;
  options: any;
  port = { postMessage: vi.fn(), onmessage: null as any };
  connected: any[] = [];

  constructor(context: any, name: string, options: any) {
    this.context = context;
    this.name = name;
    this.options = options;
  }

  connect(dest: any): void {
    this.connected.push(dest);
  }

  disconnect(): void {
    this.connected.length = 0;
  }
}

if (!(globalThis as any).AudioWorkletNode) {
  (globalThis as any).AudioWorkletNode = FakeAudioWorkletNode;
}
