/** Artifact format: golden wrappers shared with the engine package's
 * pack CLI, round-trips, and the render-scope export shim. */
import { describe, expect, it } from "vitest";

import {
  FOOTER_B64,
  FOOTER_BYTES,
  GLOBAL_EXPORT_SHIM,
  HEADER_B64,
  HEADER_BYTES,
  decodeBase64Artifact,
  decodeByteArrayArtifact,
  encodeBase64Artifact,
  encodeByteArrayArtifact,
} from "../scripts/artifact-format.mjs";

describe("golden wrappers", () => {
  it("match the documented pack format exactly", () => {
    expect(encodeBase64Artifact(Buffer.from([0x2a])))
      .toBe('const ENGINE_MODULE_B64 = "Kg==";\n');
    expect(encodeByteArrayArtifact(Buffer.from([42])))
      .toBe("const ENGINE_MODULE_BYTES = new Uint8Array([42]);\n");
    expect(HEADER_B64).toBe('const ENGINE_MODULE_B64 = "');
    expect(FOOTER_B64).toBe('";\n');
    expect(HEADER_BYTES).toBe("const ENGINE_MODULE_BYTES = new Uint8Array([");
    expect(FOOTER_BYTES).toBe("]);\n");
  });
});

describe("round-trips", () => {
  const cases = [
    new Uint8Array(0),
    new Uint8Array([0]),
    new Uint8Array([255]),
    new Uint8Array([0, 1, 2, 253, 254, 255]),
    Uint8Array.from({ length: 1024 }, (_, i) => (i * 37) % 256),
  ];

  it.each(cases.map((c, i) => [i, c]))("case %d", (_i, data) => {
    expect(new Uint8Array(decodeBase64Artifact(encodeBase64Artifact(data))))
      .toEqual(new Uint8Array(data));
    expect(new Uint8Array(decodeByteArrayArtifact(encodeByteArrayArtifact(data))))
      .toEqual(new Uint8Array(data));
  });

  it("rejects malformed byte elements", () => {
    expect(() => decodeByteArrayArtifact(
      "const ENGINE_MODULE_BYTES = new Uint8Array([256]);\n")).toThrow("range");
    expect(() => decodeByteArrayArtifact(
      "const ENGINE_MODULE_BYTES = new Uint8Array([1, 2]);\n")).toThrow("bad byte");
  });
});

describe("payload scope shim", () => {
  it("exports the module-scoped constant to the shared scope", () => {
    const artifact = encodeByteArrayArtifact(new Uint8Array([7, 8]));
    const scope: Record<string, unknown> = {};
    // the served payload is artifact + shim; a module scope keeps the
    // const local, so simulate with an isolated function scope
    new Function("globalThis", artifact + GLOBAL_EXPORT_SHIM)(scope);
    expect(Array.from(scope.ENGINE_MODULE_BYTES as Uint8Array)).toEqual([7, 8]);
  });
});
