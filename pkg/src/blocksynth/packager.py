"""Binary-module packaging: encode a module as an embeddable text artifact
(base64 string or decimal byte-array literal), measure file size,
compressed transfer size, and decode latency, and emit loader scripts for
synchronous (render-scope) and asynchronous (control-scope) loading.
"""
from __future__ import annotations

import base64
import binascii
import enum
import json
import statistics
import time
import zlib
from dataclasses import dataclass

from .errors import MalformedPayloadError

__all__ = [
    "Encoding",
    "PackagedModule",
    "EncodingStats",
    "BenchReport",
    "LoaderArtifacts",
    "encode",
    "decode",
    "load_artifact",
    "measure",
    "bench_report",
    "parse_report",
    "loader_artifacts",
]


class Encoding(enum.Enum):
    BASE64 = "base64"
    BYTE_ARRAY = "bytes"


# Fixed wrapper text; each artifact declares exactly one named constant.
# Golden-tested: changing these strings breaks published artifacts.
HEADER_BASE64 = 'const ENGINE_MODULE_B64 = "'
FOOTER_BASE64 = '";\n'
HEADER_BYTES = "const ENGINE_MODULE_BYTES = new Uint8Array(["
FOOTER_BYTES = "]);\n"

_WRAPPERS = {
    Encoding.BASE64: (HEADER_BASE64, FOOTER_BASE64),
    Encoding.BYTE_ARRAY: (HEADER_BYTES, FOOTER_BYTES),
}


@dataclass(frozen=True)
class PackagedModule:
    """A binary module rendered as a text source artifact."""

    encoding: Encoding
    payload_text: str
    original_len: int
    header: str
    footer: str

    def text(self) -> str:
        """The complete artifact: header + payload + footer."""
        return self.header + self.payload_text + self.footer


def encode(data: bytes, encoding: Encoding) -> PackagedModule:
    """Deterministically encode bytes into a text artifact.

    Base64 uses the standard alphabet with '=' padding and no line
    wrapping; the byte-array form is comma-separated unsigned decimal
    values with no whitespace.
    """
    if encoding is Encoding.BASE64:
        payload = base64.b64encode(data).decode("ascii")
    else:
        payload = ",".join(map(str, data))
    header, footer = _WRAPPERS[encoding]
    return PackagedModule(encoding, payload, len(data), header, footer)


def decode(pkg: PackagedModule) -> bytes:
    """Recover the original bytes; raises MalformedPayloadError on any
    invalid character, padding, or out-of-range value."""
    return _decode_payload(pkg.payload_text, pkg.encoding)


def _decode_payload(payload: str, encoding: Encoding) -> bytes:
    if encoding is Encoding.BASE64:
        if len(payload) % 4 != 0:
            raise MalformedPayloadError("base64 payload length not a multiple of 4")
        try:
            return base64.b64decode(payload.encode("ascii"), validate=True)
        except (binascii.Error, UnicodeEncodeError) as exc:
            raise MalformedPayloadError(f"bad base64 payload: {exc}") from exc
    if payload == "":
        return b""
    out = bytearray()
    for element in payload.split(","):
        if not element or not element.isdigit():
            raise MalformedPayloadError(f"bad byte element: {element!r}")
        value = int(element)
        if value > 255:
            raise MalformedPayloadError(f"byte value out of range: {value}")
        out.append(value)
    return bytes(out)


def load_artifact(text: str) -> PackagedModule:
    """Parse a full artifact back into a PackagedModule by recognizing the
    fixed wrapper of either encoding."""
    for encoding, (header, footer) in _WRAPPERS.items():
        if text.startswith(header) and text.endswith(footer):
            payload = text[len(header):len(text) - len(footer)]
            original = _decode_payload(payload, encoding)  # validates
            return PackagedModule(encoding, payload, len(original), header, footer)
    raise MalformedPayloadError("unrecognized artifact wrapper")


# --- measurement -------------------------------------------------------------

@dataclass(frozen=True)
class EncodingStats:
    """Table row for one encoding: artifact size on disk, deflate-compressed
    transfer size, and decode-to-bytes latency."""

    file_size: int
    network_size: int
    decode_time_ns: int


def _median_time_ns(fn, runs: int) -> int:
    times = []
    for _ in range(runs):
        t0 = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - t0)
    return int(statistics.median(times))


def measure(data: bytes, runs: int = 7) -> tuple[EncodingStats, EncodingStats]:
    """Measure both encodings of the same input. Returns (base64 stats,
    byte-array stats).

    decode_time is the runtime cost of getting bytes back: base64 pays a
    real decode; the byte-array literal is parsed when the artifact script
    loads, so its runtime cost is a plain byte copy and is timed as one.
    """
    if runs < 5:
        raise ValueError("need at least 5 timing runs for a stable median")
    b64 = encode(data, Encoding.BASE64)
    lit = encode(data, Encoding.BYTE_ARRAY)
    b64_text = b64.text().encode("ascii")
    lit_text = lit.text().encode("ascii")
    b64_payload = b64.payload_text
    parsed = bytearray(data)  # the literal after script load: already bytes
    b64_stats = EncodingStats(
        file_size=len(b64_text),
        network_size=len(zlib.compress(b64_text)),
        decode_time_ns=_median_time_ns(
            lambda: base64.b64decode(b64_payload.encode("ascii"), validate=True),
            runs),
    )
    lit_stats = EncodingStats(
        file_size=len(lit_text),
        network_size=len(zlib.compress(lit_text)),
        decode_time_ns=_median_time_ns(lambda: bytes(parsed), runs),
    )
    return b64_stats, lit_stats


_ROWS = ("file_size", "network_size", "decode_time_ns")


@dataclass(frozen=True)
class BenchReport:
    original_len: int
    base64: EncodingStats
    byte_array: EncodingStats

    def ratios(self) -> dict[str, float]:
        """byte_array / base64 for every row."""
        out = {}
        for row in _ROWS:
            b = getattr(self.base64, row)
            out[row] = getattr(self.byte_array, row) / b if b else float("inf")
        return out

    def to_text(self) -> str:
        ratios = self.ratios()
        lines = [
            f"input: {self.original_len} bytes",
            f"{'property':<16}{'base64':>14}{'byte-array':>14}{'ratio':>8}",
        ]
        for row in _ROWS:
            lines.append(
                f"{row:<16}{getattr(self.base64, row):>14}"
                f"{getattr(self.byte_array, row):>14}{ratios[row]:>8.2f}"
            )
        return "\n".join(lines)

    def to_json(self) -> str:
        ratios = self.ratios()
        doc = {
            "original_len": self.original_len,
            "rows": {
                row: {
                    "base64": getattr(self.base64, row),
                    "byte_array": getattr(self.byte_array, row),
                    "ratio": ratios[row],
                }
                for row in _ROWS
            },
        }
        return json.dumps(doc, indent=2)


def bench_report(data: bytes, runs: int = 7) -> BenchReport:
    """Measure both encodings and bundle the comparison."""
    b64_stats, lit_stats = measure(data, runs)
    return BenchReport(len(data), b64_stats, lit_stats)


def parse_report(text: str) -> BenchReport:
    """Inverse of BenchReport.to_json (ratios are recomputed)."""
    doc = json.loads(text)
    rows = doc["rows"]

    def stats(which: str) -> EncodingStats:
        return EncodingStats(*(rows[row][which] for row in _ROWS))

    return BenchReport(doc["original_len"], stats("base64"), stats("byte_array"))


# --- loader artifacts -----------------------------------------------------------

_SYNC_LOADER = """\
/* Render-scope loader. The byte-array module artifact must have been
 * evaluated in this scope already (it declares ENGINE_MODULE_BYTES);
 * instantiation here is synchronous because the render scope has no
 * asynchronous loading facilities. */
function instantiateModuleSync(bytes) {
  return createEngineModule(bytes);
}
const ENGINE_MODULE = instantiateModuleSync(ENGINE_MODULE_BYTES);
"""

_ASYNC_LOADER = """\
/* Control-scope loader. Decodes the base64 module artifact
 * (ENGINE_MODULE_B64) and instantiates it asynchronously, as required
 * when the inline fallback backend runs in the page context. */
async function instantiateModuleAsync(b64) {
  const bytes = decodeBase64(b64);
  return await createEngineModuleAsync(bytes);
}
const ENGINE_MODULE_PROMISE = instantiateModuleAsync(ENGINE_MODULE_B64);
"""


@dataclass(frozen=True)
class LoaderArtifacts:
    """Dual loading artifacts: a byte-array payload with a synchronous
    render-scope loader, and a base64 payload with an asynchronous
    control-scope loader."""

    sync_payload: PackagedModule  # byte-array literal
    sync_loader_script: str
    async_payload: PackagedModule  # base64
    async_loader_script: str


def loader_artifacts(data: bytes) -> LoaderArtifacts:
    """Produce both loading paths for one binary module."""
    return LoaderArtifacts(
        sync_payload=encode(data, Encoding.BYTE_ARRAY),
        sync_loader_script=_SYNC_LOADER,
        async_payload=encode(data, Encoding.BASE64),
        async_loader_script=_ASYNC_LOADER,
    )
