"""Module packaging: encodings, round-trips, measurement, bench report."""
from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blocksynth import MalformedPayloadError
from blocksynth.packager import (
    BenchReport,
    Encoding,
    bench_report,
    decode,
    encode,
    load_artifact,
    loader_artifacts,
    measure,
    parse_report,
)


def test_base64_of_three_zero_bytes():
    assert encode(b"\x00\x00\x00", Encoding.BASE64).payload_text == "AAAA"


def test_byte_array_literal_format():
    assert encode(b"\x01\x02\x03", Encoding.BYTE_ARRAY).payload_text == "1,2,3"


def test_empty_input_both_encodings():
    for enc in Encoding:
        pkg = encode(b"", enc)
        assert pkg.payload_text == ""
        assert decode(pkg) == b""


def test_decode_inverse_of_encode_examples():
    pkg = encode(b"\x00\x00\x00", Encoding.BASE64)
    assert decode(pkg) == b"\x00\x00\x00"


def test_all_single_byte_inputs_roundtrip():
    for b in range(256):
        data = bytes([b])
        for enc in Encoding:
            assert decode(encode(data, enc)) == data


@given(st.binary(max_size=8192))
@settings(max_examples=200)
def test_roundtrip_random_binary(data):
    for enc in Encoding:
        assert decode(encode(data, enc)) == data


def test_base64_payload_length_multiple_of_four():
    for n in range(0, 70):
        payload = encode(bytes(n), Encoding.BASE64).payload_text
        assert len(payload) % 4 == 0
        assert len(payload) == 4 * math.ceil(n / 3)


@pytest.mark.parametrize("payload,encoding", [
    ("256", Encoding.BYTE_ARRAY),
    ("1,,2", Encoding.BYTE_ARRAY),
    ("1, 2", Encoding.BYTE_ARRAY),
    ("-1", Encoding.BYTE_ARRAY),
    ("1,2,", Encoding.BYTE_ARRAY),
    ("A", Encoding.BASE64),
    ("AAA", Encoding.BASE64),
    ("A!==", Encoding.BASE64),
    ("====", Encoding.BASE64),
])
def test_malformed_payloads_rejected(payload, encoding):
    pkg = encode(b"", encoding)
    broken = type(pkg)(encoding, payload, 0, pkg.header, pkg.footer)
    with pytest.raises(MalformedPayloadError):
        decode(broken)


def test_wrapper_strings_are_golden():
    b64 = encode(b"\x2a", Encoding.BASE64)
    lit = encode(b"\x2a", Encoding.BYTE_ARRAY)
    assert b64.text() == 'const ENGINE_MODULE_B64 = "Kg==";\n'
    assert lit.text() == "const ENGINE_MODULE_BYTES = new Uint8Array([42]);\n"


def test_load_artifact_roundtrip_both_encodings():
    data = bytes(range(200))
    for enc in Encoding:
        pkg = encode(data, enc)
        again = load_artifact(pkg.text())
        assert again == pkg
        assert decode(again) == data


def test_load_artifact_rejects_unknown_wrapper():
    with pytest.raises(MalformedPayloadError):
        load_artifact("var x = 1;\n")


def test_file_size_is_wrapper_plus_payload():
    import numpy as np
    data = np.random.default_rng(0).integers(0, 256, 5000, dtype=np.uint8).tobytes()
    b64_stats, lit_stats = measure(data, runs=5)
    pkg = encode(data, Encoding.BASE64)
    wrapper = len(pkg.header) + len(pkg.footer)
    assert b64_stats.file_size == wrapper + 4 * math.ceil(len(data) / 3)
    assert lit_stats.file_size == len(encode(data, Encoding.BYTE_ARRAY).text())
    assert b64_stats.file_size >= len(data)
    assert lit_stats.file_size >= len(data)


def test_byte_literal_length_matches_exact_expectation():
    # Oracle: expected characters per uniformly random byte, computed by
    # enumerating the decimal digit count of every byte value.
    digits = sum(len(str(v)) for v in range(256)) / 256
    import numpy as np
    rng = np.random.default_rng(42)
    n = 8192
    data = rng.integers(0, 256, n, dtype=np.uint8).tobytes()
    payload_len = len(encode(data, Encoding.BYTE_ARRAY).payload_text)
    expected = digits * n + (n - 1)
    assert abs(payload_len - expected) < 0.02 * expected
    assert 3.4 * n <= payload_len <= 3.7 * n


def test_literal_bigger_on_disk_but_decodes_faster():
    import numpy as np
    data = np.random.default_rng(1).integers(0, 256, 1 << 16, dtype=np.uint8).tobytes()
    b64_stats, lit_stats = measure(data, runs=5)
    assert lit_stats.file_size > b64_stats.file_size
    assert lit_stats.decode_time_ns < b64_stats.decode_time_ns


def test_measure_requires_five_runs():
    with pytest.raises(ValueError):
        measure(b"x", runs=2)


def test_bench_report_rows_and_ratios():
    report = bench_report(b"hello world" * 100, runs=5)
    ratios = report.ratios()
    assert set(ratios) == {"file_size", "network_size", "decode_time_ns"}
    assert ratios["file_size"] == report.byte_array.file_size / report.base64.file_size
    text = report.to_text()
    for row in ("file_size", "network_size", "decode_time_ns"):
        assert row in text


def test_bench_report_json_roundtrip():
    report = bench_report(bytes(range(256)) * 16, runs=5)
    again = parse_report(report.to_json())
    assert again == report


def test_loader_artifacts_dual_paths():
    data = b"\x00asm\x01\x00\x00\x00"
    arts = loader_artifacts(data)
    assert arts.sync_payload.encoding is Encoding.BYTE_ARRAY
    assert arts.async_payload.encoding is Encoding.BASE64
    assert decode(arts.sync_payload) == data
    assert decode(arts.async_payload) == data
    assert "instantiateModuleSync" in arts.sync_loader_script
    assert "async function instantiateModuleAsync" in arts.async_loader_script
