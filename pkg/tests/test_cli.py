"""CLI entry points: pack, sim, render."""
from __future__ import annotations

import json

import numpy as np
import pytest
import scipy.io.wavfile

from blocksynth.cli import pack_main, render_main, sim_main
from blocksynth.packager import parse_report


@pytest.fixture
def module_file(tmp_path):
    path = tmp_path / "module.bin"
    path.write_bytes(bytes(range(256)) * 8)
    return path


def test_pack_encode_decode_roundtrip(tmp_path, module_file, capsys):
    for fmt in ("base64", "bytes"):
        artifact = tmp_path / f"mod.{fmt}.js"
        out = tmp_path / f"mod.{fmt}.bin"
        assert pack_main(["encode", "--in", str(module_file),
                          "--format", fmt, "--out", str(artifact)]) == 0
        assert pack_main(["decode", "--in", str(artifact),
                          "--out", str(out)]) == 0
        assert out.read_bytes() == module_file.read_bytes()


def test_pack_decode_malformed_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.js"
    bad.write_text('const ENGINE_MODULE_BYTES = new Uint8Array([999]);\n')
    rc = pack_main(["decode", "--in", str(bad), "--out", str(tmp_path / "o")])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_pack_decode_unknown_wrapper_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.js"
    bad.write_text("not an artifact")
    assert pack_main(["decode", "--in", str(bad), "--out", str(tmp_path / "o")]) == 2


def test_pack_bench_json_parses(module_file, capsys):
    assert pack_main(["bench", "--in", str(module_file), "--json"]) == 0
    report = parse_report(capsys.readouterr().out)
    assert report.original_len == 256 * 8


def test_pack_bench_text(module_file, capsys):
    assert pack_main(["bench", "--in", str(module_file)]) == 0
    out = capsys.readouterr().out
    assert "file_size" in out and "ratio" in out


@pytest.fixture
def orc_sco(tmp_path):
    orc = tmp_path / "tone.orc"
    orc.write_text("instr 1\n out oscil(p4, p5)\nendin\n")
    sco = tmp_path / "tone.sco"
    sco.write_text("i 1 0 10 16384 440\n")
    return orc, sco


def test_sim_run_json(orc_sco, capsys):
    orc, sco = orc_sco
    rc = sim_main(["run", "--orc", str(orc), "--sco", str(sco),
                   "--mode", "dedicated", "--dur", "0.5", "--sr", "8000",
                   "--nchnls", "1", "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dropouts"] == 0
    assert doc["callbacks_total"] == 32


def test_sim_run_with_stall_and_tasks(orc_sco, capsys):
    orc, sco = orc_sco
    rc = sim_main(["run", "--orc", str(orc), "--sco", str(sco),
                   "--mode", "shared", "--dur", "0.5", "--sr", "8000",
                   "--nchnls", "1", "--task", "0.1:0.05", "--task", "0.2:0.05",
                   "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dropouts"] > 0


def test_sim_rejects_bad_orchestra(tmp_path, orc_sco, capsys):
    bad = tmp_path / "bad.orc"
    bad.write_text("instr 1\n out nope\nendin\n")
    _, sco = orc_sco
    rc = sim_main(["run", "--orc", str(bad), "--sco", str(sco),
                   "--mode", "dedicated", "--dur", "0.1"])
    assert rc == 1
    assert "unknown identifier" in capsys.readouterr().err


def test_render_writes_wav(tmp_path, orc_sco, capsys):
    orc, sco = orc_sco
    out = tmp_path / "out.wav"
    rc = render_main(["--orc", str(orc), "--sco", str(sco), "--out", str(out),
                      "--dur", "0.25", "--sr", "8000", "--ksmps", "16",
                      "--nchnls", "1"])
    assert rc == 0
    sr, data = scipy.io.wavfile.read(out)
    assert sr == 8000
    assert data.shape[0] == 2000
    assert float(np.max(np.abs(data))) == pytest.approx(0.5, abs=1e-3)


def test_render_reports_score_errors(tmp_path, orc_sco, capsys):
    orc, _ = orc_sco
    sco = tmp_path / "bad.sco"
    sco.write_text("x 1 2 3\n")
    rc = render_main(["--orc", str(orc), "--sco", str(sco),
                      "--out", str(tmp_path / "o.wav"), "--dur", "0.1"])
    assert rc == 1
    assert "unknown score statement" in capsys.readouterr().err
