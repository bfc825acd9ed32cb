"""Command-line entry points: pack (module packaging/bench), sim
(dropout simulator), and render (offline WAV renderer)."""
from __future__ import annotations

import argparse
import json
import sys

from . import packager
from .bridge import EngineNode, EngineProcessor, BackendKind
from .engine import EngineConfig, create_engine
from .errors import CompileFailedError, MalformedPayloadError, ScoreError
from .hostsim import HostConfig, SchedulingMode, render_offline, run_sim

_ENCODINGS = {"base64": packager.Encoding.BASE64, "bytes": packager.Encoding.BYTE_ARRAY}


def pack_main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="pack", description="Package a binary module as a text artifact.")
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="encode a binary file into a text artifact")
    enc.add_argument("--in", dest="infile", required=True)
    enc.add_argument("--format", choices=sorted(_ENCODINGS), required=True)
    enc.add_argument("--out", dest="outfile", required=True)

    dec = sub.add_parser("decode", help="decode an artifact back to binary")
    dec.add_argument("--in", dest="infile", required=True)
    dec.add_argument("--out", dest="outfile", required=True)

    bench = sub.add_parser("bench", help="compare the two encodings on one input")
    bench.add_argument("--in", dest="infile", required=True)
    bench.add_argument("--json", action="store_true")

    args = parser.parse_args(argv)
    if args.command == "encode":
        with open(args.infile, "rb") as f:
            data = f.read()
        pkg = packager.encode(data, _ENCODINGS[args.format])
        with open(args.outfile, "w", encoding="ascii") as f:
            f.write(pkg.text())
        return 0
    if args.command == "decode":
        with open(args.infile, "r", encoding="ascii") as f:
            text = f.read()
        try:
            pkg = packager.load_artifact(text)
            data = packager.decode(pkg)
        except MalformedPayloadError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        with open(args.outfile, "wb") as f:
            f.write(data)
        return 0
    with open(args.infile, "rb") as f:
        data = f.read()
    report = packager.bench_report(data)
    print(report.to_json() if args.json else report.to_text())
    return 0


def _parse_task(text: str) -> tuple[float, float]:
    try:
        start, dur = text.split(":")
        return float(start), float(dur)
    except ValueError:
        raise argparse.ArgumentTypeError(f"task must be start:dur, got {text!r}")


def sim_main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="sim", description="Virtual-time callback deadline simulator.")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="simulate a run and report dropouts")
    run.add_argument("--orc", required=True)
    run.add_argument("--sco", required=True)
    run.add_argument("--mode", choices=["shared", "dedicated"], required=True)
    run.add_argument("--dur", type=float, required=True)
    run.add_argument("--stall-ms", type=float, default=0.0)
    run.add_argument("--task", type=_parse_task, action="append", default=[],
                     metavar="START:DUR")
    run.add_argument("--sr", type=int, default=44100)
    run.add_argument("--quantum", type=int, default=128)
    run.add_argument("--ksmps", type=int, default=32)
    run.add_argument("--nchnls", type=int, default=2)
    run.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)

    with open(args.orc, "r", encoding="utf-8") as f:
        orc_text = f.read()
    with open(args.sco, "r", encoding="utf-8") as f:
        sco_text = f.read()
    engine_cfg = EngineConfig(sr=args.sr, ksmps=args.ksmps, nchnls=args.nchnls,
                              nchnls_i=0)
    # Fail fast on bad sources before simulating.
    probe = create_engine(engine_cfg)
    result = probe.compile_orc(orc_text)
    if not result.ok:
        for d in result.diagnostics:
            print(f"error: {d}", file=sys.stderr)
        return 1
    try:
        probe.read_score(sco_text)
    except ScoreError as exc:
        for d in exc.diagnostics:
            print(f"error: {d}", file=sys.stderr)
        return 1

    node = EngineNode(engine_cfg, BackendKind.WORKLET)
    node.compile_orc(orc_text)
    node.read_score(sco_text)
    node.start()
    host = HostConfig(
        sr=args.sr,
        quantum=args.quantum,
        mode=SchedulingMode.SHARED if args.mode == "shared" else SchedulingMode.DEDICATED,
        main_tasks=tuple(args.task),
        per_callback_stall=args.stall_ms / 1000.0,
    )
    report = run_sim(host, node.processor, args.dur)
    doc = {
        "mode": args.mode,
        "callbacks_total": report.callbacks_total,
        "dropouts": report.dropouts,
        "dropout_rate": report.dropouts / report.callbacks_total,
        "worst_lateness_ms": report.worst_lateness * 1000.0,
    }
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(f"callbacks: {doc['callbacks_total']}  dropouts: {doc['dropouts']}"
              f" ({100 * doc['dropout_rate']:.1f}%)"
              f"  worst lateness: {doc['worst_lateness_ms']:.3f} ms")
    return 0


def render_main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="render", description="Render orchestra + score offline to a float32 WAV.")
    parser.add_argument("--orc", required=True)
    parser.add_argument("--sco", required=True)
    parser.add_argument("--out", required=True)
    parser.add_argument("--dur", type=float, required=True)
    parser.add_argument("--sr", type=int, default=44100)
    parser.add_argument("--ksmps", type=int, default=32)
    parser.add_argument("--nchnls", type=int, default=2)
    args = parser.parse_args(argv)
    with open(args.orc, "r", encoding="utf-8") as f:
        orc_text = f.read()
    with open(args.sco, "r", encoding="utf-8") as f:
        sco_text = f.read()
    config = EngineConfig(sr=args.sr, ksmps=args.ksmps, nchnls=args.nchnls, nchnls_i=0)
    try:
        result = render_offline(orc_text, sco_text, config, args.dur, args.out)
    except (CompileFailedError, ScoreError) as exc:
        for d in exc.diagnostics:
            print(f"error: {d}", file=sys.stderr)
        return 1
    print(f"wrote {result.frames} frames to {result.path}")
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(pack_main())
