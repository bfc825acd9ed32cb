"""Orchestra language: tokens, parsing, semantic checks, compiled closures."""
from __future__ import annotations

import math

import pytest

from blocksynth import orc


def parse_one(source: str):
    instruments, diags = orc.parse_orchestra(source)
    assert not diags, diags
    assert len(instruments) == 1
    return instruments[0]


def compile_expr(expr: str, sr=44100, nchnls=2, nchnls_i=1, pfields=()):
    """Compile 'out <expr>' and return a zero-arg sampler bound to a ctx."""
    instr = parse_one(f"instr 1\n out {expr}\nendin")
    diags = orc.check_instrument(instr, nchnls, nchnls_i)
    assert not diags, diags
    builtins = {"sr": float(sr), "ksmps": 32.0, "nchnls": float(nchnls),
                "nchnls_i": float(nchnls_i), "zerodbfs": 32768.0}
    compiled = orc.compile_instrument(instr, sr, nchnls, nchnls_i, builtins)
    ctx = compiled.new_context((1.0, 0.0, 1.0) + tuple(pfields))
    ctx.spin = [0.0] * (32 * nchnls_i)
    return compiled, ctx


def sample(expr: str, **kw) -> float:
    compiled, ctx = compile_expr(expr, **kw)
    return compiled.outs[0](ctx)


def test_basic_instrument_parses():
    instr = parse_one("instr 1\n a = p4\n out a\nendin")
    assert instr.number == 1
    assert len(instr.body) == 2


def test_precedence_mul_over_add():
    assert sample("2 + 3 * 4") == 14.0
    assert sample("(2 + 3) * 4") == 20.0
    assert sample("2 - 3 - 1") == -2.0  # left associative
    assert sample("8 / 2 / 2") == 2.0


def test_number_forms():
    assert sample("1.5") == 1.5
    assert sample(".5") == 0.5
    assert sample("2e3") == 2000.0
    assert sample("1.25e-2") == 0.0125


def test_comments_and_blank_lines():
    instr = parse_one("instr 1 ; says hello\n\n ; full comment line\n out 1\nendin")
    assert len(instr.body) == 1


def test_unknown_identifier_diagnostic_at_line():
    instruments, diags = orc.parse_orchestra("instr 1\n out undefined_var\nendin")
    assert not diags
    diags = orc.check_instrument(instruments[0], 2, 1)
    assert len(diags) == 1
    assert "unknown identifier" in diags[0].message
    assert diags[0].line == 2


def test_identifier_defined_later_still_unknown():
    instruments, _ = orc.parse_orchestra("instr 1\n a = b\n b = 1\n out a\nendin")
    diags = orc.check_instrument(instruments[0], 2, 1)
    assert any("unknown identifier 'b'" in d.message for d in diags)


def test_builtin_identifiers_resolve():
    assert sample("sr", sr=48000) == 48000.0
    assert sample("zerodbfs") == 32768.0


def test_out_arity_checked_against_nchnls():
    instruments, _ = orc.parse_orchestra("instr 1\n out 1, 2, 3\nendin")
    diags = orc.check_instrument(instruments[0], 2, 1)
    assert any("out has 3 channels" in d.message for d in diags)
    assert not orc.check_instrument(instruments[0], 3, 1)


def test_multiple_out_statements_rejected():
    instruments, _ = orc.parse_orchestra("instr 1\n out 1\n out 2\nendin")
    diags = orc.check_instrument(instruments[0], 2, 1)
    assert any("more than one out" in d.message for d in diags)


def test_in_channel_range_checked():
    instruments, _ = orc.parse_orchestra("instr 1\n out in(2)\nendin")
    assert orc.check_instrument(instruments[0], 2, 2)
    assert not orc.check_instrument(instruments[0], 2, 3)


def test_reserved_names_cannot_be_assigned():
    _, diags = orc.parse_orchestra("instr 1\n oscil = 3\nendin")
    assert any("reserved" in d.message for d in diags)
    _, diags = orc.parse_orchestra("instr 1\n out = 3\nendin")
    assert diags  # parses as an out statement with a broken expression


def test_pfield_zero_rejected():
    _, diags = orc.parse_orchestra("instr 1\n out p0\nendin")
    assert any("p-field" in d.message for d in diags)


def test_pfield_reads_event_values():
    assert sample("p4", pfields=(7.5,)) == 7.5
    assert sample("p5 + p4", pfields=(1.0, 2.0)) == 3.0
    # Missing p-fields read as zero.
    assert sample("p9", pfields=(1.0,)) == 0.0


def test_syntax_errors_carry_position():
    _, diags = orc.parse_orchestra("instr 1\n a = 1 +\nendin")
    assert diags
    assert diags[0].line == 2


def test_instr_without_endin():
    _, diags = orc.parse_orchestra("instr 1\n out 1\n")
    assert any("without matching 'endin'" in d.message for d in diags)


def test_bad_instrument_number():
    _, diags = orc.parse_orchestra("instr 0\n out 1\nendin")
    assert any("positive integer" in d.message for d in diags)
    _, diags = orc.parse_orchestra("instr 1.5\n out 1\nendin")
    assert any("positive integer" in d.message for d in diags)


def test_oscil_phase_starts_at_zero_and_advances():
    compiled, ctx = compile_expr("oscil(1, 4410)")
    first = compiled.outs[0](ctx)
    assert first == 0.0  # sin(0)
    second = compiled.outs[0](ctx)
    assert second == pytest.approx(math.sin(2 * math.pi * 0.1), abs=1e-12)


def test_oscil_phase_wraps():
    compiled, ctx = compile_expr("oscil(1, 44100)", sr=44100)  # one cycle per sample
    for _ in range(10):
        v = compiled.outs[0](ctx)
        assert abs(v) < 1e-9
        assert 0.0 <= ctx.state[0] < 1.0


def test_line_ramp_and_clamp():
    compiled, ctx = compile_expr("line(0, 1, 10)", sr=10)
    values = []
    for k in range(15):
        ctx.k = k
        values.append(compiled.outs[0](ctx))
    assert values[0] == 0.0
    assert values[5] == pytest.approx(5.0)
    assert values[10] == 10.0
    assert values[14] == 10.0  # clamped at the target


def test_line_nonpositive_duration_sits_at_target():
    compiled, ctx = compile_expr("line(3, 0, 9)")
    assert compiled.outs[0](ctx) == 9.0


def test_chan_reads_block_rate_snapshot():
    compiled, ctx = compile_expr('chan("cutoff") * 2')
    assert compiled.chan_names == ("cutoff",)
    ctx.chans[0] = 220.0
    assert compiled.outs[0](ctx) == 440.0


def test_chan_requires_string():
    _, diags = orc.parse_orchestra("instr 1\n out chan(freq)\nendin")
    assert any("quoted channel name" in d.message for d in diags)


def test_in_requires_integer_literal():
    _, diags = orc.parse_orchestra("instr 1\n out in(a)\nendin")
    assert any("integer channel" in d.message for d in diags)


def test_division_by_zero_yields_nonfinite():
    assert math.isinf(sample("1 / 0"))
    assert math.isnan(sample("0 / 0"))


def test_recovery_collects_multiple_errors():
    src = "instr 1\n a = \n b = *\n out 1\nendin"
    _, diags = orc.parse_orchestra(src)
    assert len(diags) >= 2


def test_shadowing_builtin_uses_local_value():
    instr = parse_one("instr 1\n sr2 = sr\n out sr2\nendin")
    assert not orc.check_instrument(instr, 2, 1)
