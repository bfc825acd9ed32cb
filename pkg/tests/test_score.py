"""Score text parsing."""
import pytest

from blocksynth import EventKind, ScoreError, parse_score


def test_note_line():
    events = parse_score("i 1 0 2 0.5 440")
    assert len(events) == 1
    ev = events[0]
    assert ev.kind is EventKind.NOTE
    assert ev.instr == 1
    assert ev.start == 0.0
    assert ev.dur == 2.0
    assert ev.pfields == (0.5, 440.0)


def test_end_line_with_time():
    events = parse_score("e 10")
    assert events[0].kind is EventKind.END
    assert events[0].start == 10.0


def test_end_line_defaults_to_zero():
    assert parse_score("e")[0].start == 0.0


def test_negative_duration_is_held():
    ev = parse_score("i 1 0 -1")[0]
    assert ev.dur == -1.0


def test_blank_lines_and_comments_ignored():
    events = parse_score("; header\n\n i 1 0 1 ; trailing comment\n\n")
    assert len(events) == 1


def test_line_order_preserved():
    events = parse_score("i 2 1 1\ni 1 0 1\ne 5")
    assert [e.instr for e in events[:2]] == [2, 1]
    assert events[2].kind is EventKind.END


def test_unknown_statement_rejected():
    with pytest.raises(ScoreError) as exc:
        parse_score("f 1 0 1024")
    assert "unknown score statement" in str(exc.value)


def test_errors_carry_line_numbers_and_nothing_parses():
    with pytest.raises(ScoreError) as exc:
        parse_score("i 1 0 1\nbogus\ni 2 0 x")
    lines = [d.line for d in exc.value.diagnostics]
    assert 2 in lines and 3 in lines


@pytest.mark.parametrize("text", [
    "i 1 0",             # missing duration
    "i 0 0 1",           # instrument must be positive
    "i -1 0 1",          # instrument must be positive integer
    "i 1 -1 1",          # start must be >= 0
    "i 1 0 0",           # zero duration
    "e -2",              # end time must be >= 0
    "e 1 2",             # too many fields
])
def test_malformed_lines(text):
    with pytest.raises(ScoreError):
        parse_score(text)
