"""SPSC ring queue."""
import pytest

from blocksynth.ringbuf import SpscRing


def test_fifo_order():
    ring = SpscRing(4)
    for i in range(4):
        assert ring.push(i)
    assert [ring.pop() for _ in range(4)] == [0, 1, 2, 3]


def test_reject_when_full():
    ring = SpscRing(2)
    assert ring.push("a") and ring.push("b")
    assert not ring.push("c")
    assert ring.pop() == "a"
    assert ring.push("c")


def test_pop_empty_returns_none():
    ring = SpscRing(1)
    assert ring.pop() is None


def test_wraparound_many_cycles():
    ring = SpscRing(3)
    expected = 0
    for i in range(1000):
        assert ring.push(i)
        if i % 2:
            assert ring.pop() == expected
            expected += 1
            assert ring.pop() == expected
            expected += 1
    assert len(ring) == 0


def test_capacity_validated():
    with pytest.raises(ValueError):
        SpscRing(0)
