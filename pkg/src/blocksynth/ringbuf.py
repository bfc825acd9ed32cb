"""Bounded single-producer/single-consumer FIFO.

Storage is allocated once at construction; push and pop only move
monotonic counters, so the render-side consumer never allocates or
blocks. One producer context and one consumer context only.
"""
from __future__ import annotations

__all__ = ["SpscRing"]


class SpscRing:
    __slots__ = ("_buf", "_capacity", "_head", "_tail")

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self._buf: list = [None] * capacity
        self._capacity = capacity
        self._head = 0  # consumer position
        self._tail = 0  # producer position

    @property
    def capacity(self) -> int:
        return self._capacity

    def __len__(self) -> int:
        return self._tail - self._head

    def push(self, item) -> bool:
        """Enqueue; returns False when full (item rejected)."""
        if self._tail - self._head >= self._capacity:
            return False
        self._buf[self._tail % self._capacity] = item
        self._tail += 1
        return True

    def pop(self):
        """Dequeue the oldest item, or None when empty."""
        head = self._head
        if head == self._tail:
            return None
        idx = head % self._capacity
        item = self._buf[idx]
        self._buf[idx] = None
        self._head = head + 1
        return item
