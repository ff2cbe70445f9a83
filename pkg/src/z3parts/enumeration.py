"""Streaming enumeration of partitions and of compositions with parts 1, 2."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator

from .partitions import Rows


def partitions_of(n: int, condition: Callable[[Rows], bool] | None = None) -> Iterator[Rows]:
    """Yield the partitions of ``n`` in reverse-lexicographic order.

    The order runs from ``(n,)`` down to ``(1,) * n``; with a condition,
    only the matching partitions are yielded, in the same order.  The
    generator keeps O(n) state, so large families can be streamed without
    being materialized.  Each call returns an independent cursor.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        if condition is None or condition(()):
            yield ()
        return
    part = [n]
    while True:
        rows = tuple(part)
        if condition is None or condition(rows):
            yield rows
        i = len(part) - 1
        while i >= 0 and part[i] == 1:
            i -= 1
        if i < 0:
            return
        spare = len(part) - i  # the trailing ones, plus one box off part[i]
        part[i] -= 1
        del part[i + 1 :]
        cap = part[i]
        while spare:
            nxt = min(cap, spare)
            part.append(nxt)
            spare -= nxt


def compositions_12(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every composition of ``n`` with parts in {1, 2}.

    Order is lexicographic with 1 before 2; there are fibonacci(n + 1)
    compositions in total.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    for head in (1, 2):
        if head <= n:
            for tail in compositions_12(n - head):
                yield (head,) + tail


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal-number recurrence.

    Independent of the streaming enumerator, so the two can cross-check
    each other.
    """
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        g2 = k * (3 * k + 1) // 2
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def fibonacci(n: int) -> int:
    """F(n) with F(1) = F(2) = 1 and F(0) = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a
