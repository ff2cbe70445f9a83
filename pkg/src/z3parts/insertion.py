"""Factoring a partition into a short-descent part and a triple-column part.

Every partition splits uniquely into a pair (base, triples): the base
keeps each row length with multiplicity at most two, so every boundary
descent is short, and the triples carry the remaining rows, whose
multiplicities are multiples of three, so every column height is a
multiple of three.  ``insert_rows`` is the forward direction; it places
each inserted row above all rows of at least its length ("at maximum
height"), and since equal rows are indistinguishable the merged diagram
is simply the sorted union of the two row multisets.  Both weights add
across the split; the verification suite checks that exhaustively.
"""

from __future__ import annotations

from collections import Counter

from .partitions import Rows, format_partition, has_short_descents, has_triple_columns


def insert_rows(base: Rows, triples: Rows) -> Rows:
    """Merge the rows of ``triples`` into ``base`` at maximum height.

    ``base`` must have short descents and ``triples`` multiple-of-three
    column heights; raises ValueError otherwise.
    """
    if not has_short_descents(base):
        raise ValueError(f"base {format_partition(base)} has a descent deeper than two")
    if not has_triple_columns(triples):
        raise ValueError(
            f"inserted part {format_partition(triples)} has a column height not divisible by three"
        )
    return tuple(sorted(base + triples, reverse=True))


def split_rows(rows: Rows) -> tuple[Rows, Rows]:
    """Inverse of :func:`insert_rows`: the unique (base, triples) pair.

    Scanning row lengths largest first, peel off three-at-a-time copies of
    any length occurring three or more times; what remains is the
    short-descent base.  The outcome does not depend on the scan order.
    """
    counts = Counter(rows)
    base: list[int] = []
    triples: list[int] = []
    for length in sorted(counts, reverse=True):
        m = counts[length]
        base.extend([length] * (m % 3))
        triples.extend([length] * (m - m % 3))
    return tuple(base), tuple(triples)
