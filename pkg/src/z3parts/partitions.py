"""Young-diagram cell statistics and the two mod-3 box-counting weights.

A partition is a plain tuple of positive row lengths, weakly decreasing,
with index 0 the BOTTOM row of the (southwest-justified) diagram.  The
empty tuple is the empty partition.  Everything here is a pure function
over immutable values, so it is safe to call from any number of threads
or worker processes.

Conventions used throughout the package:

* cells are addressed as ``(col, row)``, both 1-based;
* the arm of a cell counts the boxes strictly above it in its column;
* the leg counts the boxes strictly to its right in its row.
"""

from __future__ import annotations

import enum
from itertools import groupby
from typing import Iterator, NamedTuple

Rows = tuple[int, ...]


class WeightKind(enum.Enum):
    """Which boxes a weight counts: every box, or only boxes with leg > 0."""

    WT = "wt"
    WT_TILDE = "wt-tilde"


class CellStat(NamedTuple):
    arm: int
    leg: int


def check_partition(rows) -> Rows:
    """Validate a row list and return it as a partition tuple.

    Rows must be positive integers, weakly decreasing from the bottom row
    up.  Raises ValueError otherwise.
    """
    out = tuple(int(r) for r in rows)
    for i, r in enumerate(out):
        if r < 1:
            raise ValueError(f"row lengths must be positive, got {r}")
        if i and r > out[i - 1]:
            raise ValueError(f"rows must be weakly decreasing, got {out[i - 1]} then {r}")
    return out


def parse_partition(text: str) -> Rows:
    """Parse the text form ``"5,3,3,1"``; ``"-"`` denotes the empty partition."""
    s = text.strip()
    if s == "-":
        return ()
    try:
        rows = [int(tok) for tok in s.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return check_partition(rows)


def format_partition(rows: Rows) -> str:
    return ",".join(str(r) for r in rows) if rows else "-"


def size(rows: Rows) -> int:
    """Number of boxes in the diagram."""
    return sum(rows)


def conjugate(rows: Rows) -> Rows:
    """Column heights, left to right; as a partition this is the transpose."""
    if not rows:
        return ()
    cols = [0] * rows[0]
    for r in rows:
        for i in range(r):
            cols[i] += 1
    return tuple(cols)


def cells(rows: Rows) -> Iterator[tuple[int, int]]:
    """All cells as (col, row) pairs, bottom row first, left to right."""
    for row, length in enumerate(rows, start=1):
        for col in range(1, length + 1):
            yield col, row


def cell_stats(rows: Rows, col: int, row: int) -> CellStat:
    """Arm and leg of the cell in column ``col`` of row ``row``.

    Raises ValueError when the cell lies outside the diagram.
    """
    if not (1 <= row <= len(rows)) or not (1 <= col <= rows[row - 1]):
        raise ValueError(f"cell ({col},{row}) is outside the diagram {format_partition(rows)}")
    arm = sum(1 for r in rows[row:] if r >= col)
    leg = rows[row - 1] - col
    return CellStat(arm, leg)


def weight(rows: Rows, kind: WeightKind) -> int:
    """Count the cells whose arm and leg satisfy arm + 1 = leg (mod 3).

    WT_TILDE counts every such cell; WT skips cells with leg 0, i.e. the
    last cell of each row.
    """
    cols = conjugate(rows)
    skip_leg0 = kind is WeightKind.WT
    total = 0
    for row, length in enumerate(rows, start=1):
        for col in range(1, length + 1):
            leg = length - col
            if skip_leg0 and leg == 0:
                continue
            arm = cols[col - 1] - row
            if (arm + 1 - leg) % 3 == 0:
                total += 1
    return total


def boundary_sequence(rows: Rows) -> tuple[int, ...]:
    """Labels along the northeast boundary of the diagram.

    Place the diagram in the first quadrant with its bottom-left corner at
    the origin.  The boundary path runs from the top of the first column
    to the right end of the bottom row; a horizontal step from (x, y) to
    (x+1, y) is labeled x + y + 1 and a downward step from (x, y) to
    (x, y-1) is labeled x + y - 1.  Consecutive labels differ by exactly
    one, and the sequence has one entry per column plus one per row.
    """
    cols = conjugate(rows)
    labels = []
    for x, height in enumerate(cols):
        labels.append(x + height + 1)
        nxt = cols[x + 1] if x + 1 < len(cols) else 0
        for y in range(height, nxt, -1):
            labels.append(x + y)
    return tuple(labels)


def contributes_by_boundary(rows: Rows, col: int, row: int) -> bool:
    """The mod-3 cell test read off boundary labels instead of arm and leg.

    Compares the label of the horizontal boundary step at the top of the
    cell's column with the label of the vertical step at the right end of
    its row; the cell contributes exactly when the two labels agree mod 3.
    """
    cell_stats(rows, col, row)  # reuse the bounds check
    cols = conjugate(rows)
    above = col + cols[col - 1]
    right = rows[row - 1] + row - 1
    return (above - right) % 3 == 0


def _multiplicities(rows: Rows) -> Iterator[int]:
    for _, grp in groupby(rows):
        yield sum(1 for _ in grp)


def has_short_descents(rows: Rows) -> bool:
    """True when every descent of the boundary path is at most two steps.

    The descents of the column-height profile (including the final descent
    to zero past the last column) are exactly the multiplicities of the
    row lengths, so this is the same as no row length repeating three or
    more times.  Equivalently: no cell has leg 0 and arm + 1 = 0 (mod 3).
    """
    return all(m <= 2 for m in _multiplicities(rows))


def has_triple_columns(rows: Rows) -> bool:
    """True when every column height is a multiple of three.

    Equivalent to every row length occurring a multiple-of-three number of
    times.
    """
    return all(m % 3 == 0 for m in _multiplicities(rows))
