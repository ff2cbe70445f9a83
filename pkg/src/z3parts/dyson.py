"""Dyson rearrangements of a partition and the {1,2}-composition they induce.

``rho1`` moves the bottom row, plus one extra box, to a new first column;
``psi2`` moves the first column, plus two extra boxes, to a new bottom
row.  They grow a partition by one and two boxes respectively.  On any
nonempty partition exactly one of the two inverse moves is defined
(``rho1_inv`` when the bottom row is no longer than the first column is
tall, ``psi2_inv`` otherwise), so peeling a partition down to the empty
diagram records a unique composition with parts in {1, 2}.

Compositions are written outermost-first: entry 1 names the move applied
LAST when growing the partition from the empty diagram, so ``build``
consumes entries right to left.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .partitions import Rows, conjugate


class UndefinedMapError(ValueError):
    """A rearrangement that would not produce a valid diagram."""


class InadmissibleCompositionError(ValueError):
    """Raised by :func:`build` when some step of a composition is undefined.

    ``step`` is the 1-based index, outermost-first, of the failing entry.
    """

    def __init__(self, step: int, entries: tuple[int, ...]):
        self.step = step
        self.entries = entries
        super().__init__(
            f"composition {format_composition(entries)} is inadmissible (fails at step {step})"
        )


class FirstRowCol(NamedTuple):
    j: int  # bottom-row length
    k: int  # first-column height


def first_row_col(rows: Rows) -> FirstRowCol:
    """Length of the bottom row and height of the first column (0, 0 for the
    empty partition)."""
    return FirstRowCol(rows[0] if rows else 0, len(rows))


def rho1(rows: Rows) -> Rows:
    """Remove the bottom row (j boxes), add one box, and stand the j + 1
    boxes up as a new first column.

    Defined whenever j >= k - 2, where k is the first-column height: the
    new column must be at least as tall as what remains of the old one.
    """
    j, k = first_row_col(rows)
    if j < k - 2:
        raise UndefinedMapError(f"rho1 needs first row >= first column - 2; got j={j}, k={k}")
    rest = rows[1:]
    return tuple(r + 1 for r in rest) + (1,) * (j + 1 - len(rest))


def psi2(rows: Rows) -> Rows:
    """Remove the first column (k boxes), add two boxes, and lay the k + 2
    boxes down as a new bottom row.

    Defined whenever j <= k + 3: the new row must be at least as long as
    what remains of the old bottom row.
    """
    j, k = first_row_col(rows)
    if j > k + 3:
        raise UndefinedMapError(f"psi2 needs first row <= first column + 3; got j={j}, k={k}")
    return (k + 2,) + tuple(r - 1 for r in rows if r >= 2)


def rho1_inv(rows: Rows) -> Rows:
    """Inverse of :func:`rho1`: remove the first column, take one box away,
    and lay the rest down as a new bottom row.  Defined when 0 < j <= k."""
    j, k = first_row_col(rows)
    if not rows or j > k:
        raise UndefinedMapError(f"rho1_inv needs a nonempty partition with j <= k; got j={j}, k={k}")
    rest = tuple(r - 1 for r in rows if r >= 2)
    return (k - 1,) + rest if k > 1 else rest


def psi2_inv(rows: Rows) -> Rows:
    """Inverse of :func:`psi2`: remove the bottom row, take two boxes away,
    and stand the rest up as a new first column.  Defined when j > k."""
    j, k = first_row_col(rows)
    if not rows or j <= k:
        raise UndefinedMapError(f"psi2_inv needs j > k; got j={j}, k={k}")
    rest = rows[1:]
    return tuple(r + 1 for r in rest) + (1,) * (j - 2 - len(rest))


def decompose(rows: Rows) -> tuple[int, ...]:
    """The unique {1,2}-composition recording how to grow ``rows`` from the
    empty partition.

    Peels with ``rho1_inv`` while j <= k and with ``psi2_inv`` otherwise,
    writing the subscripts outermost-first.  The entries sum to the size
    of the partition.
    """
    entries = []
    while rows:
        if rows[0] <= len(rows):
            entries.append(1)
            rows = rho1_inv(rows)
        else:
            entries.append(2)
            rows = psi2_inv(rows)
    return tuple(entries)


def build(entries: Iterable[int]) -> Rows:
    """Apply the recorded moves, innermost (last entry) first, to the empty
    partition.

    Raises :class:`InadmissibleCompositionError` naming the failing step
    when some intermediate diagram would be invalid.  On success the
    result decomposes back to the same composition.
    """
    comp = check_composition(entries)
    rows: Rows = ()
    for idx in range(len(comp) - 1, -1, -1):
        try:
            rows = rho1(rows) if comp[idx] == 1 else psi2(rows)
        except UndefinedMapError:
            raise InadmissibleCompositionError(idx + 1, comp) from None
    return rows


def is_admissible(entries: Iterable[int]) -> bool:
    """True when :func:`build` succeeds on the composition, i.e. when it is
    the decomposition of some partition."""
    try:
        build(entries)
    except InadmissibleCompositionError:
        return False
    return True


class StairReport(NamedTuple):
    is_stair: bool
    landing: int


def stair_report(rows: Rows) -> StairReport:
    """Stair-step test on the column heights.

    A diagram is stair-step when walking its columns left to right never
    drops by more than one box, including the final drop off the last
    column (so the last column holds exactly one box).  The landing count
    is the number of adjacent equal-height column pairs; it is reported as
    0 for diagrams that are not stair-step.
    """
    cols = conjugate(rows)
    if not cols:
        return StairReport(True, 0)
    gentle = all(cols[i] - cols[i + 1] <= 1 for i in range(len(cols) - 1))
    if not gentle or cols[-1] > 1:
        return StairReport(False, 0)
    landing = sum(1 for i in range(len(cols) - 1) if cols[i] == cols[i + 1])
    return StairReport(True, landing)


def check_composition(entries: Iterable[int]) -> tuple[int, ...]:
    comp = tuple(int(e) for e in entries)
    if any(e not in (1, 2) for e in comp):
        raise ValueError(f"composition entries must be 1 or 2, got {comp}")
    return comp


def parse_composition(text: str) -> tuple[int, ...]:
    """Parse the text form ``"2,2,1,2"``; ``"-"`` denotes the empty composition."""
    s = text.strip()
    if s == "-":
        return ()
    try:
        entries = [int(tok) for tok in s.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse composition {text!r}") from None
    return check_composition(entries)


def format_composition(entries: tuple[int, ...]) -> str:
    return ",".join(str(e) for e in entries) if entries else "-"
