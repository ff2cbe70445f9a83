"""Truncated bivariate polynomials in (t, q) and the package's named series.

``BiSeries`` is a polynomial in t and q truncated at a fixed q-degree
bound, with exact integer coefficients.  ``weight_series`` tallies
q^size t^weight over all partitions up to the bound by direct
enumeration; ``product_series`` expands the closed-form products that the
weight series are conjectured (or, for the triple-column family, known)
to equal.
"""

from __future__ import annotations

import enum
import json
import multiprocessing
from functools import lru_cache
from typing import Callable

from .enumeration import partitions_of
from .partitions import Rows, WeightKind, weight


class BiSeries:
    """Polynomial in t and q, truncated at q-degree ``qbound``.

    Coefficients are plain Python integers stored sparsely as
    ``{(t_deg, q_deg): coeff}``; absent entries are zero, and every
    operation discards terms with q-degree above the bound.  Values are
    immutable once constructed.
    """

    __slots__ = ("qbound", "_coeffs")

    def __init__(self, qbound: int, coeffs: dict[tuple[int, int], int] | None = None):
        if qbound < 0:
            raise ValueError("qbound must be nonnegative")
        self.qbound = qbound
        clean: dict[tuple[int, int], int] = {}
        if coeffs:
            for (tdeg, qdeg), c in coeffs.items():
                if tdeg < 0 or qdeg < 0:
                    raise ValueError(f"negative exponent in term ({tdeg}, {qdeg})")
                if qdeg <= qbound and c:
                    clean[(tdeg, qdeg)] = c
        self._coeffs = clean

    @classmethod
    def zero(cls, qbound: int) -> "BiSeries":
        return cls(qbound)

    @classmethod
    def one(cls, qbound: int) -> "BiSeries":
        return cls(qbound, {(0, 0): 1})

    @classmethod
    def term(cls, tdeg: int, qdeg: int, qbound: int, coeff: int = 1) -> "BiSeries":
        return cls(qbound, {(tdeg, qdeg): coeff})

    @classmethod
    def geometric(cls, tstep: int, qstep: int, qbound: int) -> "BiSeries":
        """Truncated expansion of 1 / (1 - t^tstep q^qstep).

        ``qstep`` must be at least 1; a q-free denominator would not
        truncate to a polynomial.
        """
        if qstep < 1:
            raise ValueError("qstep must be >= 1")
        coeffs = {}
        i = 0
        while i * qstep <= qbound:
            coeffs[(i * tstep, i * qstep)] = 1
            i += 1
        return cls(qbound, coeffs)

    def coeff(self, tdeg: int, qdeg: int) -> int:
        """Coefficient of t^tdeg q^qdeg; the q-degree must be within bound."""
        if qdeg > self.qbound:
            raise ValueError(f"q-degree {qdeg} exceeds the truncation bound {self.qbound}")
        return self._coeffs.get((tdeg, qdeg), 0)

    def row(self, qdeg: int) -> dict[int, int]:
        """The coefficients of q^qdeg as a map t-degree -> coefficient."""
        if qdeg > self.qbound:
            raise ValueError(f"q-degree {qdeg} exceeds the truncation bound {self.qbound}")
        return {k: c for (k, n), c in self._coeffs.items() if n == qdeg}

    def terms(self) -> list[tuple[int, int, int]]:
        """All nonzero terms as (q_deg, t_deg, coeff), sorted by (q_deg, t_deg)."""
        return sorted((n, k, c) for (k, n), c in self._coeffs.items())

    def _match_bound(self, other: "BiSeries") -> None:
        if not isinstance(other, BiSeries):
            raise TypeError(f"expected a BiSeries, got {type(other).__name__}")
        if self.qbound != other.qbound:
            raise ValueError(f"truncation bounds differ: {self.qbound} vs {other.qbound}")

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._match_bound(other)
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out.get(key, 0) + c
        return BiSeries(self.qbound, out)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        self._match_bound(other)
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out.get(key, 0) - c
        return BiSeries(self.qbound, out)

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        self._match_bound(other)
        bound = self.qbound
        out: dict[tuple[int, int], int] = {}
        for (k1, n1), c1 in self._coeffs.items():
            for (k2, n2), c2 in other._coeffs.items():
                n = n1 + n2
                if n > bound:
                    continue
                key = (k1 + k2, n)
                out[key] = out.get(key, 0) + c1 * c2
        return BiSeries(bound, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.qbound == other.qbound and self._coeffs == other._coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"BiSeries(qbound={self.qbound}, terms={len(self._coeffs)})"


class ProductKind(enum.Enum):
    """The named closed-form products, expanded by :func:`product_series`."""

    FULL_WT = "full-wt"
    FULL_WT_TILDE = "full-wt-tilde"
    LEG_CORRECTION = "leg-correction"
    TRIPLE_COLUMNS_WT = "triple-columns-wt"
    TRIPLE_COLUMNS_WT_TILDE = "triple-columns-wt-tilde"


def _product_factors(kind: ProductKind, m: int, qbound: int) -> list[BiSeries]:
    e1, e2, e3 = 3 * m - 2, 3 * m - 1, 3 * m
    factors = []
    if kind in (ProductKind.FULL_WT, ProductKind.FULL_WT_TILDE):
        if e1 <= qbound:
            factors.append(BiSeries.geometric(m - 1, e1, qbound))
        if e2 <= qbound:
            factors.append(BiSeries.geometric(m, e2, qbound))
    if e3 <= qbound:
        if kind in (ProductKind.FULL_WT, ProductKind.TRIPLE_COLUMNS_WT):
            factors.append(BiSeries.geometric(m - 1, e3, qbound))
        if kind in (ProductKind.FULL_WT_TILDE, ProductKind.TRIPLE_COLUMNS_WT_TILDE):
            factors.append(BiSeries.geometric(m, e3, qbound))
        if kind is ProductKind.LEG_CORRECTION:
            factors.append(BiSeries.one(qbound) - BiSeries.term(m - 1, e3, qbound))
            factors.append(BiSeries.geometric(m, e3, qbound))
    return factors


def product_series(kind: ProductKind, qbound: int) -> BiSeries:
    """Expand the named product over all factors reaching under the bound.

    FULL_WT and FULL_WT_TILDE are the conjectured closed forms of the two
    weight series over all partitions: both carry the factor families
    1/(1 - t^(m-1) q^(3m-2)) and 1/(1 - t^m q^(3m-1)) for m >= 1, and they
    differ only in the third family, 1/(1 - t^(m-1) q^(3m)) for WT versus
    1/(1 - t^m q^(3m)) for WT_TILDE.  TRIPLE_COLUMNS_WT(_TILDE) is the
    exact weight series of the partitions whose column heights are all
    multiples of three.  LEG_CORRECTION is the ratio of the two full
    forms, prod (1 - t^(m-1) q^(3m)) / (1 - t^m q^(3m)).
    """
    if qbound < 0:
        raise ValueError("qbound must be nonnegative")
    result = BiSeries.one(qbound)
    for m in range(1, (qbound + 2) // 3 + 1):
        for factor in _product_factors(kind, m, qbound):
            result = result * factor
    return result


def _census(args: tuple[int, WeightKind, Callable[[Rows], bool] | None]) -> dict[int, int]:
    n, kind, condition = args
    counts: dict[int, int] = {}
    for rows in partitions_of(n, condition):
        w = weight(rows, kind)
        counts[w] = counts.get(w, 0) + 1
    return counts


@lru_cache(maxsize=None)
def _census_all(n: int, kind: WeightKind) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(_census((n, kind, None)).items()))


def weight_series(
    kind: WeightKind,
    qbound: int,
    condition: Callable[[Rows], bool] | None = None,
    jobs: int = 1,
) -> BiSeries:
    """Tally q^size t^weight over every partition of size <= qbound.

    ``condition`` restricts the tally to matching partitions.  With
    ``jobs`` > 1 the per-size sweeps run in a process pool; the result is
    identical either way (a condition used with jobs > 1 must be an
    importable, picklable function).  Setting t = 1 in the unrestricted
    series recovers the partition counts p(n).
    """
    if qbound < 0:
        raise ValueError("qbound must be nonnegative")
    sizes = range(qbound + 1)
    censuses: list[dict[int, int]]
    if jobs > 1:
        with multiprocessing.Pool(processes=jobs) as pool:
            censuses = pool.map(_census, [(n, kind, condition) for n in sizes])
    elif condition is not None:
        censuses = [_census((n, kind, condition)) for n in sizes]
    else:
        censuses = [dict(_census_all(n, kind)) for n in sizes]
    coeffs = {(k, n): c for n, counts in zip(sizes, censuses) for k, c in counts.items()}
    return BiSeries(qbound, coeffs)


def to_csv(series: BiSeries) -> str:
    """Rows ``n,k,coefficient`` sorted by (n, k), with a header line.

    Zero coefficients are omitted.
    """
    lines = ["n,k,coefficient"]
    lines.extend(f"{n},{k},{c}" for n, k, c in series.terms())
    return "\n".join(lines) + "\n"


def to_json(series: BiSeries) -> str:
    """JSON object keyed by q-degree, each value a list of [t-degree,
    coefficient] pairs sorted by t-degree.

    Coefficients are serialized as decimal strings so consumers limited to
    64-bit integers survive large tables.
    """
    table: dict[str, list[list[object]]] = {}
    for n, k, c in series.terms():
        table.setdefault(str(n), []).append([k, str(c)])
    return json.dumps(table, separators=(",", ":")) + "\n"


def _format_t_polynomial(row: dict[int, int]) -> str:
    if not row:
        return "0"
    parts = []
    for k in sorted(row):
        c = row[k]
        mag, sign = abs(c), "-" if c < 0 else "+"
        if k == 0:
            body = str(mag)
        else:
            var = "t" if k == 1 else f"t^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def to_table(series: BiSeries) -> str:
    """Human-readable rows, one per q-degree: ``q^n: <polynomial in t>``."""
    lines = []
    for n in range(series.qbound + 1):
        row = series.row(n)
        if row:
            lines.append(f"q^{n}: {_format_t_polynomial(row)}")
    return "\n".join(lines) + "\n"
