"""Exhaustive desk-scale verification of the package's identities.

Each check enumerates a finite range, compares what enumeration observes
with what the claimed closed form or transport rule predicts, and returns
a structured report.  In a counterexample, ``expected`` is the predicted
value and ``actual`` the enumerated/observed one.  A failing report
always carries the minimal counterexample: smallest size first, then
first in enumeration order.  Reports are deterministic given (check,
max_n) — sharded (jobs > 1) and sequential runs agree — except for the
elapsed time.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass
from typing import Callable

from .dyson import (
    InadmissibleCompositionError,
    UndefinedMapError,
    build,
    decompose,
    format_composition,
    is_admissible,
    psi2,
    rho1,
    stair_report,
)
from .enumeration import compositions_12, partition_count, partitions_of
from .insertion import insert_rows, split_rows
from .partitions import (
    WeightKind,
    cell_stats,
    cells,
    contributes_by_boundary,
    format_partition,
    has_short_descents,
    has_triple_columns,
    weight,
)
from .series import BiSeries, ProductKind, product_series, weight_series

FORBIDDEN_BLOCK = (2, 2, 1, 2)


@dataclass(frozen=True)
class Counterexample:
    item: str
    expected: str
    actual: str


@dataclass
class VerificationReport:
    check_name: str
    max_n: int
    status: str  # "pass" or "fail"
    counterexample: Counterexample | None
    elapsed_ms: float
    items_checked: int

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        ce = None
        if self.counterexample is not None:
            ce = {
                "object": self.counterexample.item,
                "expected": self.counterexample.expected,
                "actual": self.counterexample.actual,
            }
        return {
            "check_name": self.check_name,
            "max_n": self.max_n,
            "status": self.status,
            "counterexample": ce,
            "elapsed": round(self.elapsed_ms, 3),
            "items_checked": self.items_checked,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))


Failure = tuple[tuple[int, ...], Counterexample]


def _report(name: str, max_n: int, started: float, items: int, failures: list[Failure]) -> VerificationReport:
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    if failures:
        first = min(failures, key=lambda f: f[0])[1]
        return VerificationReport(name, max_n, "fail", first, elapsed_ms, items)
    return VerificationReport(name, max_n, "pass", None, elapsed_ms, items)


def _pmap(fn: Callable, values: list, jobs: int) -> list:
    if jobs <= 1:
        return [fn(v) for v in values]
    with multiprocessing.Pool(processes=jobs) as pool:
        return pool.map(fn, values)


def _series_mismatches(claimed: BiSeries, observed: BiSeries) -> list[Failure]:
    """Coefficient differences, ordered by (q-degree, t-degree)."""
    out: list[Failure] = []
    for n in range(observed.qbound + 1):
        crow, orow = claimed.row(n), observed.row(n)
        for k in sorted(set(crow) | set(orow)):
            c, o = crow.get(k, 0), orow.get(k, 0)
            if c != o:
                out.append(((n, k), Counterexample(f"t^{k} q^{n}", str(c), str(o))))
    return out


def _partition_sweep_size(max_n: int) -> int:
    return sum(partition_count(n) for n in range(max_n + 1))


def verify_product(kind: WeightKind, max_n: int, jobs: int = 1) -> VerificationReport:
    """Compare the enumerated weight series against its conjectured product.

    Passes iff every coefficient of q^n for n <= max_n agrees exactly.
    The product forms are open conjectures, so a verified failure here is
    a genuine counterexample, not a bug report.
    """
    started = time.perf_counter()
    if kind is WeightKind.WT:
        name, product_kind = "product-wt", ProductKind.FULL_WT
    else:
        name, product_kind = "product-wt-tilde", ProductKind.FULL_WT_TILDE
    observed = weight_series(kind, max_n, jobs=jobs)
    claimed = product_series(product_kind, max_n)
    failures = _series_mismatches(claimed, observed)
    return _report(name, max_n, started, _partition_sweep_size(max_n), failures)


def verify_product_wt(max_n: int, jobs: int = 1) -> VerificationReport:
    return verify_product(WeightKind.WT, max_n, jobs)


def verify_product_wt_tilde(max_n: int, jobs: int = 1) -> VerificationReport:
    return verify_product(WeightKind.WT_TILDE, max_n, jobs)


def verify_correction(max_n: int, jobs: int = 1) -> VerificationReport:
    """Check that the leg-correction product converts one weight series into
    the other: series(WT_TILDE) = LEG_CORRECTION * series(WT), exactly."""
    started = time.perf_counter()
    observed = weight_series(WeightKind.WT_TILDE, max_n, jobs=jobs)
    claimed = product_series(ProductKind.LEG_CORRECTION, max_n) * weight_series(
        WeightKind.WT, max_n, jobs=jobs
    )
    failures = _series_mismatches(claimed, observed)
    return _report("correction", max_n, started, 2 * _partition_sweep_size(max_n), failures)


def _transport_shard(n: int) -> tuple[int, list[Failure]]:
    items = 0
    failures: list[Failure] = []
    for idx, rows in enumerate(partitions_of(n)):
        items += 1
        w = weight(rows, WeightKind.WT_TILDE)
        label = format_partition(rows)
        try:
            grown = rho1(rows)
        except UndefinedMapError:
            pass
        else:
            got = weight(grown, WeightKind.WT_TILDE)
            if got != w:
                failures.append(((n, idx, 0), Counterexample(f"rho1 {label}", str(w), str(got))))
        try:
            grown = psi2(rows)
        except UndefinedMapError:
            pass
        else:
            got = weight(grown, WeightKind.WT_TILDE)
            if got != w + 1:
                failures.append(((n, idx, 1), Counterexample(f"psi2 {label}", str(w + 1), str(got))))
        twos = decompose(rows).count(2)
        if twos != w:
            failures.append(((n, idx, 2), Counterexample(f"decompose {label}", str(twos), str(w))))
    return items, failures


def verify_transport(max_n: int, jobs: int = 1) -> VerificationReport:
    """Check how the two rearrangements move the WT_TILDE weight.

    For every partition of size <= max_n: rho1 preserves the weight and
    psi2 raises it by one, whenever defined; and the weight equals the
    number of 2-entries in the partition's decomposition.
    """
    started = time.perf_counter()
    shards = _pmap(_transport_shard, list(range(max_n + 1)), jobs)
    items = sum(s[0] for s in shards)
    failures = [f for s in shards for f in s[1]]
    return _report("transport", max_n, started, items, failures)


def verify_top_coefficients(max_n: int, jobs: int = 1) -> VerificationReport:
    """Check the leading diagonal of both coefficient tables.

    In the WT_TILDE table: no t-degree ever exceeds half the q-degree, and
    for m >= 2 the coefficients at (t^m, q^(2m)) and (t^m, q^(2m+1)) are
    1 and 3.  In the WT table the same two spots hold 1 and 2, and the
    sizes 1, 2, 3 each carry a single unit coefficient (at t^0 q^1,
    t^1 q^2 and t^1 q^3).  Needs max_n >= 4.
    """
    if max_n < 4:
        raise ValueError("top-coeffs needs max_n >= 4")
    started = time.perf_counter()
    tilde = weight_series(WeightKind.WT_TILDE, max_n, jobs=jobs)
    plain = weight_series(WeightKind.WT, max_n, jobs=jobs)
    items = 0
    failures: list[Failure] = []

    def expect(series_name: str, series: BiSeries, k: int, n: int, want: int, key: tuple[int, ...]) -> None:
        got = series.coeff(k, n)
        if got != want:
            failures.append((key, Counterexample(f"{series_name} t^{k} q^{n}", str(want), str(got))))

    for n in range(max_n + 1):
        items += 1
        for k in sorted(tilde.row(n)):
            if 2 * k > n:
                expect("wt-tilde", tilde, k, n, 0, (n, k, 0))
    m = 2
    while 2 * m + 1 <= max_n:
        expect("wt-tilde", tilde, m, 2 * m, 1, (2 * m, m, 1))
        expect("wt-tilde", tilde, m, 2 * m + 1, 3, (2 * m + 1, m, 1))
        expect("wt", plain, m, 2 * m, 1, (2 * m, m, 2))
        expect("wt", plain, m, 2 * m + 1, 2, (2 * m + 1, m, 2))
        items += 4
        m += 1
    for k, n in ((0, 1), (1, 2), (1, 3)):
        expect("wt", plain, k, n, 1, (n, k, 3))
        items += 1
    return _report("top-coeffs", max_n, started, items, failures)


def _structure_partition_shard(n: int) -> tuple[int, list[Failure]]:
    """Per-partition structure checks: factor split, decomposition round
    trip, boundary-label agreement, stair-step closure."""
    items = 0
    failures: list[Failure] = []
    for idx, rows in enumerate(partitions_of(n)):
        items += 1
        label = format_partition(rows)

        base, triples = split_rows(rows)
        pair = f"{format_partition(base)} x {format_partition(triples)}"
        if (
            not has_short_descents(base)
            or not has_triple_columns(triples)
            or insert_rows(base, triples) != rows
        ):
            failures.append(((1, n, idx, 0), Counterexample(f"split {label}", label, pair)))

        comp = decompose(rows)
        try:
            rebuilt = build(comp)
        except InadmissibleCompositionError:
            rebuilt = None
        if sum(comp) != n or rebuilt != rows:
            failures.append(
                ((1, n, idx, 1),
                 Counterexample(f"rebuild {label}", label,
                                "-" if rebuilt is None else format_partition(rebuilt)))
            )

        for cell_idx, (col, row) in enumerate(cells(rows)):
            arm, leg = cell_stats(rows, col, row)
            by_stats = (arm + 1 - leg) % 3 == 0
            by_labels = contributes_by_boundary(rows, col, row)
            if by_stats != by_labels:
                failures.append(
                    ((1, n, idx, 2, cell_idx),
                     Counterexample(f"cell ({col},{row}) of {label}", str(by_stats), str(by_labels)))
                )

        report = stair_report(rows)
        if report.is_stair and report.landing <= 2:
            try:
                after = stair_report(psi2(rows))
            except UndefinedMapError:
                after = None
            if after is None or not after.is_stair or after.landing > 2:
                failures.append(
                    ((1, n, idx, 3),
                     Counterexample(f"stair closure {label}", "stair-step with landing <= 2",
                                    "psi2 undefined" if after is None else str(after)))
                )
    return items, failures


def _structure_pair_shard(n: int) -> tuple[int, list[Failure]]:
    """Merge round trip and two-weight additivity over factor pairs of total
    size n."""
    items = 0
    failures: list[Failure] = []
    idx = 0
    for base_size in range(n + 1):
        for base in partitions_of(base_size, has_short_descents):
            for triples in partitions_of(n - base_size, has_triple_columns):
                items += 1
                pair = f"{format_partition(base)} x {format_partition(triples)}"
                merged = insert_rows(base, triples)
                if split_rows(merged) != (base, triples):
                    failures.append(((2, n, idx, 0), Counterexample(f"merge {pair}", pair,
                                                                    format_partition(merged))))
                for sub, kind in enumerate((WeightKind.WT, WeightKind.WT_TILDE), start=1):
                    total = weight(merged, kind)
                    parts = weight(base, kind) + weight(triples, kind)
                    if total != parts:
                        failures.append(
                            ((2, n, idx, sub),
                             Counterexample(f"{kind.value} additivity {pair}", str(parts), str(total)))
                        )
                idx += 1
    return items, failures


def _structure_composition_shard(n: int) -> tuple[int, list[Failure]]:
    """Admissible compositions of n: count equals p(n), and none contains the
    forbidden contiguous block."""
    items = 0
    failures: list[Failure] = []
    admissible = 0
    for idx, comp in enumerate(compositions_12(n)):
        items += 1
        if not is_admissible(comp):
            continue
        admissible += 1
        if any(comp[i : i + 4] == FORBIDDEN_BLOCK for i in range(len(comp) - 3)):
            failures.append(
                ((4, n, idx, 0),
                 Counterexample(f"admissible {format_composition(comp)}",
                                f"no contiguous {format_composition(FORBIDDEN_BLOCK)} block", "present"))
            )
    expected = partition_count(n)
    if admissible != expected:
        failures.append(
            ((4, n, 1 << 60, 0),
             Counterexample(f"admissible count for n={n}", str(expected), str(admissible)))
        )
    return items, failures


def _staircase_families(max_total: int) -> list[tuple[int, ...]]:
    """The four composition families known to be admissible, up to a total."""
    out: list[tuple[int, ...]] = []
    for m in range(max_total // 2 + 1):
        twos = (2,) * m
        if 2 * m <= max_total:
            out.append(twos)
        if 2 * m + 1 <= max_total:
            out.append(twos + (1,))
            out.append((1,) + twos)
        if 2 * m + 3 <= max_total:
            out.append((2, 1) + twos)
    return out


def verify_structure(max_n: int, jobs: int = 1) -> VerificationReport:
    """Run the structural suite over everything of size <= max_n.

    Covers: the split into (short-descent, triple-column) factors and its
    inverse, two-weight additivity across the split, the decomposition /
    build round trip, agreement of the boundary-label cell test with the
    arm/leg test, stair-step closure under psi2, admissibility of the
    staircase composition families, absence of the forbidden (2,2,1,2)
    block from admissible compositions, and the count of admissible
    compositions of n matching p(n).
    """
    started = time.perf_counter()
    sizes = list(range(max_n + 1))
    items = 0
    failures: list[Failure] = []
    for shard_items, shard_failures in _pmap(_structure_partition_shard, sizes, jobs):
        items += shard_items
        failures.extend(shard_failures)
    for shard_items, shard_failures in _pmap(_structure_pair_shard, sizes, jobs):
        items += shard_items
        failures.extend(shard_failures)
    for fam_idx, comp in enumerate(_staircase_families(max_n)):
        items += 1
        if not is_admissible(comp):
            failures.append(
                ((3, sum(comp), fam_idx, 0),
                 Counterexample(f"family {format_composition(comp)}", "admissible", "inadmissible"))
            )
    for shard_items, shard_failures in _pmap(_structure_composition_shard, sizes, jobs):
        items += shard_items
        failures.extend(shard_failures)
    return _report("structure", max_n, started, items, failures)


# check name -> (runner, default max_n); defaults keep each run well under
# a minute on commodity hardware
CHECKS: dict[str, tuple[Callable[..., VerificationReport], int]] = {
    "product-wt": (verify_product_wt, 30),
    "product-wt-tilde": (verify_product_wt_tilde, 30),
    "correction": (verify_correction, 24),
    "transport": (verify_transport, 16),
    "top-coeffs": (verify_top_coefficients, 29),
    "structure": (verify_structure, 14),
}
