"""Exhaustive sweeps that check the invertibility equivalences.

Each sweep splits its enumeration into contiguous chunks, evaluates them
(optionally in worker processes) and merges the results in enumeration
order, so the report does not depend on the number of jobs.
"""
from __future__ import annotations

import json
import logging
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Any, Callable, Iterator, Optional, Sequence

from . import incidence as inc
from .birkhoff import system_from_incidence, system_matrix
from .matrix import bareiss_det, cofactor_det, det, zero_block_witness
from .pascal import diagonal_all_nonzero, truncated
from .selection import Selection, dominates

log = logging.getLogger(__name__)

MAX_N = {"main": 10, "polya": 8, "decompose": 9, "sumdot": 7}
DEFAULT_N = {"main": 8, "polya": 6, "decompose": 6, "sumdot": 6}
DEFAULT_CAP = 100
DEFAULT_SEED = 1729
ORACLE_FRACTION = 0.01
FAULTS = ("strict_dominance",)


@dataclass
class EquivalenceReport:
    scope: str
    n: int
    pairs_checked: int = 0
    counterexamples: list = field(default_factory=list)
    counterexamples_total: int = 0
    oracle_checked: int = 0
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return self.counterexamples_total == 0

    def to_dict(self, include_elapsed: bool = True) -> dict:
        data = asdict(self)
        if not include_elapsed:
            data.pop("elapsed_ms")
        return data

    def to_json(self, include_elapsed: bool = True, **kwargs: Any) -> str:
        return json.dumps(self.to_dict(include_elapsed), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "EquivalenceReport":
        return cls(**{k: data[k] for k in cls.__dataclass_fields__ if k in data})

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        unit = "pairs" if self.scope in ("main", "sumdot") else "matrices"
        line = (
            f"{self.scope:<10} n={self.n:<3} {self.pairs_checked:>9} {unit:<8} "
            f"{self.counterexamples_total:>6} counterexamples  "
            f"{self.elapsed_ms / 1000:8.2f}s  {status}"
        )
        if self.oracle_checked:
            line += f"  (cofactor oracle on {self.oracle_checked})"
        return line


@dataclass
class _Partial:
    checked: int = 0
    bad: int = 0
    oracle: int = 0
    records: list = field(default_factory=list)

    def add(self, record: dict, cap: int) -> None:
        self.bad += 1
        if len(self.records) < cap:
            self.records.append(record)


def _chunks(items: Sequence, parts: int) -> list[Sequence]:
    parts = max(1, min(parts, len(items)))
    size = math.ceil(len(items) / parts) if items else 0
    return [items[i:i + size] for i in range(0, len(items), size)] if items else []


def _run(worker: Callable, tasks: list, jobs: int) -> list[_Partial]:
    if jobs <= 1 or len(tasks) <= 1:
        return [worker(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, *zip(*tasks)))


def _merge(report: EquivalenceReport, partials: list[_Partial], cap: int) -> EquivalenceReport:
    for p in partials:
        report.pairs_checked += p.checked
        report.counterexamples_total += p.bad
        report.oracle_checked += p.oracle
        room = cap - len(report.counterexamples)
        report.counterexamples.extend(p.records[:max(room, 0)])
    return report


def _check_n(scope: str, n: int, max_n: Optional[int]) -> None:
    bound = MAX_N[scope] if max_n is None else max_n
    if not 0 <= n <= bound:
        raise ValueError(f"n={n} outside 0..{bound} for the {scope} sweep")


# -- selection pairs -------------------------------------------------------

def count_selection_pairs(n: int) -> int:
    return math.comb(2 * n + 2, n + 1) - 1


def enumerate_selection_pairs(n: int) -> Iterator[tuple[Selection, Selection]]:
    """Every (r, x) of equal-size nonempty subsets of 0..n, size-major order."""
    for size in range(1, n + 2):
        subsets = [Selection(c) for c in combinations(range(n + 1), size)]
        for r in subsets:
            for x in subsets:
                yield r, x


def _main_worker(
    n: int,
    items: Sequence[tuple[int, tuple[int, ...], int]],
    sample: frozenset,
    fault: Optional[str],
    cap: int,
) -> _Partial:
    out = _Partial()
    for size, r, offset in items:
        for idx, x in enumerate(combinations(range(n + 1), size), start=offset):
            t = truncated(r, x)
            d = bareiss_det(t.rows())
            dom = all(a < b for a, b in zip(r, x)) if fault == "strict_dominance" else dominates(r, x)
            preds = {
                "det_nonzero": d != 0,
                "dominates": dom,
                "diagonal_nonzero": diagonal_all_nonzero(r, x),
                "polya": inc.is_polya(inc.from_selection(r, x, n)),
            }
            problems = []
            if len(set(preds.values())) != 1:
                problems.append("predicates_disagree")
            if d != 0 and zero_block_witness(t) is not None:
                problems.append("zero_block_with_nonzero_det")
            if idx in sample:
                out.oracle += 1
                if cofactor_det(t) != d:
                    problems.append("cofactor_mismatch")
            out.checked += 1
            if problems:
                out.add({"r": list(r), "x": list(x), "det": str(d),
                         "predicates": preds, "problems": problems}, cap)
    return out


def verify_main_theorem(
    n: int,
    jobs: int = 1,
    seed: int = DEFAULT_SEED,
    oracle_fraction: float = ORACLE_FRACTION,
    cap: int = DEFAULT_CAP,
    fault: Optional[str] = None,
    max_n: Optional[int] = None,
) -> EquivalenceReport:
    """Check det != 0, dominance, nonzero diagonal and Pólya agree for every pair.

    Also checks that a zero-block witness never accompanies a nonzero
    determinant, and compares against cofactor expansion on a seeded sample.
    """
    _check_n("main", n, max_n)
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    start = time.perf_counter()
    total = count_selection_pairs(n)
    k = round(total * oracle_fraction)
    sample = frozenset(random.Random(seed).sample(range(total), k)) if k else frozenset()

    items = []
    offset = 0
    for size in range(1, n + 2):
        block = math.comb(n + 1, size)
        for r in combinations(range(n + 1), size):
            items.append((size, r, offset))
            offset += block
    tasks = [(n, chunk, sample, fault, cap) for chunk in _chunks(items, 4 * max(jobs, 1))]
    report = _merge(EquivalenceReport("main", n), _run(_main_worker, tasks, jobs), cap)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    log.info("main sweep n=%d: %d pairs, %d bad", n, report.pairs_checked, report.counterexamples_total)
    return report


# -- incidence matrices ----------------------------------------------------

def count_incidence(n: int) -> int:
    return math.comb(2 * n + 2, n + 1)


def _polya_worker(n: int, rows: Sequence[tuple[int, int]], nodes: tuple, cap: int) -> _Partial:
    out = _Partial()
    for row0, row1 in rows:
        e = inc.IncidenceMatrix(n, row0, row1)
        polya = inc.is_polya(e)
        invertible = det(system_matrix(system_from_incidence(e, nodes))) != 0
        out.checked += 1
        if polya != invertible:
            out.add({"E": inc.format_compact(e), "predicates": {"polya": polya, "invertible": invertible}}, cap)
    return out


def verify_polya_theorem(
    n: int,
    jobs: int = 1,
    cap: int = DEFAULT_CAP,
    nodes: tuple = (0, 1),
    max_n: Optional[int] = None,
) -> EquivalenceReport:
    """Pólya condition vs invertibility of the two-node system, every incidence matrix."""
    _check_n("polya", n, max_n)
    start = time.perf_counter()
    rows = [(e.row0, e.row1) for e in inc.enumerate_incidence(n)]
    tasks = [(n, chunk, tuple(nodes), cap) for chunk in _chunks(rows, 4 * max(jobs, 1))]
    report = _merge(EquivalenceReport("polya", n), _run(_polya_worker, tasks, jobs), cap)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def _decompose_worker(m: int, rows: Sequence[tuple[int, int]], cap: int) -> _Partial:
    out = _Partial()
    for row0, row1 in rows:
        e = inc.IncidenceMatrix(m, row0, row1)
        try:
            e1, e2 = inc.decompose(e)
        except (inc.ConstructionError, inc.IncidenceError) as exc:
            out.checked += 1
            out.add({"E": inc.format_compact(e), "violations": [f"construction: {exc}"]}, cap)
            continue
        violations = inc.decomposition_violations(e, e1, e2)
        out.checked += 1
        if violations:
            out.add({"E": inc.format_compact(e), "E1": inc.format_compact(e1),
                     "E2": inc.format_compact(e2), "violations": violations}, cap)
    return out


def verify_decomposition(
    n: int,
    jobs: int = 1,
    cap: int = DEFAULT_CAP,
    max_n: Optional[int] = None,
) -> EquivalenceReport:
    """Every decomposition guarantee, for all incidence matrices of width 1..n+1."""
    _check_n("decompose", n, max_n)
    start = time.perf_counter()
    tasks = []
    for m in range(n + 1):
        rows = [(e.row0, e.row1) for e in inc.enumerate_incidence(m)]
        tasks.extend((m, chunk, cap) for chunk in _chunks(rows, max(jobs, 1)))
    report = _merge(EquivalenceReport("decompose", n), _run(_decompose_worker, tasks, jobs), cap)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def _sumdot_worker(
    m: int, left: Sequence[tuple[int, int]], right: Sequence[tuple[int, int]], cap: int
) -> _Partial:
    out = _Partial()
    full = (1 << (m + 1)) - 1
    width = m + 1
    for a0, a1 in left:
        for b0, b1 in right:
            criterion = (a0 & b0).bit_count() == (~a1 & ~b1 & full).bit_count()
            s0, s1 = a0 | b0, a1 & b1
            direct = s0.bit_count() + s1.bit_count() == width
            out.checked += 1
            problems = []
            if criterion != direct:
                problems.append("count_criterion_mismatch")
            if direct and not inc.is_polya(inc.BoolMatrix2xN(m, s0, s1)):
                problems.append("polya_not_preserved")
            if problems:
                fmt = lambda r0, r1: inc.format_compact(inc.BoolMatrix2xN(m, r0, r1))  # noqa: E731
                out.add({"E1": fmt(a0, a1), "E2": fmt(b0, b1), "sum_dot": fmt(s0, s1),
                         "problems": problems}, cap)
    return out


def verify_sum_dot(
    n: int,
    jobs: int = 1,
    cap: int = DEFAULT_CAP,
    max_n: Optional[int] = None,
) -> EquivalenceReport:
    """Sum-dot of two Pólya incidence matrices: incidence criterion and Pólya preservation.

    Covers every ordered pair of Pólya incidence matrices of width 1..n+1.
    """
    _check_n("sumdot", n, max_n)
    start = time.perf_counter()
    tasks = []
    for m in range(n + 1):
        polya = [(e.row0, e.row1) for e in inc.enumerate_incidence(m) if inc.is_polya(e)]
        tasks.extend((m, chunk, polya, cap) for chunk in _chunks(polya, 4 * max(jobs, 1)))
    report = _merge(EquivalenceReport("sumdot", n), _run(_sumdot_worker, tasks, jobs), cap)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


SWEEPS: dict[str, Callable[..., EquivalenceReport]] = {
    "main": verify_main_theorem,
    "polya": verify_polya_theorem,
    "decompose": verify_decomposition,
    "sumdot": verify_sum_dot,
}
# sumdot is opt-in: Pólya preservation has counterexamples from width 4 on.
ALL_SCOPES = ("main", "polya", "decompose")
