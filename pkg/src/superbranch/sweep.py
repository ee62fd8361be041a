"""Exhaustive verification sweeps over boxes of dominant integral weights."""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterator

from .branching import branch_type1, branch_type2
from .classify import classify_type1, classify_type2
from .oracle import Report, howe_check, verify_branch
from .partitions import dual_weight
from .weights import SuperWeight


def _blocks(k: int, lo: int, hi: int) -> list[tuple]:
    return [c[::-1] for c in combinations_with_replacement(range(lo, hi + 1), k)]


def dominant_weights(m: int, n: int, lo: int, hi: int) -> Iterator[SuperWeight]:
    """All dominant integral gl(m|n) weights with entries in [lo, hi], descending order."""
    odd = _blocks(n, lo, hi)
    for a in reversed(_blocks(m, lo, hi)):
        for b in reversed(odd):
            yield SuperWeight(a, b)


def weight_box(max_m: int, max_n: int, max_entry: int, min_entry: int | None = None) -> Iterator[SuperWeight]:
    lo = -max_entry if min_entry is None else min_entry
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            yield from dominant_weights(m, n, lo, max_entry)


def _merge(summary: Report, sub: Report):
    for r in sub.records:
        summary.records.append({**r, "claim": f"{sub.title}: {r['claim']}"})


def sweep_branch(max_m: int = 2, max_n: int = 2, max_entry: int = 2) -> Report:
    """Type 1, type 2 and Kac branching checks on every weight of the box."""
    summary = Report(f"branching sweep m<={max_m} n<={max_n} |entries|<={max_entry}")
    for w in weight_box(max_m, max_n, max_entry):
        if classify_type1(w).is_unitary:
            _merge(summary, verify_branch(w, "type1"))
        if classify_type2(w).is_unitary:
            _merge(summary, verify_branch(w, "type2"))
        _merge(summary, verify_branch(w, "kac"))
    return summary


def dual_checks(w: SuperWeight) -> Report:
    """Involution, classification transport and branching transport for a type 1 unitary weight."""
    report = Report(f"duality of {w}")
    c1 = classify_type1(w)
    du = dual_weight(w)
    report.add("dual is an involution", str(dual_weight(du)), str(w))
    c2 = classify_type2(du)
    report.add("dual is type 2 unitary", str(c2), str(c2), ok=c2.is_unitary)
    report.add("typicality preserved", c2.is_typical, c1.is_typical)
    lhs = sorted(str(x) for x in branch_type2(du))
    rhs = sorted(str(dual_weight(b)) for b in branch_type1(w))
    report.add("dual maps type 1 branches onto type 2 branches of the dual", lhs, rhs)
    return report


def sweep_dual(max_m: int = 2, max_n: int = 2, max_entry: int = 2) -> Report:
    summary = Report(f"duality sweep m<={max_m} n<={max_n} |entries|<={max_entry}")
    for w in weight_box(max_m, max_n, max_entry):
        if classify_type1(w).is_unitary:
            _merge(summary, dual_checks(w))
        elif classify_type2(w).is_unitary:
            du = dual_weight(w)
            summary.add(f"type 2 weight {w}: dual is type 1 unitary", str(du), str(du), ok=classify_type1(du).is_unitary)
            summary.add(f"type 2 weight {w}: dual is an involution", str(dual_weight(du)), str(w))
    return summary


def sweep_howe(max_d: int = 3, max_m: int = 3, max_n: int = 3, max_degree: int = 6) -> Report:
    summary = Report(f"Howe duality sweep d<={max_d} m<={max_m} n<={max_n} degree<={max_degree}")
    for d in range(1, max_d + 1):
        for m in range(1, max_m + 1):
            for n in range(1, max_n + 1):
                _merge(summary, howe_check(d, m, n, max_degree))
    return summary
