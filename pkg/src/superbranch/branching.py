"""Branching rules gl(m|n) -> gl(m|n-1) and gl_d -> gl_{d-1}.

Every function returns a duplicate-free list sorted in descending
lexicographic order of the weight entries. Restrictions to gl(m|0) are
returned as ``SuperWeight`` objects with an empty odd part.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator

from .classify import Verdict, classify_type1, classify_type2
from .partitions import Partition, natural_weight, vertical_strips
from .weights import (
    ClassicalWeight,
    NotDominantError,
    NotUnitaryError,
    SuperWeight,
    WeightError,
    atyp_form,
    is_dominant,
    is_integral,
)

__all__ = [
    "classical_branch",
    "pieri",
    "interlacing_candidates",
    "branch_type1",
    "branch_type2",
    "kac_branch",
    "poly_branch",
    "gt_count",
    "iter_gt_patterns",
    "gt_patterns",
]


def _desc(weights) -> list:
    weights = set(weights)
    key = (lambda w: w.entries) if all(isinstance(w, SuperWeight) for w in weights) else (lambda w: w.parts)
    return sorted(weights, key=key, reverse=True)


def _drops(values, frozen=frozenset()) -> Iterator[tuple]:
    """All vectors values - e with e_i in {0, 1}, and e_i = 0 for frozen i (0-based)."""
    choices = [(0,) if i in frozen else (0, 1) for i in range(len(values))]
    for e in product(*choices):
        yield tuple(v - x for v, x in zip(values, e))


def _interlacing(values) -> Iterator[tuple]:
    """All v' of length len(values) - 1 with values[j] >= v'_j >= values[j+1], integer steps."""
    ranges = [
        [values[j] - k for k in range(int(values[j] - values[j + 1]) + 1)]
        for j in range(len(values) - 1)
    ]
    return product(*ranges)


def _require_classical_dominant(w: ClassicalWeight):
    if not w.is_dominant():
        raise NotDominantError(f"gl_{w.d} weight ({w}) is not dominant")


def classical_branch(w: ClassicalWeight) -> list[ClassicalWeight]:
    if not isinstance(w, ClassicalWeight):
        w = ClassicalWeight(w)
    if w.d < 1:
        raise WeightError("classical branching needs d >= 1")
    _require_classical_dominant(w)
    return _desc(ClassicalWeight(p) for p in _interlacing(w.parts))


def pieri(w: ClassicalWeight, k: int, dual: bool = False) -> list[ClassicalWeight]:
    """Constituents of the k-th exterior power of the natural module (or its dual) tensored with L(w)."""
    if not isinstance(w, ClassicalWeight):
        w = ClassicalWeight(w)
    _require_classical_dominant(w)
    if not 0 <= k <= w.d:
        raise WeightError(f"Pieri degree k={k} out of range 0..{w.d}")
    sign = -1 if dual else 1
    out = []
    for e in product((0, 1), repeat=w.d):
        if sum(e) != k:
            continue
        cand = ClassicalWeight([a + sign * b for a, b in zip(w.parts, e)])
        if cand.is_dominant():
            out.append(cand)
    return _desc(out)


def _super_candidates(w: SuperWeight, frozen) -> Iterator[SuperWeight]:
    omegas = list(_interlacing(w.omega))
    for lam in _drops(w.lam, frozen):
        for om in omegas:
            cand = SuperWeight(lam, om)
            if is_dominant(cand):
                yield cand


def _raise_for(w: SuperWeight, verdict, kind: str):
    if verdict.verdict is Verdict.NOT_DOMINANT:
        raise NotDominantError(f"{w} is not dominant")
    raise NotUnitaryError(f"{w} is not {kind} unitary ({verdict})")


def interlacing_candidates(w: SuperWeight) -> list[SuperWeight]:
    """Dominant gl(m|n-1) weights satisfying the interlacing conditions (C1) and (C2) alone.

    For atypical weights with witness mu >= 2 this set is too large; see
    ``branch_type1``.
    """
    m = w.m
    frozen = {m - 1} if atyp_form(w, m, 1) == 0 else set()
    return _desc(_super_candidates(w, frozen))


def branch_type1(w: SuperWeight) -> list[SuperWeight]:
    """Restriction of the unitary simple module L(w) to gl(m|n-1).

    On top of (C1) and (C2), an atypical weight with witness mu >= 2 keeps a
    branch that lowers lam_m only if omega'_{mu-1} = omega_mu; otherwise the
    twisted branch is not a polynomial weight.
    """
    c = classify_type1(w)
    if not c.is_unitary:
        _raise_for(w, c, "type 1")
    out = interlacing_candidates(w)
    mu = c.mu
    if mu is not None and mu >= 2:
        out = [b for b in out if b.lam[-1] == w.lam[-1] or b.omega[mu - 2] == w.omega[mu - 1]]
    for b in out:
        if b.n and not classify_type1(b).is_unitary:
            raise AssertionError(f"branch {b} of {w} is not unitary")
    return out


def branch_type2(w: SuperWeight) -> list[SuperWeight]:
    """Restriction of the type 2 unitary simple module L(w) to gl(m|n-1)."""
    c = classify_type2(w)
    if not c.is_unitary:
        _raise_for(w, c, "type 2")
    zeros = [k for k in range(1, w.m + 1) if atyp_form(w, k, 1) == 0]
    frozen = set(range(max(zeros))) if zeros else set()
    out = _desc(_super_candidates(w, frozen))
    for b in out:
        if b.n and not classify_type2(b).is_unitary:
            raise AssertionError(f"branch {b} of {w} is not type 2 unitary")
    return out


def kac_branch(w: SuperWeight) -> list[SuperWeight]:
    """Kac modules of gl(m|n-1) (simple gl_m modules when n = 1) in the restriction of K(w)."""
    if w.n < 1:
        raise WeightError("Kac branching needs n >= 1")
    if not is_dominant(w):
        raise NotDominantError(f"{w} is not dominant")
    if not is_integral(w):
        raise WeightError(f"{w} is not integral")
    return _desc(_super_candidates(w, frozenset()))


def poly_branch(p, m: int, n: int) -> list[tuple[Partition, SuperWeight]]:
    return [(q, natural_weight(q, m, n - 1)) for q in vertical_strips(p, m, n)]


@lru_cache(maxsize=None)
def _classical_count(parts: tuple) -> int:
    if len(parts) <= 1:
        return 1
    return sum(_classical_count(c) for c in _interlacing(parts))


@lru_cache(maxsize=None)
def _super_count(w: SuperWeight) -> int:
    if w.n == 0:
        return _classical_count(w.lam)
    return sum(_super_count(b) for b in branch_type1(w))


def gt_count(w: SuperWeight) -> int:
    """Number of Gelfand-Tsetlin patterns with top row w (no patterns are built)."""
    if w.n and not classify_type1(w).is_unitary:
        _raise_for(w, classify_type1(w), "type 1")
    if not w.n and not is_dominant(w):
        raise NotDominantError(f"{w} is not dominant")
    return _super_count(w)


def _classical_chains(w: ClassicalWeight) -> Iterator[tuple]:
    if w.d <= 1:
        yield (w,)
        return
    for c in classical_branch(w):
        for rest in _classical_chains(c):
            yield (w,) + rest


def iter_gt_patterns(w: SuperWeight) -> Iterator[tuple]:
    """Yield chains (w, ..., w restricted to gl(m|0), gl_{m-1} weight, ..., gl_1 weight)."""
    if w.n == 0:
        if not is_dominant(w):
            raise NotDominantError(f"{w} is not dominant")
        for chain in _classical_chains(w.even()):
            yield (w,) + chain[1:]
        return
    for b in branch_type1(w):
        for rest in iter_gt_patterns(b):
            yield (w,) + rest


def gt_patterns(w: SuperWeight, emit: bool = False):
    """Return (count, patterns); patterns is None unless ``emit``."""
    if not emit:
        return gt_count(w), None
    pats = list(iter_gt_patterns(w))
    return len(pats), pats
