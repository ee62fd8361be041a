"""Partitions, hook partitions and the weights attached to them.

A hook partition ``p`` labels the polynomial gl(m|n)-module with highest
weight ``natural_weight(p, m, n)``. Atypical unitary weights are polynomial
up to a one-dimensional twist, which is how duals of atypical weights are
computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .classify import Verdict, classify_type1, classify_type2
from .weights import NotDominantError, NotUnitaryError, SuperWeight, WeightError, is_dominant, twist

__all__ = [
    "Partition",
    "conjugate",
    "is_hook",
    "natural_weight",
    "hook_from_atypical",
    "lowest_weight_poly",
    "dual_weight",
    "removable_vertical_strips",
    "vertical_strips",
    "parse_partition",
]


@dataclass(frozen=True, order=True)
class Partition:
    """Non-increasing sequence of non-negative integers; trailing zeros are dropped."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise WeightError(f"partition {parts} has a negative part")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise WeightError(f"partition {parts} is not non-increasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def part(self, i: int) -> int:
        """1-based part, zero past the end."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self, d: int) -> tuple:
        if d < len(self.parts):
            raise WeightError(f"partition {self} has more than {d} parts")
        return self.parts + (0,) * (d - len(self.parts))

    def __str__(self):
        return ",".join(str(x) for x in self.parts)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    parts = []
    for k, piece in enumerate(text.split(",")):
        try:
            parts.append(int(piece))
        except ValueError:
            raise WeightError(f"partition entry {k + 1}: cannot parse {piece.strip()!r} as an integer") from None
    return Partition(parts)


def _as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


def conjugate(p) -> Partition:
    p = _as_partition(p)
    width = p.part(1)
    return Partition([sum(1 for x in p.parts if x >= i) for i in range(1, width + 1)])


def is_hook(p, m: int, n: int) -> bool:
    return _as_partition(p).part(m + 1) <= n


def _require_hook(p: Partition, m: int, n: int):
    if not is_hook(p, m, n):
        raise WeightError(f"partition ({p}) is not an ({m},{n})-hook partition: part {m + 1} exceeds {n}")


def natural_weight(p, m: int, n: int) -> SuperWeight:
    """Highest weight of the polynomial module labelled by the hook partition ``p``."""
    p = _as_partition(p)
    _require_hook(p, m, n)
    pc = conjugate(p)
    return SuperWeight([p.part(i) for i in range(1, m + 1)], [max(pc.part(j) - m, 0) for j in range(1, n + 1)])


def hook_from_atypical(w: SuperWeight) -> tuple[int, Partition]:
    """Partition ``sigma`` of length at most ``d`` with natural_weight(sigma) = twist(w, omega_n)."""
    verdict = classify_type1(w)
    if verdict.verdict is not Verdict.ATYPICAL_UNITARY:
        raise NotUnitaryError(f"{w} is not atypical unitary (classified {verdict})")
    m, n, mu = w.m, w.n, verdict.mu
    last = w.omega[-1]
    d = m + w.omega[0] - last
    head = [w.lam[i] + last for i in range(m)]
    tail = conjugate([w.omega[j] - last for j in range(mu - 1)])
    if any(Fraction(x).denominator != 1 for x in head) or d.denominator != 1:
        raise AssertionError(f"{w}: twisted weight is not integral")
    sigma = Partition(list(head) + list(tail.parts))
    d = int(d)
    if len(sigma) > d or not is_hook(sigma, m, n):
        raise AssertionError(f"{w}: sigma = ({sigma}) is not in P_{d} and ({m},{n})-hook")
    if natural_weight(sigma, m, n) != twist(w, last):
        raise AssertionError(f"{w}: natural weight of sigma differs from the twisted weight")
    return d, sigma


def lowest_weight_poly(p, m: int, n: int) -> SuperWeight:
    """Lowest weight of the polynomial module labelled by ``p``."""
    p = _as_partition(p)
    _require_hook(p, m, n)
    pc = conjugate(p)
    return SuperWeight(
        [max(p.part(i) - n, 0) for i in range(m, 0, -1)],
        [pc.part(j) for j in range(n, 0, -1)],
    )


def _reverse_dual(w: SuperWeight) -> SuperWeight:
    # Kac-module formula; it is its own inverse.
    m, n = w.m, w.n
    return SuperWeight([n - x for x in reversed(w.lam)], [-x - m for x in reversed(w.omega)])


def _dual_of_type2_atypical(w: SuperWeight) -> SuperWeight:
    m, n = w.m, w.n
    shift = w.lam[0]
    base = twist(w, -shift)
    excess = [-base.lam[m - i] for i in range(1, m + 1)]
    cols = [-base.omega[n - j] for j in range(1, n + 1)]
    if any(Fraction(x).denominator != 1 or x < 0 for x in excess + cols):
        raise AssertionError(f"{w}: untwisted weight is not minus a polynomial lowest weight")
    rows = max([m] + [int(c) for c in cols])
    parts = []
    for i in range(1, rows + 1):
        parts.append(sum(1 for c in cols if c >= i) + (int(excess[i - 1]) if i <= m else 0))
    sigma = Partition(parts)
    if -lowest_weight_poly(sigma, m, n) != base:
        raise AssertionError(f"{w}: no hook partition reproduces this type 2 weight")
    return twist(natural_weight(sigma, m, n), -shift)


def dual_weight(w: SuperWeight) -> SuperWeight:
    """Highest weight of the dual of the simple module L(w).

    Defined for type 1 and type 2 unitary weights (and for any dominant gl_m
    weight when n = 0); the two classes are exchanged.
    """
    if not is_dominant(w):
        raise NotDominantError(f"{w} is not dominant")
    if w.n == 0:
        return SuperWeight([-x for x in reversed(w.lam)])
    c1 = classify_type1(w)
    if c1.verdict is Verdict.TYPICAL_UNITARY:
        return _reverse_dual(w)
    if c1.verdict is Verdict.ATYPICAL_UNITARY:
        _, sigma = hook_from_atypical(w)
        return twist(-lowest_weight_poly(sigma, w.m, w.n), w.omega[-1])
    c2 = classify_type2(w)
    if c2.verdict is Verdict.TYPICAL_UNITARY2:
        return _reverse_dual(w)
    if c2.verdict is Verdict.ATYPICAL_UNITARY2:
        return _dual_of_type2_atypical(w)
    raise NotUnitaryError(f"{w} is neither type 1 nor type 2 unitary; its dual is not computed")


def removable_vertical_strips(p) -> list[Partition]:
    """Every partition obtained from ``p`` by removing a vertical strip."""
    p = _as_partition(p)
    out = set()
    for drop in product((0, 1), repeat=len(p)):
        q = [a - b for a, b in zip(p.parts, drop)]
        if all(q[i] >= q[i + 1] for i in range(len(q) - 1)):
            out.add(Partition(q))
    return sorted(out, reverse=True)


def vertical_strips(p, m: int, n: int) -> list[Partition]:
    """Vertical-strip removals of the (m,n)-hook ``p`` that are (m,n-1)-hook."""
    p = _as_partition(p)
    if n < 1:
        raise WeightError("vertical_strips needs n >= 1")
    _require_hook(p, m, n)
    return [q for q in removable_vertical_strips(p) if is_hook(q, m, n - 1)]
