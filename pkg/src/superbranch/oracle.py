"""Dimension and character oracles used to check branching decompositions.

Polynomial (hook) modules use the Berele-Regev tableau model: a filling of
the Young diagram with letters 1 < ... < m < 1' < ... < n' that weakly
increases along rows and down columns, where unbarred letters increase
strictly down columns and barred letters strictly along rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, prod
from typing import Iterator

from .branching import branch_type1, branch_type2, classical_branch, kac_branch
from .charpoly import CharPoly
from .classify import Verdict, classify_type1, classify_type2
from .partitions import Partition, conjugate, dual_weight, hook_from_atypical, is_hook, removable_vertical_strips
from .weights import (
    ClassicalWeight,
    NotDominantError,
    NotUnitaryError,
    SuperWeight,
    WeightError,
    is_dominant,
    is_integral,
    weight_sum,
)

__all__ = [
    "weyl_dim",
    "kac_dim",
    "classical_char",
    "kac_char",
    "hook_tableaux",
    "hook_tableau_dim",
    "hook_tableau_char",
    "dim_unitary",
    "char_unitary",
    "module_dim",
    "module_char",
    "partitions_of",
    "Report",
    "verify_branch",
    "howe_series_coefficient",
    "howe_check",
]


def _parts(w) -> tuple:
    if isinstance(w, ClassicalWeight):
        return w.parts
    if isinstance(w, SuperWeight):
        raise TypeError("expected a gl_d weight, got a gl(m|n) weight")
    return ClassicalWeight(w).parts


def weyl_dim(w) -> int:
    """Weyl dimension formula for a dominant gl_d weight."""
    lam = _parts(w)
    if not ClassicalWeight(lam).is_dominant():
        raise NotDominantError(f"gl_{len(lam)} weight {lam} is not dominant")
    d = len(lam)
    value = prod(
        (Fraction(lam[i] - lam[j] + j - i, j - i) for i in range(d) for j in range(i + 1, d)),
        start=Fraction(1),
    )
    assert value.denominator == 1
    return int(value)


def kac_dim(w: SuperWeight) -> int:
    if not is_dominant(w):
        raise NotDominantError(f"{w} is not dominant")
    return 2 ** (w.m * w.n) * weyl_dim(w.lam) * weyl_dim(w.omega)


@lru_cache(maxsize=None)
def _classical_char(lam: tuple) -> CharPoly:
    d = len(lam)
    if d == 0:
        return CharPoly.one(0)
    if d == 1:
        return CharPoly.monomial((lam[0],))
    total = sum(lam)
    out = CharPoly(d)
    for c in classical_branch(ClassicalWeight(lam)):
        out = out + _classical_char(c.parts).extend(1, (total - sum(c.parts),))
    return out


def classical_char(w) -> CharPoly:
    """Character of the simple gl_d module, one monomial per GT pattern."""
    lam = _parts(w)
    if not ClassicalWeight(lam).is_dominant():
        raise NotDominantError(f"gl_{len(lam)} weight {lam} is not dominant")
    if any(Fraction(x).denominator != 1 for x in lam):
        raise WeightError(f"characters need integral weights, got {lam}")
    return _classical_char(tuple(int(x) for x in lam))


def _even_char(w: SuperWeight) -> CharPoly:
    a = classical_char(w.lam)
    b = classical_char(w.omega)
    out = {}
    for e1, c1 in a.terms.items():
        for e2, c2 in b.terms.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return CharPoly(w.m + w.n, out)


def kac_char(w: SuperWeight) -> CharPoly:
    """ch L_0(w) times prod over (i, mu) of (1 + x_i^-1 y_mu)."""
    if not is_dominant(w):
        raise NotDominantError(f"{w} is not dominant")
    if not is_integral(w):
        raise WeightError(f"{w} is not integral; Laurent characters need integer exponents")
    m, n = w.m, w.n
    out = _even_char(w)
    for i in range(m):
        for mu in range(n):
            e = [0] * (m + n)
            e[i] = -1
            e[m + mu] = 1
            out = out * (CharPoly.one(m + n) + CharPoly.monomial(e))
    return out


def _require_hook(p: Partition, m: int, n: int):
    if not is_hook(p, m, n):
        raise WeightError(f"partition ({p}) is not an ({m},{n})-hook partition")


def hook_tableaux(p, m: int, n: int) -> Iterator[tuple]:
    """Brute-force enumeration of (m|n) hook tableaux of shape ``p``.

    Letters are 1..m (unbarred) and m+1..m+n (barred). Each tableau is a
    tuple of rows.
    """
    p = p if isinstance(p, Partition) else Partition(p)
    _require_hook(p, m, n)
    cells = [(r, c) for r, length in enumerate(p.parts) for c in range(length)]
    grid: dict = {}

    def ok(letter, r, c):
        left = grid.get((r, c - 1))
        if left is not None and (letter < left or (letter == left and letter > m)):
            return False
        up = grid.get((r - 1, c))
        if up is not None and (letter < up or (letter == up and letter <= m)):
            return False
        return True

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(grid[(r, c)] for c in range(length)) for r, length in enumerate(p.parts))
            return
        r, c = cells[k]
        for letter in range(1, m + n + 1):
            if ok(letter, r, c):
                grid[(r, c)] = letter
                yield from fill(k + 1)
                del grid[(r, c)]

    yield from fill(0)


def _det(rows) -> Fraction:
    a = [[Fraction(x) for x in row] for row in rows]
    size = len(a)
    sign = 1
    out = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        out *= a[col][col]
        for r in range(col + 1, size):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, size):
                    a[r][c] -= f * a[col][c]
    return sign * out


def _h_at_ones(k: int, letters: int) -> int:
    if k < 0:
        return 0
    if letters == 0:
        return 1 if k == 0 else 0
    return comb(letters + k - 1, k)


def _skew_ssyt_count(outer: Partition, inner: Partition, letters: int) -> int:
    """Semistandard fillings of outer/inner with ``letters`` letters (Jacobi-Trudi at x = 1)."""
    size = len(outer)
    if size == 0:
        return 1
    mat = [
        [_h_at_ones(outer.part(i) - inner.part(j) - i + j, letters) for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ]
    value = _det(mat)
    assert value.denominator == 1
    return int(value)


def _subpartitions(p: Partition, max_rows: int) -> Iterator[Partition]:
    rows = min(len(p), max_rows)

    def rec(i, cap, acc):
        if i == rows:
            yield Partition(acc)
            return
        for v in range(min(cap, p.part(i + 1)), -1, -1):
            yield from rec(i + 1, v, acc + [v])

    yield from rec(0, p.part(1), [])


@lru_cache(maxsize=None)
def _hook_dim(parts: tuple, m: int, n: int) -> int:
    p = Partition(parts)
    pc = conjugate(p)
    total = 0
    for mu in _subpartitions(p, m):
        inner_count = weyl_dim(mu.padded(m)) if m else 1
        total += inner_count * _skew_ssyt_count(pc, conjugate(mu), n)
    return total


def hook_tableau_dim(p, m: int, n: int) -> int:
    """Number of hook tableaux of shape ``p``.

    Counted by splitting off the unbarred subshape: an SSYT of that shape in
    m letters times a transposed skew SSYT of the rest in n letters.
    """
    p = p if isinstance(p, Partition) else Partition(p)
    _require_hook(p, m, n)
    return _hook_dim(p.parts, m, n)


def _horizontal_strips(p: Partition) -> Iterator[Partition]:
    ranges = [range(p.part(i + 1), p.part(i) + 1) for i in range(1, len(p) + 1)]
    for q in product(*ranges):
        yield Partition(q)


@lru_cache(maxsize=None)
def _hook_char(parts: tuple, m: int, n: int, a: int, b: int) -> CharPoly:
    # Remove the cells holding the largest remaining letter.
    p = Partition(parts)
    if a == 0 and b == 0:
        return CharPoly.one(m + n) if not parts else CharPoly(m + n)
    out = CharPoly(m + n)
    if b > 0:
        slot, smaller, args = m + b - 1, removable_vertical_strips(p), (a, b - 1)
    else:
        slot, smaller, args = a - 1, _horizontal_strips(p), (a - 1, 0)
    for q in smaller:
        e = [0] * (m + n)
        e[slot] = p.size - q.size
        out = out + _hook_char(q.parts, m, n, *args).shift(e)
    return out


def hook_tableau_char(p, m: int, n: int) -> CharPoly:
    """Weight generating function of hook tableaux in x_1..x_m, y_1..y_n."""
    p = p if isinstance(p, Partition) else Partition(p)
    _require_hook(p, m, n)
    return _hook_char(p.parts, m, n, m, n)


def _unitary_class(w: SuperWeight):
    c = classify_type1(w)
    if c.verdict is Verdict.NOT_DOMINANT:
        raise NotDominantError(f"{w} is not dominant")
    if not c.is_unitary:
        raise NotUnitaryError(f"{w} is not unitary ({c})")
    return c


def dim_unitary(w: SuperWeight) -> int:
    c = _unitary_class(w)
    if c.is_typical:
        return kac_dim(w)
    _, sigma = hook_from_atypical(w)
    return hook_tableau_dim(sigma, w.m, w.n)


def char_unitary(w: SuperWeight) -> CharPoly:
    c = _unitary_class(w)
    if not is_integral(w):
        raise WeightError(f"{w} is not integral; only dimensions are available")
    if c.is_typical:
        return kac_char(w)
    _, sigma = hook_from_atypical(w)
    s = int(w.omega[-1])
    return hook_tableau_char(sigma, w.m, w.n).shift([-s] * w.m + [s] * w.n)


def module_dim(w: SuperWeight) -> int:
    """dim L(w) for gl_m weights and type 1 or type 2 unitary gl(m|n) weights."""
    if w.n == 0:
        return weyl_dim(w.lam)
    if classify_type1(w).is_unitary:
        return dim_unitary(w)
    if classify_type2(w).is_unitary:
        return dim_unitary(dual_weight(w))
    return dim_unitary(w)  # raises with the violated predicate


def module_char(w: SuperWeight) -> CharPoly:
    if w.n == 0:
        return classical_char(w.lam)
    if classify_type1(w).is_unitary:
        return char_unitary(w)
    if classify_type2(w).is_unitary:
        if not is_integral(w):
            raise WeightError(f"{w} is not integral; only dimensions are available")
        return char_unitary(dual_weight(w)).invert()
    return char_unitary(w)


def partitions_of(k: int, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of k in descending lexicographic order."""

    def rec(rest, cap, acc):
        if rest == 0:
            yield Partition(acc)
            return
        if max_len is not None and len(acc) >= max_len:
            return
        for v in range(min(rest, cap), 0, -1):
            yield from rec(rest - v, v, acc + [v])

    yield from rec(k, k, [])


@dataclass
class Report:
    """Collection of {claim, lhs, rhs, pass} records."""

    title: str
    records: list = field(default_factory=list)

    def add(self, claim: str, lhs, rhs, ok: bool | None = None):
        self.records.append({"claim": claim, "lhs": lhs, "rhs": rhs, "pass": bool(lhs == rhs if ok is None else ok)})

    @property
    def passed(self) -> bool:
        return all(r["pass"] for r in self.records)

    def to_json(self) -> dict:
        return {"title": self.title, "pass": self.passed, "records": self.records}


def _restriction_rhs(w: SuperWeight, branches, char_of) -> CharPoly:
    total = CharPoly(w.m + w.n)
    for b in branches:
        delta = weight_sum(w) - weight_sum(b)
        assert delta.denominator == 1
        total = total + char_of(b).extend(1, (int(delta),))
    return total


def verify_branch(w: SuperWeight, kind: str = "type1") -> Report:
    """Check a branching decomposition against dimensions and characters."""
    if kind == "type1":
        branches = branch_type1(w)
        lhs_dim, dim_of, char_of = dim_unitary(w), module_dim, module_char
    elif kind == "type2":
        branches = branch_type2(w)
        lhs_dim, dim_of, char_of = module_dim(w), module_dim, module_char
    elif kind == "kac":
        branches = kac_branch(w)
        lhs_dim, dim_of, char_of = kac_dim(w), kac_dim, kac_char
    else:
        raise WeightError(f"unknown branching kind {kind!r}; expected type1, type2 or kac")
    report = Report(f"{kind} branching of {w}")
    parts = [dim_of(b) for b in branches]
    report.add("dimension: dim(w) = sum of branch dimensions", lhs_dim, sum(parts))
    report.records[-1]["branch_dims"] = parts
    labels = [str(b) for b in branches]
    report.add("multiplicity-free", len(labels), len(set(labels)))
    if is_integral(w):
        full = kac_char(w) if kind == "kac" else module_char(w)
        rhs = _restriction_rhs(w, branches, char_of)
        report.add("character restriction", full.to_json(), rhs.to_json())
    return report


def howe_series_coefficient(d: int, m: int, n: int, k: int) -> int:
    """Coefficient of t^k in (1 - t)^(-dm) (1 + t)^(dn)."""
    total = 0
    for j in range(0, min(k, d * n) + 1):
        even = comb(d * m + k - j - 1, k - j) if d * m else (1 if k == j else 0)
        total += comb(d * n, j) * even
    return total


def howe_check(d: int, m: int, n: int, max_degree: int) -> Report:
    """Graded dimension check of the gl_d x gl(m|n) decomposition of the supersymmetric algebra."""
    if min(d, m, n) < 1 or max_degree < 0:
        raise WeightError("howe_check needs d, m, n >= 1 and max_degree >= 0")
    report = Report(f"Howe duality d={d} m={m} n={n}")
    for k in range(max_degree + 1):
        lhs = sum(
            weyl_dim(lam.padded(d)) * hook_tableau_dim(lam, m, n)
            for lam in partitions_of(k, max_len=d)
            if is_hook(lam, m, n)
        )
        report.add(f"degree {k}", lhs, howe_series_coefficient(d, m, n, k))
    return report
