"""Typicality and unitarity (both star types) of gl(m|n) highest weights."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .weights import SuperWeight, WeightError, atyp_form, is_dominant

__all__ = [
    "Verdict",
    "UnitaryClass1",
    "UnitaryClass2",
    "vanishing_pairs",
    "is_typical",
    "classify_type1",
    "classify_type2",
]


class Verdict(enum.Enum):
    NOT_DOMINANT = "NotDominant"
    NOT_UNITARY = "NotUnitary"
    TYPICAL_UNITARY = "TypicalUnitary"
    ATYPICAL_UNITARY = "AtypicalUnitary"
    TYPICAL_UNITARY2 = "TypicalUnitary2"
    ATYPICAL_UNITARY2 = "AtypicalUnitary2"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class UnitaryClass1:
    """Type 1 verdict.

    ``mu`` is the smallest odd index satisfying the atypical condition and
    ``witnesses`` lists every such index.
    """

    verdict: Verdict
    mu: int | None = None
    witnesses: tuple = ()

    @property
    def is_unitary(self) -> bool:
        return self.verdict in (Verdict.TYPICAL_UNITARY, Verdict.ATYPICAL_UNITARY)

    @property
    def is_typical(self) -> bool:
        return self.verdict is Verdict.TYPICAL_UNITARY

    def __str__(self):
        return f"{self.verdict}(mu={self.mu})" if self.mu is not None else str(self.verdict)


@dataclass(frozen=True)
class UnitaryClass2:
    """Type 2 verdict; ``k`` is the largest valid even index."""

    verdict: Verdict
    k: int | None = None
    witnesses: tuple = ()

    @property
    def is_unitary(self) -> bool:
        return self.verdict in (Verdict.TYPICAL_UNITARY2, Verdict.ATYPICAL_UNITARY2)

    @property
    def is_typical(self) -> bool:
        return self.verdict is Verdict.TYPICAL_UNITARY2

    def __str__(self):
        return f"{self.verdict}(k={self.k})" if self.k is not None else str(self.verdict)


def _need_odd(w: SuperWeight):
    if w.n < 1:
        raise WeightError("typicality and unitarity classification need n >= 1")


def vanishing_pairs(w: SuperWeight) -> list[tuple[int, int]]:
    """All (i, mu) with (w + rho, eps_i - delta_mu) = 0."""
    _need_odd(w)
    return [
        (i, mu)
        for i in range(1, w.m + 1)
        for mu in range(1, w.n + 1)
        if atyp_form(w, i, mu) == 0
    ]


def is_typical(w: SuperWeight) -> bool:
    return not vanishing_pairs(w)


def classify_type1(w: SuperWeight) -> UnitaryClass1:
    _need_odd(w)
    if not is_dominant(w):
        return UnitaryClass1(Verdict.NOT_DOMINANT)
    m, n = w.m, w.n
    typical = atyp_form(w, m, n) > 0
    # (w + rho, eps_m - delta_mu) = 0 and omega_mu = omega_n
    found = tuple(mu for mu in range(1, n + 1) if atyp_form(w, m, mu) == 0 and w.omega[mu - 1] == w.omega[-1])
    if typical and found:
        raise AssertionError(f"{w}: typical and atypical unitarity conditions both hold")
    if typical:
        return UnitaryClass1(Verdict.TYPICAL_UNITARY)
    if found:
        return UnitaryClass1(Verdict.ATYPICAL_UNITARY, found[0], found)
    return UnitaryClass1(Verdict.NOT_UNITARY)


def type2_form(w: SuperWeight, k: int) -> Fraction:
    """(w + rho, eps_k - delta_1)."""
    return atyp_form(w, k, 1)


def classify_type2(w: SuperWeight) -> UnitaryClass2:
    _need_odd(w)
    if not is_dominant(w):
        return UnitaryClass2(Verdict.NOT_DOMINANT)
    typical = type2_form(w, 1) < 0
    found = tuple(k for k in range(1, w.m + 1) if type2_form(w, k) == 0 and w.lam[0] == w.lam[k - 1])
    if typical and found:
        raise AssertionError(f"{w}: typical and atypical type 2 conditions both hold")
    if typical:
        return UnitaryClass2(Verdict.TYPICAL_UNITARY2)
    if found:
        return UnitaryClass2(Verdict.ATYPICAL_UNITARY2, found[-1], found)
    return UnitaryClass2(Verdict.NOT_UNITARY)
