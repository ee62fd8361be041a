"""Highest weights of gl(m|n) and gl_d with exact rational entries."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "WeightError",
    "NotDominantError",
    "NotUnitaryError",
    "SuperWeight",
    "ClassicalWeight",
    "rho",
    "atyp_form",
    "atyp_form_expanded",
    "is_dominant",
    "is_integral",
    "twist",
    "weight_sum",
    "parse_rational",
    "parse_weight",
    "format_weight",
]


class WeightError(ValueError):
    """Raised when a weight violates a precondition."""


class NotDominantError(WeightError):
    pass


class NotUnitaryError(WeightError):
    pass


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed; use int, Fraction or 'a/b'")
    return Fraction(x)


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


@dataclass(frozen=True)
class SuperWeight:
    """A weight (lam_1..lam_m | omega_1..omega_n) of gl(m|n).

    Entries are stored as ``Fraction``. Dominance is not enforced here;
    ``n == 0`` describes a plain gl_m weight.
    """

    lam: tuple
    omega: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(_rat(x) for x in self.lam))
        object.__setattr__(self, "omega", tuple(_rat(x) for x in self.omega))
        if not self.lam:
            raise WeightError("m must be at least 1 (empty even part)")

    @property
    def m(self) -> int:
        return len(self.lam)

    @property
    def n(self) -> int:
        return len(self.omega)

    @property
    def entries(self) -> tuple:
        return self.lam + self.omega

    def even(self) -> ClassicalWeight:
        return ClassicalWeight(self.lam)

    def odd(self) -> ClassicalWeight:
        return ClassicalWeight(self.omega)

    def __neg__(self) -> SuperWeight:
        return SuperWeight(tuple(-x for x in self.lam), tuple(-x for x in self.omega))

    def __str__(self) -> str:
        return format_weight(self)


@dataclass(frozen=True)
class ClassicalWeight:
    """A gl_d weight; ``d == 0`` is the (unique) weight of gl_0."""

    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(_rat(x) for x in self.parts))

    @property
    def d(self) -> int:
        return len(self.parts)

    def is_dominant(self) -> bool:
        p = self.parts
        return all(_is_int(p[i] - p[i + 1]) and p[i] >= p[i + 1] for i in range(len(p) - 1))

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)


def rho(m: int, n: int) -> SuperWeight:
    """Graded half sum of positive roots of gl(m|n)."""
    if m < 1:
        raise WeightError("rho needs m >= 1")
    if n < 0:
        raise WeightError("rho needs n >= 0")
    lam = [Fraction(m - n - 2 * i + 1, 2) for i in range(1, m + 1)]
    omega = [Fraction(m + n - 2 * mu + 1, 2) for mu in range(1, n + 1)]
    return SuperWeight(lam, omega)


def _check_indices(w: SuperWeight, i: int, mu: int):
    if w.n < 1:
        raise WeightError("no odd roots when n = 0")
    if not 1 <= i <= w.m:
        raise WeightError(f"even index i={i} out of range 1..{w.m}")
    if not 1 <= mu <= w.n:
        raise WeightError(f"odd index mu={mu} out of range 1..{w.n}")


def form(a: SuperWeight, b: SuperWeight) -> Fraction:
    """Bilinear form with (eps_i, eps_j) = delta_ij and (delta_mu, delta_nu) = -delta_munu."""
    return sum((x * y for x, y in zip(a.lam, b.lam)), Fraction(0)) - sum(
        (x * y for x, y in zip(a.omega, b.omega)), Fraction(0)
    )


def odd_root(m: int, n: int, i: int, mu: int) -> SuperWeight:
    """eps_i - delta_mu as a weight vector."""
    lam = [0] * m
    omega = [0] * n
    lam[i - 1] = 1
    omega[mu - 1] = -1
    return SuperWeight(lam, omega)


def atyp_form_expanded(w: SuperWeight, i: int, mu: int) -> Fraction:
    """(w + rho, eps_i - delta_mu) evaluated term by term."""
    _check_indices(w, i, mu)
    r = rho(w.m, w.n)
    shifted = SuperWeight(
        [a + b for a, b in zip(w.lam, r.lam)], [a + b for a, b in zip(w.omega, r.omega)]
    )
    return form(shifted, odd_root(w.m, w.n, i, mu))


def atyp_form(w: SuperWeight, i: int, mu: int) -> Fraction:
    """(w + rho, eps_i - delta_mu) = lam_i + omega_mu + m - i - mu + 1."""
    _check_indices(w, i, mu)
    return w.lam[i - 1] + w.omega[mu - 1] + w.m - i - mu + 1


def _block_dominant(seq: Sequence[Fraction]) -> bool:
    return all(seq[k] >= seq[k + 1] and _is_int(seq[k] - seq[k + 1]) for k in range(len(seq) - 1))


def is_dominant(w: SuperWeight) -> bool:
    return _block_dominant(w.lam) and _block_dominant(w.omega)


def is_integral(w: SuperWeight) -> bool:
    return all(_is_int(x) for x in w.entries)


def twist(w: SuperWeight, s) -> SuperWeight:
    """Tensor with the one-dimensional module of weight (s,..,s|-s,..,-s)."""
    s = _rat(s)
    return SuperWeight([x + s for x in w.lam], [x - s for x in w.omega])


def weight_sum(w: SuperWeight) -> Fraction:
    return sum(w.entries, Fraction(0))


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise WeightError("empty entry")
    num, sep, den = text.partition("/")
    try:
        if sep:
            if not den.strip():
                raise ValueError
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise WeightError(f"cannot parse {text!r} as an integer or a/b") from None
    return value


def _parse_block(text: str, label: str) -> list[Fraction]:
    if not text.strip():
        return []
    out = []
    for k, piece in enumerate(text.split(",")):
        try:
            out.append(parse_rational(piece))
        except WeightError as exc:
            raise WeightError(f"{label} part, entry {k + 1}: {exc}") from None
    return out


def parse_weight(text: str) -> SuperWeight:
    """Parse ``"l1,...,lm|w1,...,wn"``; the odd part may be empty."""
    if text.count("|") != 1:
        raise WeightError(f"weight {text!r} must contain exactly one '|' separating even and odd parts")
    left, right = text.split("|")
    lam = _parse_block(left, "even")
    omega = _parse_block(right, "odd")
    if not lam:
        raise WeightError(f"weight {text!r} has an empty even part (m must be >= 1)")
    return SuperWeight(lam, omega)


def format_weight(w: SuperWeight) -> str:
    return ",".join(str(x) for x in w.lam) + "|" + ",".join(str(x) for x in w.omega)

