"""Sparse Laurent polynomials with integer coefficients."""

from __future__ import annotations


class CharPoly:
    """Laurent polynomial in ``nvars`` variables, stored as {exponent tuple: coefficient}.

    Variables are ordered x_1..x_m, y_1..y_n when used as a gl(m|n) character.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def one(cls, nvars: int) -> CharPoly:
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp, coeff: int = 1) -> CharPoly:
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    def __eq__(self, other):
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: CharPoly) -> CharPoly:
        self._same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return CharPoly(self.nvars, out)

    def __mul__(self, other: CharPoly) -> CharPoly:
        self._same(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return CharPoly(self.nvars, out)

    def shift(self, exp) -> CharPoly:
        """Multiply by the monomial with exponent vector ``exp``."""
        return CharPoly(self.nvars, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()})

    def invert(self) -> CharPoly:
        """Substitute every variable by its inverse (character of the dual)."""
        return CharPoly(self.nvars, {tuple(-a for a in e): c for e, c in self.terms.items()})

    def extend(self, extra: int, fill=None) -> CharPoly:
        """Append ``extra`` variables, giving them the exponents ``fill`` (zeros by default)."""
        fill = tuple(fill) if fill is not None else (0,) * extra
        return CharPoly(self.nvars + extra, {e + fill: c for e, c in self.terms.items()})

    def at_ones(self) -> int:
        return sum(self.terms.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def _same(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*x^{e}" for e, c in sorted(self.terms.items(), reverse=True))

    def to_json(self) -> list:
        return [[list(e), c] for e, c in sorted(self.terms.items(), reverse=True)]
