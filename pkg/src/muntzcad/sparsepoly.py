"""Exact univariate polynomials with rational coefficients on integer
exponents, stored sparsely (zero coefficients absent)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .rationals import Rational, frac


class SparsePolynomial:
    """Immutable map exponent -> nonzero Fraction coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Rational] | Iterable[tuple[int, Rational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, Fraction] = {}
        for e, c in items:
            e = int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            c = frac(c) + clean.get(e, Fraction(0))
            if c == 0:
                clean.pop(e, None)
            else:
                clean[e] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("SparsePolynomial is immutable")

    @classmethod
    def zero(cls) -> "SparsePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "SparsePolynomial":
        return cls({0: 1})

    @classmethod
    def constant(cls, c: Rational) -> "SparsePolynomial":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: Rational = 1) -> "SparsePolynomial":
        return cls({exponent: coeff})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        merged = dict(self.terms)
        for e, c in other.terms.items():
            merged[e] = merged.get(e, Fraction(0)) + c
        return SparsePolynomial(merged)

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SparsePolynomial):
            out: dict[int, Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = e1 + e2
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
            return SparsePolynomial(out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c: Rational) -> "SparsePolynomial":
        c = frac(c)
        if c == 0:
            return SparsePolynomial()
        return SparsePolynomial({e: c * v for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "SparsePolynomial":
        if k < 0:
            raise ValueError("negative power")
        out = SparsePolynomial.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- calculus and evaluation ---------------------------------------------

    def derivative(self, order: int = 1) -> "SparsePolynomial":
        poly = self
        for _ in range(order):
            poly = SparsePolynomial(
                {e - 1: e * c for e, c in poly.terms.items() if e >= 1}
            )
        return poly

    def __call__(self, t: Rational) -> Fraction:
        t = frac(t)
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * t**e
        return total

    # -- structure ------------------------------------------------------------

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self.terms)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return max(self.terms, default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "SparsePolynomial(0)"
        bits = [f"{c}*t^{e}" if e else str(c) for e, c in self.terms.items()]
        return "SparsePolynomial(" + " + ".join(bits) + ")"

    def to_json(self) -> dict[str, str]:
        from .rationals import format_rational

        return {str(e): format_rational(c) for e, c in self.terms.items()}
