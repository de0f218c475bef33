"""Exact evaluation of elementary, complete, Schur, and skew Schur symmetric
functions at multisets of rational arguments.

The canonical Schur backend is the Jacobi-Trudi determinant in complete
symmetric values: it is regular at repeated arguments.  Three independent
backends (bialternant ratio, Naegelsbach-Kostka, Giambelli) plus a direct
tableau sum exist for cross-checking; they must agree exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import NotContained, RepeatedArguments
from .partitions import Partition, enumerate_ssyt
from .rationals import Rational, frac


class ArgMultiset:
    """Evaluation point: values with multiplicities, order-insensitive."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[tuple[Rational, int]] = ()):
        merged: dict[Fraction, int] = {}
        for value, mult in entries:
            mult = int(mult)
            if mult <= 0:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            v = frac(value)
            merged[v] = merged.get(v, 0) + mult
        object.__setattr__(
            self, "entries", tuple(sorted(merged.items()))
        )

    def __setattr__(self, name, value):
        raise AttributeError("ArgMultiset is immutable")

    @classmethod
    def of(cls, *values: Rational) -> "ArgMultiset":
        return cls((v, 1) for v in values)

    @classmethod
    def from_values(cls, values: Iterable[Rational]) -> "ArgMultiset":
        return cls((v, 1) for v in values)

    def with_extra(self, *values: Rational) -> "ArgMultiset":
        return ArgMultiset(tuple(self.entries) + tuple((v, 1) for v in values))

    def values(self) -> tuple[Fraction, ...]:
        out: list[Fraction] = []
        for v, m in self.entries:
            out.extend([v] * m)
        return tuple(out)

    @property
    def size(self) -> int:
        return sum(m for _, m in self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, ArgMultiset) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"ArgMultiset({list(self.entries)!r})"


Args = Union[ArgMultiset, Sequence[Rational]]


def _values(args: Args) -> tuple[Fraction, ...]:
    if isinstance(args, ArgMultiset):
        return args.values()
    return tuple(sorted(frac(v) for v in args))


@lru_cache(maxsize=65536)
def _elementary_table(values: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Coefficients of prod(1 + v x): e_0 .. e_len."""
    table = [Fraction(1)] + [Fraction(0)] * len(values)
    for idx, v in enumerate(values, start=1):
        for r in range(idx, 0, -1):
            table[r] += v * table[r - 1]
    return tuple(table)


@lru_cache(maxsize=65536)
def _complete_table(values: tuple[Fraction, ...], upto: int) -> tuple[Fraction, ...]:
    """h_0 .. h_upto via the Newton-style recurrence against e-values."""
    e = _elementary_table(values)
    h = [Fraction(1)] + [Fraction(0)] * upto
    for r in range(1, upto + 1):
        acc = Fraction(0)
        for i in range(1, min(r, len(values)) + 1):
            acc += (-1) ** (i + 1) * e[i] * h[r - i]
        h[r] = acc
    return tuple(h)


def elementary(r: int, args: Args) -> Fraction:
    """e_r; zero outside 0..size."""
    values = _values(args)
    if r < 0 or r > len(values):
        return Fraction(0)
    return _elementary_table(values)[r]


def complete(r: int, args: Args) -> Fraction:
    """h_r; zero for negative r, h_0 = 1."""
    if r < 0:
        return Fraction(0)
    values = _values(args)
    if r == 0:
        return Fraction(1)
    return _complete_table(values, r)[r]


def det_bareiss(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Fraction-free Gaussian elimination; every division is exact."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    m = [list(row) for row in matrix]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@lru_cache(maxsize=65536)
def _schur_cached(parts: tuple[int, ...], values: tuple[Fraction, ...]) -> Fraction:
    shape = Partition(parts)
    size = len(values)
    if not shape:
        return Fraction(1)
    if len(shape) > size:
        return Fraction(0)
    rows = len(shape)
    top = max(shape.part(i) - i + rows for i in range(1, rows + 1))
    h = _complete_table(values, max(top, 0))
    matrix = [
        [
            h[shape.part(i) - i + j] if shape.part(i) - i + j >= 0 else Fraction(0)
            for j in range(1, rows + 1)
        ]
        for i in range(1, rows + 1)
    ]
    return det_bareiss(matrix)


def schur(shape: Partition, args: Args) -> Fraction:
    """Canonical dispatcher: Jacobi-Trudi determinant in h-values.

    Returns 1 for the empty shape and 0 when the shape has more rows than
    there are arguments.
    """
    return _schur_cached(shape.parts, _values(args))


def schur_bialternant(shape: Partition, args: Args) -> Fraction:
    """Ratio of the alternant to the Vandermonde; arguments must be
    pairwise distinct (no confluent limits here)."""
    values = _values(args)
    if len(set(values)) != len(values):
        raise RepeatedArguments("bialternant needs pairwise-distinct arguments")
    n = len(values)
    if len(shape) > n:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    num = det_bareiss(
        [[values[i] ** (shape.part(j) + n - j) for j in range(1, n + 1)] for i in range(n)]
    )
    den = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            den *= values[i] - values[j]
    return num / den


def schur_nk(shape: Partition, args: Args) -> Fraction:
    """Naegelsbach-Kostka determinant in e-values of the conjugate shape."""
    values = _values(args)
    if not shape:
        return Fraction(1)
    conj = shape.conjugate()
    rows = len(conj)
    e = _elementary_table(values)

    def ee(r: int) -> Fraction:
        if r < 0 or r > len(values):
            return Fraction(0)
        return e[r]

    matrix = [
        [ee(conj.part(i) - i + j) for j in range(1, rows + 1)]
        for i in range(1, rows + 1)
    ]
    return det_bareiss(matrix)


def _hook_schur(p: int, q: int, values: tuple[Fraction, ...]) -> Fraction:
    """Schur value of the hook with arm p and leg q via the alternating
    h*e expansion; zero for negative coordinates."""
    if p < 0 or q < 0:
        return Fraction(0)
    h = _complete_table(values, p + q + 1)
    e = _elementary_table(values)

    def ee(r: int) -> Fraction:
        if r < 0 or r > len(values):
            return Fraction(0)
        return e[r]

    return sum(
        ((-1) ** m) * h[p + 1 + m] * ee(q - m) for m in range(q + 1)
    )


def schur_giambelli(shape: Partition, args: Args) -> Fraction:
    """Determinant of hook Schur values over the Frobenius decomposition."""
    values = _values(args)
    if not shape:
        return Fraction(1)
    fr = shape.frobenius()
    r = len(fr.arms)
    matrix = [
        [_hook_schur(fr.arms[i], fr.legs[j], values) for j in range(r)]
        for i in range(r)
    ]
    return det_bareiss(matrix)


def schur_ssyt_oracle(shape: Partition, args: Args, limit: int | None = None) -> Fraction:
    """Direct tableau sum: the weight monomials of every semistandard
    filling, summed. Independent of every determinant route."""
    values = _values(args)
    kwargs = {} if limit is None else {"limit": limit}
    total = Fraction(0)
    for tab in enumerate_ssyt(shape, len(values), **kwargs):
        term = Fraction(1)
        for row in tab:
            for entry in row:
                term *= values[entry - 1]
        total += term
    return total


def skew_schur(shape: Partition, inner: Partition, args: Args) -> Fraction:
    """Skew Schur value via the h-determinant; inner must fit inside shape."""
    if not shape.contains(inner):
        raise NotContained(f"{inner} is not contained in {shape}")
    if shape == inner:
        return Fraction(1)
    values = _values(args)
    rows = len(shape)
    top = max(
        (shape.part(i) - inner.part(j) - i + j for i in range(1, rows + 1) for j in range(1, rows + 1)),
        default=0,
    )
    h = _complete_table(values, max(top, 0))

    def hh(r: int) -> Fraction:
        if r < 0:
            return Fraction(0)
        return h[r]

    matrix = [
        [hh(shape.part(i) - inner.part(j) - i + j) for j in range(1, rows + 1)]
        for i in range(1, rows + 1)
    ]
    return det_bareiss(matrix)
