"""Muntz spaces, their blossoms, and pseudo-affinity factors.

A shape (Young diagram) plus an order n fixes the space
span(1, t^{s_1}, ..., t^{s_n}); the blossom is the symmetric n-argument
function whose diagonal restriction recovers (t^{s_1}, ..., t^{s_n}).  The
production formula goes through Schur-function ratios indexed by the shape's
tableau of derived partitions; an independent oracle intersects osculating
flats by solving an exact linear system, and the two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegenerateInterval,
    NonPositiveArgument,
    RepeatedArguments,
    SingularSystem,
)
from .partitions import MuntzTableau, Partition, muntz_tableau, partition_to_exponents, ssyt_count
from .rationals import Rational, falling_factorial, frac
from .symfunc import schur


@dataclass(frozen=True)
class MuntzSpace:
    """A shape of length at most n together with its exponent list."""

    shape: Partition
    n: int
    exponents: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return self.n + 1

    def tableau(self) -> MuntzTableau:
        return muntz_tableau(self.shape, self.n)

    def domain_contains(self, t: Rational) -> bool:
        return bool(self.shape) is False or frac(t) > 0


def make_space(shape: Partition, n: int) -> MuntzSpace:
    return MuntzSpace(shape, n, partition_to_exponents(shape, n))


def _check_args(space: MuntzSpace, args: Sequence[Rational], what: str) -> tuple[Fraction, ...]:
    vals = tuple(frac(u) for u in args)
    if space.shape and any(v <= 0 for v in vals):
        raise NonPositiveArgument(f"{what} must be strictly positive for shape {space.shape}")
    return vals


def blossom(space: MuntzSpace, args: Sequence[Rational]) -> tuple[Fraction, ...]:
    """Blossom value via Schur ratios; repeats among the arguments are fine.

    Component i is
        [f_{T0}(n) / f_{Ti}(n)] * S_{Ti}(args) / S_{T0}(args)
    with (T0, ..., Tn) the tableau of derived partitions of the shape.
    """
    if len(args) != space.n:
        raise ValueError(f"need exactly {space.n} arguments, got {len(args)}")
    vals = _check_args(space, args, "blossom arguments")
    tab = space.tableau()
    n = space.n
    f0 = ssyt_count(tab[0], n)
    s0 = schur(tab[0], vals)
    assert s0 != 0, "Schur value of positive arguments cannot vanish"
    out = []
    for i in range(1, n + 1):
        fi = ssyt_count(tab[i], n)
        out.append(Fraction(f0, fi) * schur(tab[i], vals) / s0)
    return tuple(out)


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over Fractions with partial pivot by nonzero."""
    n = len(matrix)
    m = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise SingularSystem("osculating-flat system is singular")
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def blossom_oracle(space: MuntzSpace, args: Sequence[Rational]) -> tuple[Fraction, ...]:
    """Independent blossom computation: intersect the order-(n-1) osculating
    flats at the n pairwise-distinct arguments.

    Each argument u contributes one linear equation in the unknown point X,
    obtained by expanding det(X - c(u), c'(u), ..., c^(n-1)(u)) = 0 along its
    first column, where c(t) = (t^{s_1}, ..., t^{s_n}).
    """
    if len(args) != space.n:
        raise ValueError(f"need exactly {space.n} arguments, got {len(args)}")
    vals = _check_args(space, args, "blossom arguments")
    if len(set(vals)) != len(vals):
        raise RepeatedArguments("oracle needs pairwise-distinct arguments")
    n = space.n
    exps = space.exponents

    def deriv(j: int, order: int, t: Fraction) -> Fraction:
        ff = falling_factorial(exps[j], order)
        if ff == 0:
            return Fraction(0)
        return ff * t ** (exps[j] - order)

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for u in vals:
        # Columns of the (n-1)-column derivative matrix at u.
        wall = [[deriv(j, order, u) for order in range(1, n)] for j in range(n)]
        coeffs = []
        for j in range(n):
            minor = [wall[r] for r in range(n) if r != j]
            sign = Fraction((-1) ** j)
            coeffs.append(sign * _minor_det(minor))
        rows.append(coeffs)
        rhs.append(sum(c * u ** exps[j] for j, c in enumerate(coeffs)))
    return tuple(_solve_exact(rows, rhs))


def _minor_det(rows: list[list[Fraction]]) -> Fraction:
    from .symfunc import det_bareiss

    return det_bareiss(rows)


def pseudo_affinity(
    space: MuntzSpace,
    fixed: Sequence[Rational],
    a: Rational,
    b: Rational,
    t: Rational,
) -> tuple[Fraction, Fraction]:
    """Both barycentric-like weights (alpha, beta) of t against [a, b] with
    the n-1 remaining blossom arguments held fixed.

    alpha vanishes at a and equals 1 at b; beta is computed from its own
    Schur expression rather than as 1 - alpha, so the pair cross-checks the
    underlying condensation identity.
    """
    a, b, t = frac(a), frac(b), frac(t)
    if a >= b:
        raise DegenerateInterval(f"need a < b, got [{a}, {b}]")
    if len(fixed) != space.n - 1:
        raise ValueError(f"need exactly {space.n - 1} fixed arguments")
    fixed_vals = _check_args(space, fixed, "fixed blossom arguments")
    if space.shape:
        if a <= 0:
            raise NonPositiveArgument("interval must lie in the positive half-line")
        if t <= 0:
            raise NonPositiveArgument("parameter must be strictly positive")
    shape = space.shape
    bot = shape.bottom()
    den = schur(shape, fixed_vals + (a, b)) * schur(bot, fixed_vals + (t,))
    alpha = (
        Fraction(t - a, b - a)
        * schur(shape, fixed_vals + (a, t))
        * schur(bot, fixed_vals + (b,))
        / den
    )
    beta = (
        Fraction(b - t, b - a)
        * schur(shape, fixed_vals + (b, t))
        * schur(bot, fixed_vals + (a,))
        / den
    )
    return alpha, beta
