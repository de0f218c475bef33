"""Design-level objects: curves with Young-diagram shape parameters,
control-polygon dimension elevation, hodographs, C1 composite joins, and
tensor-product surfaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bernstein import (
    BernsteinBasis,
    basis_ratio,
    bernstein_basis,
    check_interval,
    derivative_basis_general,
    elevation_factors,
    r_factor,
    rep,
)
from .blossom import MuntzSpace, make_space
from .errors import (
    DegenerateDirection,
    DimensionMismatch,
    NonPositiveArgument,
    NotAnElevation,
)
from .partitions import Partition, ssyt_count
from .paths import de_casteljau_eval
from .rationals import Rational, frac
from .sparsepoly import SparsePolynomial
from .symfunc import schur

Point = tuple[Fraction, ...]


def _as_points(points: Sequence[Sequence[Rational]], expected: int) -> tuple[Point, ...]:
    pts = tuple(tuple(frac(x) for x in p) for p in points)
    if len(pts) != expected:
        raise DimensionMismatch(f"need {expected} control points, got {len(pts)}")
    dims = {len(p) for p in pts}
    if len(dims) != 1:
        raise DimensionMismatch(f"control points have mixed dimensions {sorted(dims)}")
    return pts


@dataclass(frozen=True)
class MuntzCurve:
    space: MuntzSpace
    a: Fraction
    b: Fraction
    points: tuple[Point, ...]

    @property
    def dimension(self) -> int:
        return len(self.points[0])

    def basis(self) -> BernsteinBasis:
        return bernstein_basis(self.space, self.a, self.b)


def make_curve(
    shape: Partition,
    n: int,
    a: Rational,
    b: Rational,
    points: Sequence[Sequence[Rational]],
) -> MuntzCurve:
    a, b = check_interval(shape, a, b)
    return MuntzCurve(make_space(shape, n), a, b, _as_points(points, n + 1))


def _check_domain(curve: MuntzCurve, t: Rational) -> None:
    if curve.space.shape and frac(t) <= 0:
        raise NonPositiveArgument(
            f"shape {curve.space.shape} lives on the positive half-line, got t = {t}"
        )


def curve_eval(curve: MuntzCurve, t: Rational) -> Point:
    """Basis-weighted sum of the control points."""
    _check_domain(curve, t)
    weights = curve.basis().evaluate_all(t)
    return tuple(
        sum((w * p[d] for w, p in zip(weights, curve.points)), Fraction(0))
        for d in range(curve.dimension)
    )


def curve_eval_casteljau(curve: MuntzCurve, t: Rational) -> Point:
    """Same point through the triangular recurrence."""
    return de_casteljau_eval(curve.space, curve.a, curve.b, curve.points, t)


def coordinate_polynomials(curve: MuntzCurve) -> tuple[SparsePolynomial, ...]:
    """One exact polynomial per coordinate."""
    basis = curve.basis()
    out = []
    for d in range(curve.dimension):
        acc = SparsePolynomial()
        for k, p in enumerate(curve.points):
            acc = acc + basis.elements[k].scale(p[d])
        out.append(acc)
    return tuple(out)


# -- dimension elevation -------------------------------------------------------


def elevation_weights(
    shape: Partition, target: Partition, n: int, a: Rational, b: Rational, k: int
) -> tuple[Fraction, Fraction]:
    """(rho_{k-1}, xi_k): the convex pair combining neighbouring control
    points into elevated point k, for 1 <= k <= n."""
    a, b = frac(a), frac(b)
    gamma_k, _, binom = elevation_factors(shape, target, n, a, b, k)
    _, delta_prev, _ = elevation_factors(shape, target, n, a, b, k - 1)
    power = shape.first - target.first
    xi = Fraction(n + 1 - k, n + 1) * a**power * binom * gamma_k
    rho = Fraction(k, n + 1) * b**power * binom * delta_prev
    return rho, xi


def elevate(curve: MuntzCurve, target: Partition) -> MuntzCurve:
    """Rewrite the curve in the order-(n+1) space of `target`: endpoints are
    kept, interior point k is a convex combination of points k-1 and k."""
    shape = curve.space.shape
    n = curve.space.n
    new_points = [curve.points[0]]
    for k in range(1, n + 1):
        rho, xi = elevation_weights(shape, target, n, curve.a, curve.b, k)
        new_points.append(
            tuple(
                rho * prev + xi * cur
                for prev, cur in zip(curve.points[k - 1], curve.points[k])
            )
        )
    new_points.append(curve.points[n])
    return MuntzCurve(
        make_space(target, n + 1), curve.a, curve.b, tuple(new_points)
    )


# -- derivatives -----------------------------------------------------------------


def endpoint_tangent_factor(
    shape: Partition, n: int, a: Rational, b: Rational, at_start: bool
) -> Fraction:
    """Scalar with derivative(a) = factor * (P1 - P0) at the left endpoint,
    and the mirror statement at the right one; positive on valid data."""
    a, b = frac(a), frac(b)
    lead = basis_ratio(shape, n)
    bot = shape.bottom()
    if at_start:
        return (
            Fraction(n)
            * a**shape.first
            / (b - a)
            * lead
            * schur(bot, rep(a, n - 1, b, 1))
            / schur(shape, rep(a, n, b, 1))
        )
    return (
        Fraction(n)
        * b**shape.first
        / (b - a)
        * lead
        * schur(bot, rep(a, 1, b, n - 1))
        / schur(shape, rep(a, 1, b, n))
    )


def curve_derivative(curve: MuntzCurve, t: Rational) -> Point:
    """Hodograph value at t through the derivative recurrence matching the
    shape (classical rule for the empty shape, two-term rule when the first
    two parts agree, three-term rule otherwise)."""
    _check_domain(curve, t)
    shape = curve.space.shape
    n = curve.space.n
    a, b = curve.a, curve.b
    dim = curve.dimension
    pts = curve.points

    def combo(coeffs_points: list[tuple[Fraction, Point]]) -> Point:
        return tuple(
            sum((c * p[d] for c, p in coeffs_points), Fraction(0)) for d in range(dim)
        )

    if not shape:
        if n == 1:
            return tuple((pts[1][d] - pts[0][d]) / (b - a) for d in range(dim))
        lower = bernstein_basis(make_space(Partition(), n - 1), a, b)
        weights = lower.evaluate_all(t)
        scale = Fraction(n) / (b - a)
        return tuple(
            scale
            * sum(
                (weights[k] * (pts[k + 1][d] - pts[k][d]) for k in range(n)),
                Fraction(0),
            )
            for d in range(dim)
        )

    if shape.part(1) == shape.part(2):
        bot = shape.bottom()
        eta = bot.bottom()
        ratio = Fraction(
            ssyt_count(bot, n) ** 2, ssyt_count(shape, n + 1) * ssyt_count(eta, n - 1)
        )
        scale = Fraction(n) / ((b - a) * ratio)
        lower = bernstein_basis(make_space(bot, n - 1), a, b)
        weights = lower.evaluate_all(t)
        return tuple(
            scale
            * sum(
                (
                    r_factor(shape, n, k, a, b)
                    * weights[k]
                    * (pts[k + 1][d] - pts[k][d])
                    for k in range(n)
                ),
                Fraction(0),
            )
            for d in range(dim)
        )

    # first two parts distinct: three-term transposition
    lam1 = shape.first
    mu = Partition((lam1 - 1,) + shape.parts[1:])
    lower = bernstein_basis(make_space(mu, n), a, b)
    weights = lower.evaluate_all(t)
    g_triples = [
        derivative_basis_general(curve.space, a, b, k) for k in range(n + 1)
    ]
    out = []
    for d in range(dim):
        acc = Fraction(0)
        for k in range(n + 1):
            coeff = g_triples[k][1] * pts[k][d]
            if k >= 1:
                coeff += g_triples[k - 1][2] * pts[k - 1][d]
            if k + 1 <= n:
                coeff += g_triples[k + 1][0] * pts[k + 1][d]
            acc += weights[k] * coeff
        out.append(acc)
    return tuple(out)


# -- C1 joins ---------------------------------------------------------------------


def _direction(points: tuple[Point, ...]) -> Point:
    last, prev = points[-1], points[-2]
    d = tuple(x - y for x, y in zip(last, prev))
    if all(x == 0 for x in d):
        raise DegenerateDirection("last two control points coincide")
    return d


def join_c1_interval(
    curve: MuntzCurve, mu: Partition, rho: Rational
) -> Fraction:
    """The right endpoint c of the follower interval [b, c] making the
    composite C1, in the column-shape / polynomial-follower case where c has
    a closed form.  rho scales the leg: P_n - P_{n-1} = rho (Q_1 - Q_0)."""
    shape = curve.space.shape
    n = curve.space.n
    if not shape or shape.parts != (1,) * len(shape):
        raise NotAnElevation(f"closed-form interval solve needs a column shape, got {shape}")
    if mu:
        raise NotAnElevation(f"closed-form interval solve needs an empty follower shape, got {mu}")
    rho = frac(rho)
    _direction(curve.points)
    k = len(shape)
    a, b = curve.a, curve.b
    from .symfunc import elementary

    ek = elementary(k, rep(a, 1, b, n))
    ek1 = elementary(k - 1, rep(a, 1, b, n - 1))
    return b + Fraction(k) * (b - a) * ek / ((n + 1) * b * rho * ek1)


def join_c1_q1(curve: MuntzCurve, mu: Partition, c: Rational) -> Point:
    """Given the follower interval [b, c] and shape mu, the unique Q1 (with
    Q0 = P_n) making the one-sided derivatives at b agree."""
    c = frac(c)
    b = curve.b
    if c <= b:
        raise DegenerateDirection(f"follower interval [{b}, {c}] is degenerate")
    n = curve.space.n
    left = endpoint_tangent_factor(curve.space.shape, n, curve.a, b, at_start=False)
    right = endpoint_tangent_factor(mu, n, b, c, at_start=True)
    d = _direction(curve.points)
    q0 = curve.points[-1]
    return tuple(q + left / right * x for q, x in zip(q0, d))


# -- tensor surfaces ----------------------------------------------------------------


@dataclass(frozen=True)
class TensorSurface:
    """Grid of control points blended by two generalized Bernstein bases of
    the same order; the first parameter runs over [a, b] with space_u."""

    space_u: MuntzSpace
    space_v: MuntzSpace
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    grid: tuple[tuple[Point, ...], ...]


def make_surface(
    shape_u: Partition,
    shape_v: Partition,
    n: int,
    interval_u: tuple[Rational, Rational],
    interval_v: tuple[Rational, Rational],
    grid: Sequence[Sequence[Sequence[Rational]]],
) -> TensorSurface:
    a, b = check_interval(shape_u, *interval_u)
    c, d = check_interval(shape_v, *interval_v)
    if len(grid) != n + 1:
        raise DimensionMismatch(f"need {n + 1} grid rows, got {len(grid)}")
    rows = tuple(_as_points(row, n + 1) for row in grid)
    dims = {len(p) for row in rows for p in row}
    if len(dims) != 1:
        raise DimensionMismatch(f"grid points have mixed dimensions {sorted(dims)}")
    return TensorSurface(make_space(shape_u, n), make_space(shape_v, n), a, b, c, d, rows)


def surface_eval(surface: TensorSurface, s: Rational, t: Rational) -> Point:
    """Double basis-weighted sum; corner parameters return corner points."""
    wu = bernstein_basis(surface.space_u, surface.a, surface.b).evaluate_all(s)
    wv = bernstein_basis(surface.space_v, surface.c, surface.d).evaluate_all(t)
    dim = len(surface.grid[0][0])
    n = surface.space_u.n
    return tuple(
        sum(
            (wu[i] * wv[j] * surface.grid[i][j][d] for i in range(n + 1) for j in range(n + 1)),
            Fraction(0),
        )
        for d in range(dim)
    )


# -- sampling -------------------------------------------------------------------------


def parameter_grid(a: Fraction, b: Fraction, m: int) -> list[Fraction]:
    if m < 2:
        raise ValueError("need at least two samples")
    return [a + (b - a) * Fraction(i, m - 1) for i in range(m)]


def sample_curve(curve: MuntzCurve, m: int) -> list[tuple[Fraction, Point]]:
    """m curve points on the uniform rational grid including endpoints."""
    return [(t, curve_eval(curve, t)) for t in parameter_grid(curve.a, curve.b, m)]


def sample_surface(
    surface: TensorSurface, m: int
) -> list[tuple[Fraction, Fraction, Point]]:
    """m x m surface points on the uniform rational grid."""
    su = parameter_grid(surface.a, surface.b, m)
    sv = parameter_grid(surface.c, surface.d, m)
    return [(s, t, surface_eval(surface, s, t)) for s in su for t in sv]
