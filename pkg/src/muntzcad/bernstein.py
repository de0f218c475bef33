"""The generalized Bernstein basis of a Muntz space over an interval, as
exact sparse polynomials.

The closed form multiplies the classical Bernstein polynomial by a ratio of
Schur values of the shape at endpoint multisets and by a skew-Schur expansion
in t (regular at t = 0; the raw product form with ab/t is never evaluated
here).  A second, independent construction descends the border-complement
chain of nested spaces from a classical basis, one column at a time; the two
must agree term for term.  Derivative recurrences express d/dt of a basis
element in the basis of the derivative space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .blossom import MuntzSpace, make_space
from .errors import (
    DegenerateInterval,
    FirstTwoPartsEqual,
    FirstTwoPartsUnequal,
    IndexOutOfRange,
    NonPositiveEndpoint,
    NotAnElevation,
)
from .partitions import (
    Partition,
    descent_chain,
    hook_ratio_first_row,
    is_dimension_elevation,
    ssyt_count,
)
from .rationals import Rational, frac
from .sparsepoly import SparsePolynomial
from .symfunc import schur, skew_schur


@dataclass(frozen=True)
class BernsteinBasis:
    space: MuntzSpace
    a: Fraction
    b: Fraction
    elements: tuple[SparsePolynomial, ...]

    def __getitem__(self, k: int) -> SparsePolynomial:
        return self.elements[k]

    def __len__(self) -> int:
        return len(self.elements)

    def evaluate_all(self, t: Rational) -> tuple[Fraction, ...]:
        return tuple(p(t) for p in self.elements)


def check_interval(shape: Partition, a: Rational, b: Rational) -> tuple[Fraction, Fraction]:
    a, b = frac(a), frac(b)
    if a >= b:
        raise DegenerateInterval(f"need a < b, got [{a}, {b}]")
    if shape and a <= 0:
        raise NonPositiveEndpoint(f"shape {shape} needs 0 < a, got a = {a}")
    return a, b


def _check_index(k: int, n: int) -> None:
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"index {k} outside 0..{n}")


def rep(a: Fraction, na: int, b: Fraction, nb: int) -> tuple[Fraction, ...]:
    """The multiset (a repeated na times, b repeated nb times)."""
    return (a,) * na + (b,) * nb


def basis_ratio(shape: Partition, n: int) -> Fraction:
    """ssyt_count(shape, n+1) / ssyt_count(bottom, n); 1 for the empty shape."""
    if not shape:
        return Fraction(1)
    return hook_ratio_first_row(shape, n)


def classical_bernstein(n: int, k: int, a: Rational, b: Rational) -> SparsePolynomial:
    a, b = frac(a), frac(b)
    t_minus_a = SparsePolynomial({1: 1, 0: -a})
    b_minus_t = SparsePolynomial({0: b, 1: -1})
    scale = Fraction(math.comb(n, k)) / (b - a) ** n
    return (t_minus_a**k * b_minus_t ** (n - k)).scale(scale)


@lru_cache(maxsize=4096)
def _basis_elements(
    space: MuntzSpace, a: Fraction, b: Fraction
) -> tuple[SparsePolynomial, ...]:
    shape = space.shape
    n = space.n
    bot = shape.bottom()
    lead = basis_ratio(shape, n)
    lam1 = shape.first
    row = [Partition((j,)) if j else Partition() for j in range(lam1 + 1)]
    elements = []
    for k in range(n + 1):
        u = rep(a, n - k, b, k)
        s0 = schur(bot, u)
        den = schur(shape, rep(a, n + 1 - k, b, k)) * schur(shape, rep(a, n - k, b, k + 1))
        expansion = SparsePolynomial(
            {
                lam1 - j: (a * b) ** j * skew_schur(shape, row[j], u)
                for j in range(lam1 + 1)
            }
        )
        scale = lead * s0 / den
        elements.append(classical_bernstein(n, k, a, b) * expansion.scale(scale))
    return tuple(elements)


def bernstein_basis(space: MuntzSpace, a: Rational, b: Rational) -> BernsteinBasis:
    """Closed-form basis: element k vanishes to order k at a and n-k at b,
    the family is normalized (sums to 1), and every element lies in the
    space's monomial span."""
    a, b = check_interval(space.shape, a, b)
    return BernsteinBasis(space, a, b, _basis_elements(space, a, b))


def endpoint_derivatives(
    space: MuntzSpace, a: Rational, b: Rational, k: int
) -> tuple[Fraction, Fraction]:
    """The first nonvanishing derivatives of basis element k: the k-th at a
    and the (n-k)-th at b."""
    a, b = check_interval(space.shape, a, b)
    n = space.n
    _check_index(k, n)
    shape = space.shape
    bot = shape.bottom()
    lead = basis_ratio(shape, n)
    s0 = schur(bot, rep(a, n - k, b, k))
    d_a = (
        Fraction(math.factorial(n), math.factorial(n - k))
        * a ** shape.first
        / (b - a) ** k
        * lead
        * s0
        / schur(shape, rep(a, n + 1 - k, b, k))
    )
    d_b = (
        Fraction((-1) ** (n - k))
        * Fraction(math.factorial(n), math.factorial(k))
        * b ** shape.first
        / (b - a) ** (n - k)
        * lead
        * s0
        / schur(shape, rep(a, n - k, b, k + 1))
    )
    return d_a, d_b


# -- dimension elevation factors ----------------------------------------------


def _binomial_ratio(source: Partition, target: Partition, n: int) -> Fraction:
    """Hook-count cross ratio of a source shape at order n against a target
    shape at order n+1 (defined for any pair of shapes)."""
    return Fraction(
        ssyt_count(source, n + 1) * ssyt_count(target.bottom(), n + 1),
        ssyt_count(source.bottom(), n) * ssyt_count(target, n + 2),
    )


def _gamma_delta(
    source: Partition,
    target: Partition,
    n: int,
    a: Fraction,
    b: Fraction,
    k: int,
) -> tuple[Fraction, Fraction]:
    sb = source.bottom()
    tb = target.bottom()
    gamma = (
        schur(sb, rep(a, n - k, b, k))
        * schur(target, rep(a, n + 2 - k, b, k))
        / (schur(source, rep(a, n + 1 - k, b, k)) * schur(tb, rep(a, n + 1 - k, b, k)))
    )
    delta = (
        schur(sb, rep(a, n - k, b, k))
        * schur(target, rep(a, n - k, b, k + 2))
        / (schur(source, rep(a, n - k, b, k + 1)) * schur(tb, rep(a, n - k, b, k + 1)))
    )
    return gamma, delta


def elevation_factors(
    shape: Partition,
    target: Partition,
    n: int,
    a: Rational,
    b: Rational,
    k: int,
) -> tuple[Fraction, Fraction, Fraction]:
    """(gamma, delta, binom) for rewriting the order-n basis of `shape` in
    the order-(n+1) basis of `target`; target must give a superspace."""
    a, b = check_interval(shape, a, b)
    _check_index(k, n)
    if not is_dimension_elevation(shape, n, target):
        raise NotAnElevation(f"{target} does not elevate {shape} at order {n}")
    gamma, delta = _gamma_delta(shape, target, n, a, b, k)
    return gamma, delta, _binomial_ratio(shape, target, n)


def bernstein_via_descent(space: MuntzSpace, a: Rational, b: Rational) -> BernsteinBasis:
    """Independent basis construction: start from the classical Bernstein
    basis at the top of the border-complement chain and combine pairs of
    neighbours one chain step at a time."""
    a, b = check_interval(space.shape, a, b)
    chain = descent_chain(space.shape, space.n)
    top_shape, top_order = chain[-1]
    assert not top_shape
    elements = [classical_bernstein(top_order, k, a, b) for k in range(top_order + 1)]
    for shape, order in reversed(chain[:-1]):
        eta = shape.border_complement()
        h11 = Fraction(shape.hook(1, 1))
        new = []
        for k in range(order + 1):
            gamma, delta = _gamma_delta(shape, eta, order, a, b, k)
            new.append(
                elements[k].scale((order + 1 - k) * a / h11 * gamma)
                + elements[k + 1].scale((k + 1) * b / h11 * delta)
            )
        elements = new
    return BernsteinBasis(space, a, b, tuple(elements))


# -- derivative recurrences ----------------------------------------------------


def r_factor(shape: Partition, n: int, k: int, a: Rational, b: Rational) -> Fraction:
    """Endpoint-multiset Schur cross ratio entering both derivative
    recurrences; defined for 0 <= k <= n-1."""
    a, b = frac(a), frac(b)
    if not 0 <= k <= n - 1:
        raise IndexOutOfRange(f"index {k} outside 0..{n - 1}")
    bot = shape.bottom()
    eta = bot.bottom()
    return (
        schur(bot, rep(a, n - k - 1, b, k + 1))
        * schur(bot, rep(a, n - k, b, k))
        / (schur(shape, rep(a, n - k, b, k + 1)) * schur(eta, rep(a, n - k - 1, b, k)))
    )


def derivative_basis_equal(
    space: MuntzSpace, a: Rational, b: Rational, k: int
) -> tuple[Fraction, Fraction]:
    """Coefficients (cLeft, cRight) with
        d/dt B_k = cLeft * C_{k-1} - cRight * C_k
    where C are the order-(n-1) basis elements of the bottom shape over the
    same interval.  Requires the first two parts of the shape to be equal;
    out-of-range neighbours contribute 0.
    """
    shape = space.shape
    if not shape or shape.part(1) != shape.part(2):
        raise FirstTwoPartsUnequal(f"shape {shape} needs its first two parts equal")
    a, b = check_interval(shape, a, b)
    n = space.n
    _check_index(k, n)
    bot = shape.bottom()
    eta = bot.bottom()
    ratio = Fraction(
        ssyt_count(bot, n) ** 2, ssyt_count(shape, n + 1) * ssyt_count(eta, n - 1)
    )
    scale = Fraction(n) / ((b - a) * ratio)
    c_left = scale * r_factor(shape, n, k - 1, a, b) if k >= 1 else Fraction(0)
    c_right = scale * r_factor(shape, n, k, a, b) if k <= n - 1 else Fraction(0)
    return c_left, c_right


def derivative_basis_general(
    space: MuntzSpace, a: Rational, b: Rational, k: int
) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (g1, g2, g3) with
        d/dt B_k = g1 * C_{k-1} + g2 * C_k + g3 * C_{k+1}
    where C are the order-n basis elements over the same interval of the
    shape with one box removed from the first row.  Requires the first two
    parts distinct; out-of-range neighbours contribute 0.
    """
    shape = space.shape
    if not shape or shape.part(1) == shape.part(2):
        raise FirstTwoPartsEqual(f"shape {shape} needs its first two parts distinct")
    a, b = check_interval(shape, a, b)
    n = space.n
    _check_index(k, n)
    lam1 = shape.first
    mu = Partition((lam1 - 1,) + shape.parts[1:])
    eta = Partition((lam1 - 1, lam1 - 1) + shape.parts[1:])
    scale = _binomial_ratio(shape, eta, n) / (
        (b - a) * _binomial_ratio(mu, eta, n)
    )
    gamma, delta = _gamma_delta(shape, eta, n, a, b, k)
    g1 = Fraction(0)
    if k >= 1:
        g1 = scale * (n + 1 - k) * a * gamma * r_factor(eta, n + 1, k - 1, a, b)
    g2 = scale * r_factor(eta, n + 1, k, a, b) * (
        (k + 1) * b * delta - (n + 1 - k) * a * gamma
    )
    g3 = Fraction(0)
    if k <= n - 1:
        g3 = -scale * (k + 1) * b * delta * r_factor(eta, n + 1, k + 1, a, b)
    return g1, g2, g3


def derivative_space(space: MuntzSpace) -> MuntzSpace:
    """The space containing derivatives of this space's elements."""
    shape = space.shape
    if not shape:
        return make_space(Partition(), space.n - 1)
    if shape.part(1) == shape.part(2):
        return make_space(shape.bottom(), space.n - 1)
    return make_space(Partition((shape.first - 1,) + shape.parts[1:]), space.n)
