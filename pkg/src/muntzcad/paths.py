"""Combinatorial de Casteljau paths and the triangle evaluation they encode.

A path grows a singleton {k} to {0..n} one element at a time, always
extending at the current max+1 or min-1.  Weighting each edge with a
symmetric two-component function of the endpoint/parameter multiset turns
the path sum into the k-th generalized Bernstein element, which makes the
paths an evaluation oracle independent of the closed-form polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .blossom import MuntzSpace, pseudo_affinity
from .errors import DimensionMismatch, IndexOutOfRange, PathCountTooLarge
from .rationals import Rational, frac
from .symfunc import schur

# Path sums are an oracle, not a production evaluator.
MAX_PATHS = 100_000

PSI_KINDS = ("full", "psi1", "psi2")


@dataclass(frozen=True)
class DeCasteljauPath:
    """Nested index sets A_0 .. A_n, each stored sorted ascending."""

    sets: tuple[tuple[int, ...], ...]

    @property
    def start(self) -> int:
        return self.sets[0][0]

    def edges(self):
        """(A_l, A_{l+1}, grew_at_max) triples along the path."""
        for cur, nxt in zip(self.sets, self.sets[1:]):
            yield cur, nxt, nxt[-1] > cur[-1]


def enumerate_paths(n: int, k: int) -> list[DeCasteljauPath]:
    """All paths starting at {k}; there are C(n, k) of them."""
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"start index {k} outside 0..{n}")
    out: list[DeCasteljauPath] = []

    def grow(chain: tuple[tuple[int, ...], ...]) -> None:
        cur = chain[-1]
        if len(cur) == n + 1:
            out.append(DeCasteljauPath(chain))
            return
        if cur[-1] + 1 <= n:
            grow(chain + (cur + (cur[-1] + 1,),))
        if cur[0] - 1 >= 0:
            grow(chain + ((cur[0] - 1,) + cur,))

    grow(((k,),))
    return out


def _edge_multiset(
    n: int, cur: tuple[int, ...], nxt: tuple[int, ...], a: Fraction, b: Fraction, t: Fraction
) -> tuple[Fraction, ...]:
    """Fixed blossom arguments on an edge: t repeated |A_l|-1 times, b
    repeated min(A_{l+1}) times, a filling up to n-1."""
    t_count = len(cur) - 1
    b_count = nxt[0]
    a_count = n - len(cur) - nxt[0]
    assert a_count >= 0, "pigeonhole: |A_l| + min(A_{l+1}) <= n"
    return (t,) * t_count + (b,) * b_count + (a,) * a_count


def path_weight(
    space: MuntzSpace,
    a: Rational,
    b: Rational,
    t: Rational,
    path: DeCasteljauPath,
    psi: str = "full",
) -> Fraction:
    """Product of edge weights along the path.

    psi selects the weighting: "full" uses the pseudo-affinity pair
    (beta on max-growth edges, alpha on min-growth edges); "psi1" and "psi2"
    are its two factor families, exposed so their closed-form path products
    can be checked independently.
    """
    if psi not in PSI_KINDS:
        raise ValueError(f"psi must be one of {PSI_KINDS}")
    a, b, t = frac(a), frac(b), frac(t)
    n = space.n
    shape = space.shape
    bot = shape.bottom()
    total = Fraction(1)
    for cur, nxt, grew_max in path.edges():
        u = _edge_multiset(n, cur, nxt, a, b, t)
        if psi == "full":
            alpha, beta = pseudo_affinity(space, u, a, b, t)
            total *= beta if grew_max else alpha
        elif psi == "psi1":
            tail = a if grew_max else b
            total *= schur(bot, u + (tail,)) / schur(bot, u + (t,))
        else:
            pair = (b, t) if grew_max else (a, t)
            total *= schur(shape, u + pair) / schur(shape, u + (a, b))
    return total


def path_sum_basis(
    space: MuntzSpace, a: Rational, b: Rational, t: Rational, k: int
) -> Fraction:
    """Sum of full path weights from {k}: the k-th basis element at t."""
    n = space.n
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"index {k} outside 0..{n}")
    count = math.comb(n, k)
    if count > MAX_PATHS:
        raise PathCountTooLarge(f"{count} paths exceeds the bound {MAX_PATHS}")
    return sum(
        (path_weight(space, a, b, t, p) for p in enumerate_paths(n, k)),
        Fraction(0),
    )


def de_casteljau_eval(
    space: MuntzSpace,
    a: Rational,
    b: Rational,
    points: Sequence[Sequence[Rational]],
    t: Rational,
) -> tuple[Fraction, ...]:
    """Triangular evaluation of the control polygon at parameter t.

    Level r combines neighbours with the pseudo-affinity weights at the
    fixed multiset (t^{r-1}, b^position, a^filler); the apex is the curve
    point.
    """
    n = space.n
    if len(points) != n + 1:
        raise DimensionMismatch(f"need {n + 1} control points, got {len(points)}")
    dims = {len(p) for p in points}
    if len(dims) != 1:
        raise DimensionMismatch(f"control points have mixed dimensions {sorted(dims)}")
    a, b, t = frac(a), frac(b), frac(t)
    level = [tuple(frac(x) for x in p) for p in points]
    for r in range(1, n + 1):
        nxt = []
        for k in range(n + 1 - r):
            u = (t,) * (r - 1) + (b,) * k + (a,) * (n - r - k)
            alpha, beta = pseudo_affinity(space, u, a, b, t)
            nxt.append(
                tuple(beta * x + alpha * y for x, y in zip(level[k], level[k + 1]))
            )
        level = nxt
    return level[0]
