import math
from fractions import Fraction

import pytest

from conftest import rand_positive, shapes_up_to
from muntzcad.bernstein import (
    basis_ratio,
    bernstein_basis,
    bernstein_via_descent,
    classical_bernstein,
    derivative_basis_equal,
    derivative_basis_general,
    elevation_factors,
    endpoint_derivatives,
    rep,
)
from muntzcad.blossom import make_space
from muntzcad.errors import (
    DegenerateInterval,
    FirstTwoPartsEqual,
    FirstTwoPartsUnequal,
    NonPositiveEndpoint,
    NotAnElevation,
)
from muntzcad.partitions import Partition
from muntzcad.sparsepoly import SparsePolynomial
from muntzcad.symfunc import complete, elementary, schur

F = Fraction

INTERVALS = [(F(1), F(2)), (F(1, 2), F(3))]


def pointwise_product_form(space, a, b, k, t):
    """Direct evaluation of the closed form as a product with argument
    a*b/t appended; only valid at t != 0, used purely as a cross-check."""
    shape = space.shape
    n = space.n
    u = rep(a, n - k, b, k)
    return (
        basis_ratio(shape, n)
        * classical_bernstein(n, k, a, b)(t)
        * schur(shape.bottom(), u)
        * t**shape.first
        * schur(shape, u + (a * b / t,))
        / (schur(shape, rep(a, n + 1 - k, b, k)) * schur(shape, rep(a, n - k, b, k + 1)))
    )


class TestClosedForm:
    def test_empty_shape_is_classical(self):
        space = make_space(Partition(()), 3)
        basis = bernstein_basis(space, 0, 1)
        for k in range(4):
            assert basis.elements[k] == classical_bernstein(3, k, 0, 1)

    def test_partition_of_unity(self):
        for shape in shapes_up_to(5):
            for n in range(max(len(shape), 1), 6):
                for a, b in INTERVALS:
                    basis = bernstein_basis(make_space(shape, n), a, b)
                    total = SparsePolynomial()
                    for p in basis.elements:
                        total = total + p
                    assert total == SparsePolynomial.one()

    def test_support_inside_span(self):
        for shape in shapes_up_to(5):
            for n in range(max(len(shape), 1), 5):
                space = make_space(shape, n)
                allowed = {0, *space.exponents}
                basis = bernstein_basis(space, 1, 2)
                for p in basis.elements:
                    assert set(p.support) <= allowed

    def test_matches_pointwise_product_form(self, rng):
        for shape in shapes_up_to(4):
            for n in range(max(len(shape), 1), 5):
                space = make_space(shape, n)
                a, b = F(1), F(2)
                basis = bernstein_basis(space, a, b)
                for k in range(n + 1):
                    for _ in range(3):
                        t = rand_positive(rng)
                        assert basis.elements[k](t) == pointwise_product_form(
                            space, a, b, k, t
                        )

    def test_positive_inside_interval(self):
        space = make_space(Partition((2, 1)), 3)
        a, b = F(1), F(2)
        basis = bernstein_basis(space, a, b)
        for p in basis.elements:
            for i in range(1, 8):
                t = a + (b - a) * F(i, 8)
                assert p(t) > 0

    def test_degenerate_interval(self):
        with pytest.raises(DegenerateInterval):
            bernstein_basis(make_space(Partition(()), 2), 1, 1)

    def test_nonpositive_endpoint(self):
        with pytest.raises(NonPositiveEndpoint):
            bernstein_basis(make_space(Partition((1,)), 2), 0, 1)


class TestVanishingOrders:
    def test_orders_and_first_nonzero(self):
        for shape in shapes_up_to(4):
            for n in range(max(len(shape), 1), 5):
                space = make_space(shape, n)
                a, b = F(1), F(2)
                basis = bernstein_basis(space, a, b)
                for k in range(n + 1):
                    p = basis.elements[k]
                    for m in range(k):
                        assert p.derivative(m)(a) == 0
                    for m in range(n - k):
                        assert p.derivative(m)(b) == 0
                    d_a, d_b = endpoint_derivatives(space, a, b, k)
                    assert d_a != 0 and d_b != 0
                    assert p.derivative(k)(a) == d_a
                    assert p.derivative(n - k)(b) == d_b

    def test_normalization_at_left_endpoint(self):
        space = make_space(Partition((2, 2)), 3)
        d_a, _ = endpoint_derivatives(space, 1, 2, 0)
        assert d_a == 1  # zeroth derivative of element 0 at a


class TestEdgeElements:
    def test_first_and_last_closed_forms(self, rng):
        # the extreme elements factor through single products of Schur values
        for shape in shapes_up_to(4):
            for n in range(max(len(shape), 1), 5):
                space = make_space(shape, n)
                a, b = F(1), F(2)
                basis = bernstein_basis(space, a, b)
                bot = shape.bottom()
                for _ in range(3):
                    t = rand_positive(rng)
                    first = (
                        (b - t) ** n
                        / (b - a) ** n
                        * schur(shape, (b,) + (t,) * n)
                        * schur(bot, (a,) * n)
                        / (schur(shape, (b,) + (a,) * n) * schur(bot, (t,) * n))
                    )
                    last = (
                        (t - a) ** n
                        / (b - a) ** n
                        * schur(shape, (a,) + (t,) * n)
                        * schur(bot, (b,) * n)
                        / (schur(shape, (a,) + (b,) * n) * schur(bot, (t,) * n))
                    )
                    assert basis.elements[0](t) == first
                    assert basis.elements[n](t) == last


class TestDescent:
    def test_identical_to_closed_form(self):
        for shape in shapes_up_to(5):
            for n in range(max(len(shape), 1), 5):
                space = make_space(shape, n)
                for a, b in INTERVALS:
                    assert (
                        bernstein_via_descent(space, a, b).elements
                        == bernstein_basis(space, a, b).elements
                    )

    def test_empty_chain_is_classical(self):
        space = make_space(Partition(()), 3)
        got = bernstein_via_descent(space, 0, 2)
        assert got.elements == tuple(classical_bernstein(3, k, 0, 2) for k in range(4))


class TestColumnRowHookForms:
    def test_column_shape_formula(self):
        # (n+1)/r * B * e_{r-1}(U) (t e_r(U) + ab e_{r-1}(U)) / (e_r e_r)
        for r in range(1, 4):
            for n in range(r, 5):
                space = make_space(Partition((1,) * r), n)
                a, b = F(1), F(3)
                basis = bernstein_basis(space, a, b)
                for k in range(n + 1):
                    u = rep(a, n - k, b, k)
                    numerator = SparsePolynomial(
                        {1: elementary(r, u), 0: a * b * elementary(r - 1, u)}
                    )
                    expected = (
                        classical_bernstein(n, k, a, b)
                        * numerator.scale(
                            F(n + 1, r)
                            * elementary(r - 1, u)
                            / (
                                elementary(r, rep(a, n + 1 - k, b, k))
                                * elementary(r, rep(a, n - k, b, k + 1))
                            )
                        )
                    )
                    assert basis.elements[k] == expected

    def test_row_shape_formula(self):
        for r in range(1, 4):
            for n in range(1, 5):
                space = make_space(Partition((r,)), n)
                a, b = F(1), F(2)
                basis = bernstein_basis(space, a, b)
                for k in range(n + 1):
                    u = rep(a, n - k, b, k)
                    numerator = SparsePolynomial(
                        {j: (a * b) ** (r - j) * complete(j, u) for j in range(r + 1)}
                    )
                    expected = classical_bernstein(n, k, a, b) * numerator.scale(
                        F(math.comb(n + r, n))
                        / (
                            complete(r, rep(a, n + 1 - k, b, k))
                            * complete(r, rep(a, n - k, b, k + 1))
                        )
                    )
                    assert basis.elements[k] == expected

    def test_hook_shape_formula(self):
        for l in range(0, 3):
            for r in range(1, 3):
                shape = Partition((l + 1,) + (1,) * r)
                for n in range(len(shape), 5):
                    space = make_space(shape, n)
                    a, b = F(1), F(2)
                    basis = bernstein_basis(space, a, b)
                    for k in range(n + 1):
                        u = rep(a, n - k, b, k)
                        er = elementary(r, u)
                        tail = SparsePolynomial(
                            {
                                l + 1 - j: (a * b) ** j * complete(l + 1 - j, u)
                                for j in range(1, l + 2)
                            }
                        )
                        numerator = tail.scale(er**2) + SparsePolynomial(
                            {l + 1: er * schur(shape, u)}
                        )
                        expected = classical_bernstein(n, k, a, b) * numerator.scale(
                            F(n + 1, r + l + 1)
                            * F(math.comb(n + l + 1, n + 1))
                            / (
                                schur(shape, rep(a, n + 1 - k, b, k))
                                * schur(shape, rep(a, n - k, b, k + 1))
                            )
                        )
                        assert basis.elements[k] == expected

    def test_staircase_is_reparametrized_classical(self):
        for l in range(1, 4):
            for n in range(1, 4):
                shape = Partition(tuple(l * (n - i) for i in range(n)))
                space = make_space(shape, n)
                a, b = F(1), F(2)
                basis = bernstein_basis(space, a, b)
                for k in range(n + 1):
                    classical = classical_bernstein(n, k, a ** (l + 1), b ** (l + 1))
                    composed = SparsePolynomial(
                        {(l + 1) * e: c for e, c in classical.terms.items()}
                    )
                    assert basis.elements[k] == composed


class TestElevationFactors:
    def test_border_complement_count_ratio(self):
        for shape in shapes_up_to(5):
            if not shape:
                continue
            eta = shape.border_complement()
            for n in range(len(shape), 5):
                _, _, binom = elevation_factors(shape, eta, n, 1, 2, 0)
                assert binom == F(n + 1, shape.hook(1, 1))

    def test_column_to_empty_ratio(self):
        for r in range(1, 4):
            for n in range(r, 5):
                _, _, binom = elevation_factors(
                    Partition((1,) * r), Partition(()), n, 1, 2, 0
                )
                assert binom == F(n + 1, r)

    def test_rejects_non_elevation(self):
        with pytest.raises(NotAnElevation):
            elevation_factors(Partition((1,)), Partition((5, 5)), 3, 1, 2, 0)
        with pytest.raises(NotAnElevation):
            elevation_factors(Partition((2, 2)), Partition((3,)), 3, 1, 2, 0)


class TestDerivativeRecurrences:
    def test_equal_first_parts_rule(self):
        cases = [
            (Partition((1, 1)), 2),
            (Partition((1, 1)), 3),
            (Partition((2, 2)), 3),
            (Partition((2, 2, 1)), 3),
            (Partition((1, 1, 1)), 4),
        ]
        for shape, n in cases:
            space = make_space(shape, n)
            for a, b in INTERVALS:
                basis = bernstein_basis(space, a, b)
                lower = bernstein_basis(make_space(shape.bottom(), n - 1), a, b)
                for k in range(n + 1):
                    c_left, c_right = derivative_basis_equal(space, a, b, k)
                    rhs = SparsePolynomial()
                    if k >= 1:
                        rhs = rhs + lower.elements[k - 1].scale(c_left)
                    if k <= n - 1:
                        rhs = rhs - lower.elements[k].scale(c_right)
                    assert rhs == basis.elements[k].derivative()

    def test_boundary_coefficients_vanish(self):
        space = make_space(Partition((2, 2)), 3)
        c_left, _ = derivative_basis_equal(space, 1, 2, 0)
        assert c_left == 0
        _, c_right = derivative_basis_equal(space, 1, 2, 3)
        assert c_right == 0

    def test_wrong_shape_class_rejected(self):
        with pytest.raises(FirstTwoPartsUnequal):
            derivative_basis_equal(make_space(Partition((2, 1)), 3), 1, 2, 0)
        with pytest.raises(FirstTwoPartsEqual):
            derivative_basis_general(make_space(Partition((2, 2)), 3), 1, 2, 0)

    def test_distinct_first_parts_rule(self):
        cases = [
            (Partition((1,)), 2),
            (Partition((2,)), 2),
            (Partition((3, 1)), 2),
            (Partition((2, 1)), 3),
            (Partition((3, 2, 1)), 3),
            (Partition((2, 1, 1)), 4),
        ]
        for shape, n in cases:
            space = make_space(shape, n)
            mu = Partition((shape.first - 1,) + shape.parts[1:])
            for a, b in INTERVALS:
                basis = bernstein_basis(space, a, b)
                lower = bernstein_basis(make_space(mu, n), a, b)
                for k in range(n + 1):
                    g1, g2, g3 = derivative_basis_general(space, a, b, k)
                    rhs = lower.elements[k].scale(g2)
                    if k >= 1:
                        rhs = rhs + lower.elements[k - 1].scale(g1)
                    if k <= n - 1:
                        rhs = rhs + lower.elements[k + 1].scale(g3)
                    assert rhs == basis.elements[k].derivative()

    def test_general_boundary_terms_vanish(self):
        space = make_space(Partition((2, 1)), 3)
        g1, _, _ = derivative_basis_general(space, 1, 2, 0)
        assert g1 == 0
        _, _, g3 = derivative_basis_general(space, 1, 2, 3)
        assert g3 == 0
