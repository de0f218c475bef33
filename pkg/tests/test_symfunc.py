import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rand_positive, rand_signed, shapes_up_to
from muntzcad.errors import NotContained, RepeatedArguments
from muntzcad.partitions import (
    Partition,
    interlacing_partitions,
    muntz_tableau,
    subpartitions,
)
from muntzcad.symfunc import (
    ArgMultiset,
    complete,
    det_bareiss,
    elementary,
    schur,
    schur_bialternant,
    schur_giambelli,
    schur_nk,
    schur_ssyt_oracle,
    skew_schur,
)

F = Fraction


class TestElementary:
    def test_pair_sums(self):
        assert elementary(2, (1, 2, 3)) == 11

    def test_zeroth_is_one(self):
        assert elementary(0, (5, 7)) == 1
        assert elementary(0, ()) == 1

    def test_out_of_range_is_zero(self):
        assert elementary(-1, (1, 2)) == 0
        assert elementary(3, (1, 2)) == 0


class TestComplete:
    def test_monomial_sum(self):
        assert complete(2, (1, 1)) == 3

    def test_two_argument_quotient(self):
        a, b = F(2, 3), F(7, 5)
        for r in range(0, 6):
            assert complete(r, (a, b)) == (a ** (r + 1) - b ** (r + 1)) / (a - b)

    def test_negative_is_zero(self):
        assert complete(-3, (1, 2)) == 0


class TestMultiset:
    def test_merge_and_reorder_invariance(self):
        m1 = ArgMultiset(((F(1, 2), 2), (F(3), 1)))
        m2 = ArgMultiset(((F(3), 1), (F(1, 2), 1), (F(1, 2), 1)))
        assert m1 == m2
        assert m1.values() == (F(1, 2), F(1, 2), F(3))

    def test_rejects_nonpositive_multiplicity(self):
        with pytest.raises(ValueError):
            ArgMultiset(((F(1), 0),))

    @given(st.lists(st.fractions(min_value=-3, max_value=3), max_size=5))
    @settings(max_examples=60)
    def test_evaluation_ignores_order(self, values):
        shape = Partition((2, 1))
        shuffled = list(values)
        random.Random(7).shuffle(shuffled)
        assert schur(shape, values) == schur(shape, shuffled)
        assert schur(shape, ArgMultiset.from_values(values)) == schur(shape, values)


class TestSchurBasics:
    def test_worked_values(self):
        assert schur(Partition((2, 1)), (1, 1, 1)) == 8
        assert schur(Partition((2, 2)), (1, 1, 1)) == 6
        assert schur(Partition((2, 1)), (1, 2, 3)) == 60

    def test_empty_shape(self):
        assert schur(Partition(()), (4, 5)) == 1

    def test_too_long_vanishes(self):
        assert schur(Partition((1, 1, 1)), (1, 2)) == 0
        assert schur_nk(Partition((1, 1, 1)), (1, 2)) == 0
        assert schur_giambelli(Partition((1, 1, 1)), (1, 2)) == 0

    def test_row_and_column_specialize(self):
        args = (F(1, 2), F(3), F(5, 7))
        for k in range(4):
            assert schur_nk(Partition((1,) * k) if k else Partition(()), args) == elementary(k, args)
            assert schur_nk(Partition((k,)) if k else Partition(()), args) == complete(k, args)

    def test_shift_identity(self):
        rng = random.Random(3)
        for shape in shapes_up_to(4):
            n = max(len(shape), 2)
            args = tuple(rand_positive(rng) for _ in range(n))
            lifted = Partition(tuple(p + 1 for p in shape.parts + (0,) * (n - len(shape))))
            prod = F(1)
            for v in args:
                prod *= v
            assert schur(lifted, args) == prod * schur(shape, args)


class TestBackendAgreement:
    def test_exact_agreement_random(self, rng):
        shapes = shapes_up_to(6)
        for _ in range(25):
            size = rng.randint(0, 5)
            args = tuple(rand_signed(rng) for _ in range(size))
            for shape in shapes:
                reference = schur(shape, args)
                assert schur_nk(shape, args) == reference
                assert schur_giambelli(shape, args) == reference
                if size <= 4:
                    assert schur_ssyt_oracle(shape, args) == reference

    def test_bialternant_on_distinct(self, rng):
        for shape in shapes_up_to(5):
            size = max(len(shape), 2)
            args = []
            seen = set()
            while len(args) < size:
                v = rand_signed(rng)
                if v not in seen:
                    seen.add(v)
                    args.append(v)
            assert schur_bialternant(shape, args) == schur(shape, args)

    def test_bialternant_rejects_repeats(self):
        with pytest.raises(RepeatedArguments):
            schur_bialternant(Partition((1,)), (1, 1))

    def test_ssyt_oracle_trivial(self):
        assert schur_ssyt_oracle(Partition((1,)), (5,)) == 5
        assert schur_ssyt_oracle(Partition((3, 3)), (F(1, 2), F(2))) == schur(
            Partition((3, 3)), (F(1, 2), F(2))
        )


class TestHookExpansion:
    def test_alternating_he_sum(self):
        rng = random.Random(11)
        for p in range(5):
            for q in range(5):
                shape = Partition((p + 1,) + (1,) * q)
                args = tuple(rand_positive(rng) for _ in range(q + 2))
                expected = sum(
                    ((-1) ** m) * complete(p + 1 + m, args) * elementary(q - m, args)
                    for m in range(q + 1)
                )
                assert schur(shape, args) == expected

    def test_giambelli_hook_value(self):
        # (1|1) at all-ones: h2*e1 - h3 = 6*3 - 10
        assert schur_giambelli(Partition((2, 1)), (1, 1, 1)) == 6 * 3 - 10


class TestSkew:
    def test_whole_shape_is_plain(self):
        args = (F(1), F(2), F(3))
        assert skew_schur(Partition((2, 1)), Partition(()), args) == schur(Partition((2, 1)), args)

    def test_equal_shapes_give_one(self):
        assert skew_schur(Partition((2, 1)), Partition((2, 1)), (1, 2)) == 1

    def test_not_contained(self):
        with pytest.raises(NotContained):
            skew_schur(Partition((2, 1)), Partition((3,)), (1, 2))

    def test_hook_strip_factorizes(self):
        # removing j cells of the top row of a hook leaves a row times a column
        rng = random.Random(5)
        for l in range(4):
            for r in range(1, 4):
                shape = Partition((l + 1,) + (1,) * r)
                args = tuple(rand_positive(rng) for _ in range(r + 2))
                for j in range(1, l + 2):
                    got = skew_schur(shape, Partition((j,)), args)
                    expected = complete(l + 1 - j, args) * elementary(r, args)
                    assert got == expected

    def test_skew_diagram_example(self):
        # (4,3,1)/(2,1) evaluated by cell enumeration on two variables
        args = (F(1, 2), F(3))
        got = skew_schur(Partition((4, 3, 1)), Partition((2, 1)), args)
        # brute force: sum over pairs of semistandard fillings of the strips
        total = F(0)
        a, b = args
        for fill in _skew_fillings_431_21(2):
            term = F(1)
            for entry in fill:
                term *= (a, b)[entry - 1]
            total += term
        assert got == total


def _skew_fillings_431_21(n):
    """Explicit fillings of the skew shape (4,3,1)/(2,1) with entries <= n.

    Cells: row 1 columns 3-4, row 2 columns 2-3, row 3 column 1; the only
    column adjacency is column 3 (row 1 above row 2).
    """
    out = []
    for c13 in range(1, n + 1):
        for c14 in range(c13, n + 1):
            for c22 in range(1, n + 1):
                for c23 in range(max(c22, c13 + 1), n + 1):
                    for c31 in range(1, n + 1):
                        out.append((c13, c14, c22, c23, c31))
    return out


class TestBranching:
    def test_split_last_argument_by_interlacing(self, rng):
        for shape in shapes_up_to(6):
            n = max(len(shape), 2)
            args = tuple(rand_positive(rng) for _ in range(n - 1))
            extra = rand_positive(rng)
            lhs = schur(shape, args + (extra,))
            rhs = F(0)
            for mu in interlacing_partitions(shape, n):
                rhs += schur(mu, args) * extra ** (shape.weight - mu.weight)
            assert lhs == rhs

    def test_split_last_argument_by_row_strips(self, rng):
        for shape in shapes_up_to(6):
            n = max(len(shape), 2)
            args = tuple(rand_positive(rng) for _ in range(n - 1))
            extra = rand_positive(rng)
            lhs = schur(shape, args + (extra,))
            rhs = F(0)
            for j in range(shape.first + 1):
                inner = Partition((j,)) if j else Partition(())
                rhs += skew_schur(shape, inner, args) * extra**j
            assert lhs == rhs

    def test_two_way_split(self, rng):
        for shape in shapes_up_to(5):
            n = max(len(shape), 2) + 1
            j = n // 2
            args = tuple(rand_positive(rng) for _ in range(n))
            lhs = schur(shape, args)
            rhs = F(0)
            for mu in subpartitions(shape):
                rhs += schur(mu, args[:j]) * skew_schur(shape, mu, args[j:])
            assert lhs == rhs


class TestStaircase:
    def test_product_of_pair_completes(self, rng):
        for l in range(1, 4):
            for n in range(1, 5):
                shape = Partition(tuple(l * (n - i) for i in range(n)))
                args = tuple(rand_positive(rng, 5) for _ in range(n + 1))
                lhs = schur(shape, args)
                rhs = F(1)
                for i in range(n + 1):
                    for j in range(i + 1, n + 1):
                        rhs *= complete(l, (args[i], args[j]))
                assert lhs == rhs


class TestCondensation:
    """Dodgson-style two-argument exchange identities; all exact."""

    def test_bottom_partition_exchange(self, rng):
        for shape in shapes_up_to(5):
            n = max(len(shape), 2)
            for _ in range(8):
                u = tuple(rand_signed(rng) for _ in range(n - 1))
                x, y = rand_signed(rng), rand_signed(rng)
                bot = shape.bottom()
                lhs = (x - y) * schur(shape, u + (x, y)) * schur(bot, u)
                rhs = x * schur(shape, u + (x,)) * schur(bot, u + (y,)) - y * schur(
                    shape, u + (y,)
                ) * schur(bot, u + (x,))
                assert lhs == rhs

    def test_tableau_entry_exchange(self, rng):
        for shape in shapes_up_to(5):
            n = max(len(shape), 2)
            tab = muntz_tableau(shape, n)
            padded = shape.parts + (0,) * (n - len(shape))
            for k in range(1, n):
                eta = Partition(
                    tuple(p + 1 for p in padded[1:k]) + padded[k + 1:]
                )
                for _ in range(4):
                    u = tuple(rand_signed(rng) for _ in range(n - 1))
                    x, y = rand_signed(rng), rand_signed(rng)
                    lhs = schur(tab[0], u + (x,)) * schur(tab[k], u + (y,)) - schur(
                        tab[0], u + (y,)
                    ) * schur(tab[k], u + (x,))
                    rhs = (y - x) * schur(eta, u) * schur(shape, u + (x, y))
                    assert lhs == rhs

    def test_border_complement_exchange(self, rng):
        for shape in shapes_up_to(5):
            if not shape:
                continue
            n = max(len(shape), 2)
            mu = shape.border_complement()
            for _ in range(8):
                u = tuple(rand_signed(rng) for _ in range(n - 1))
                x, y = rand_signed(rng), rand_signed(rng)
                lhs = schur(mu.bottom(), u + (x,)) * schur(shape, u + (y,)) - schur(
                    mu.bottom(), u + (y,)
                ) * schur(shape, u + (x,))
                rhs = (y - x) * schur(mu, u + (x, y)) * schur(shape.bottom(), u)
                assert lhs == rhs

    def test_reflected_product_identity(self, rng):
        for shape in shapes_up_to(5):
            if not shape:
                continue
            n = max(len(shape), 2)
            mu = shape.border_complement()
            lam1 = shape.first
            for _ in range(8):
                u = tuple(rand_positive(rng) for _ in range(n - 1))
                a, b, t = (rand_positive(rng) for _ in range(3))
                ab_t = a * b / t
                lhs = a * (b - t) * t ** (lam1 - 1) * schur(mu, u + (a, ab_t)) * schur(
                    shape, u + (b,)
                ) + b * (t - a) * t ** (lam1 - 1) * schur(mu, u + (b, ab_t)) * schur(
                    shape, u + (a,)
                )
                rhs = (b - a) * t**lam1 * schur(mu, u + (a, b)) * schur(shape, u + (ab_t,))
                assert lhs == rhs


def test_det_bareiss_matches_cofactor():
    rng = random.Random(2)
    for n in range(1, 5):
        m = [[rand_signed(rng) for _ in range(n)] for _ in range(n)]
        assert det_bareiss(m) == _cofactor_det(m)


def _cofactor_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = F(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _cofactor_det(minor)
    return total
