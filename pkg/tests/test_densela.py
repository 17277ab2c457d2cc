from __future__ import absolute_import
from __future__ import unicode_literals

import random

from hypothesis import given, seed
from hypothesis import strategies as st
import pytest

from cauchyid.densela import (Matrix, ShapeError, SizeGuardExceeded,
                              WeightVectors, adjugate, border_det_general,
                              bordered, column_sum, det_cofactor, det_fast,
                              entry_sum, inverse, lemma_ab_check, mat_mul,
                              permute, scale, trace)
from cauchyid.generators import random_matrix
from cauchyid.ring import NotInvertible, RATIONAL, RingContext

from .utils import as_strings, matrix


def small_matrices(size):
    entries = st.lists(st.integers(min_value=-5, max_value=5),
                       min_size=size * size, max_size=size * size)
    return entries.map(lambda values: Matrix(size, size, values, RATIONAL))


class TestMatrix(object):

    def test_construction(self, rational):
        A = matrix([[1, "1/2"], [3, 4]], rational)
        assert A.shape == (2, 2)
        assert A[0, 1] == rational.parse("1/2")
        assert A.row(1) == (rational.element(3), rational.element(4))
        assert A.column(0) == (rational.element(1), rational.element(3))

    def test_bad_shapes(self, rational):
        with pytest.raises(ShapeError):
            Matrix(2, 2, [1, 2, 3], rational)
        with pytest.raises(ShapeError):
            matrix([[1, 2], [3]], rational)
        with pytest.raises(IndexError):
            matrix([[1]], rational)[1, 0]

    def test_transpose_and_minor(self, rational):
        A = matrix([[1, 2, 3], [4, 5, 6]], rational)
        assert as_strings(A.transpose()) == [["1", "4"], ["2", "5"],
                                             ["3", "6"]]
        assert as_strings(A.minor(0, 1)) == [["4", "6"]]

    def test_identity_and_zeros(self, context):
        assert Matrix.identity(2, context) == matrix([[1, 0], [0, 1]], context)
        assert entry_sum(Matrix.zeros(3, 2, context)) == context.zero()

    def test_permute(self, rational):
        A = matrix([[1, 2], [3, 4]], rational)
        assert as_strings(permute(A, [1, 0], [1, 0])) == [["4", "3"],
                                                          ["2", "1"]]
        with pytest.raises(ShapeError):
            permute(A, [0, 0], [0, 1])

    def test_bordered(self, rational):
        """A row and column of ones with zero in the corner"""
        A = matrix([[5]], rational)
        assert as_strings(bordered(A)) == [["5", "1"], ["1", "0"]]


class TestMatMul(object):

    def test_hand_product(self, rational):
        A = matrix([[1, 2], [3, 4]], rational)
        B = matrix([[5, 6], [7, 8]], rational)
        assert as_strings(mat_mul(A, B)) == [["19", "22"], ["43", "50"]]
        assert as_strings(B @ A) == [["23", "34"], ["31", "46"]]

    def test_identity(self, context, rng):
        A = random_matrix(rng, context, 3, 3)
        assert A @ Matrix.identity(3, context) == A

    def test_dot_product(self, rational):
        row = matrix([[1, 2]], rational)
        col = matrix([[3], [4]], rational)
        assert as_strings(row @ col) == [["11"]]

    def test_mismatch(self, rational, f101):
        with pytest.raises(ShapeError):
            matrix([[1, 2]], rational) @ matrix([[1, 2]], rational)
        with pytest.raises(ShapeError):
            matrix([[1]], rational) @ matrix([[1]], f101)


class TestDeterminants(object):

    def test_examples(self, rational, f101):
        assert det_cofactor(matrix([["2/3"]], rational)) == \
            rational.parse("2/3")
        assert det_cofactor(matrix([[1, 1], [2, 3]], rational)) == 1
        assert det_fast(matrix([[1, 1], [2, 3]], rational)) == 1
        assert det_fast(matrix([[2, 0], [0, 3]], f101)) == f101.element(6)

    def test_equal_rows(self, context):
        A = matrix([[1, 2, 3, 4], [5, 6, 7, 8], [1, 2, 3, 4], [0, 1, 0, 1]],
                   context)
        assert det_cofactor(A) == context.zero()
        assert det_fast(A) == context.zero()

    def test_zero_pivot_needs_swap(self, context):
        A = matrix([[0, 1], [1, 0]], context)
        assert det_fast(A) == -context.one()

    def test_size_guard(self, rational):
        A = Matrix.identity(9, rational)
        with pytest.raises(SizeGuardExceeded):
            det_cofactor(A)
        assert det_cofactor(A, limit=9) == 1
        with pytest.raises(ShapeError):
            det_fast(matrix([[1, 2]], rational))

    def test_fast_matches_cofactor(self, context):
        """Elimination agrees with Laplace expansion on random matrices"""
        rng = random.Random(7)
        for _ in range(60):
            n = rng.randint(1, 6)
            A = random_matrix(rng, context, n, n)
            assert det_fast(A) == det_cofactor(A)

    def test_fractions(self, rational):
        A = matrix([["1/4", "1/6"], ["1/5", "1/7"]], rational)
        assert str(det_fast(A)) == "1/420"

    @seed(201)
    @given(A=small_matrices(3), B=small_matrices(3))
    def test_multiplicative(self, A, B):
        assert det_fast(A @ B) == det_fast(A) * det_fast(B)


class TestAdjugateInverse(object):

    def test_adjugate_examples(self, rational):
        assert as_strings(adjugate(matrix([[7]], rational))) == [["1"]]
        assert as_strings(adjugate(matrix([[1, 1], [2, 3]], rational))) == \
            [["3", "-1"], ["-2", "1"]]

    def test_adjugate_identity(self, context):
        """A adj(A) = adj(A) A = det(A) I"""
        rng = random.Random(11)
        for _ in range(30):
            n = rng.randint(1, 5)
            A = random_matrix(rng, context, n, n)
            expected = scale(det_fast(A), Matrix.identity(n, context))
            assert A @ adjugate(A) == expected
            assert adjugate(A) @ A == expected

    def test_inverse_example(self, rational):
        """The inverse of C for x = (1, 2), y = (3, 5)"""
        C = matrix([["1/4", "1/6"], ["1/5", "1/7"]], rational)
        assert as_strings(inverse(C)) == [["60", "-70"], ["-84", "105"]]

    def test_inverse_identity(self, context):
        I = Matrix.identity(3, context)
        assert inverse(I) == I
        A = matrix([[2, 1, 0], [1, 3, 1], [0, 1, 4]], context)
        assert inverse(A) @ A == I
        assert A @ inverse(A) == I

    def test_singular(self, context):
        with pytest.raises(NotInvertible) as excinfo:
            inverse(matrix([[1, 2], [2, 4]], context))
        assert excinfo.value.value == context.zero()

    def test_singular_mod_p(self):
        """[[1, 2], [3, 1]] has det -5, which vanishes mod 5"""
        f5 = RingContext.prime(5)
        with pytest.raises(NotInvertible):
            inverse(matrix([[1, 2], [3, 1]], f5))
        assert str(det_fast(matrix([[1, 2], [3, 1]], RATIONAL))) == "-5"


class TestSums(object):

    def test_entry_sum(self, rational):
        assert entry_sum(matrix([[60, -70], [-84, 105]], rational)) == 11
        assert entry_sum(Matrix.zeros(2, 2, rational)) == 0

    def test_column_sum(self, rational):
        A = matrix([[3, -1], [-2, 1]], rational)
        assert column_sum(A, 0) == 1
        assert column_sum(A, 1) == 0
        with pytest.raises(IndexError):
            column_sum(A, 2)

    def test_trace(self, rational):
        assert trace(matrix([[1, 9], [9, 2]], rational)) == 3
        with pytest.raises(ShapeError):
            trace(matrix([[1, 2]], rational))


class TestWeightedTrace(object):

    def test_hand_example(self, rational):
        A = matrix([[1, 2], [3, 4]], rational)
        B = matrix([[5, 6], [7, 8]], rational)
        lhs, rhs = lemma_ab_check(A, B, WeightVectors([1, 2], [3, 4]))
        assert str(lhs) == str(rhs) == "372"

    def test_zero_matrix(self, context):
        A = Matrix.zeros(2, 3, context)
        B = matrix([[1, 2], [3, 4], [5, 6]], context)
        lhs, rhs = lemma_ab_check(A, B, WeightVectors([1, 2], [3, 4, 5]))
        assert lhs == rhs == context.zero()

    def test_rectangular(self, context, rng):
        """n != m, random entries and weights"""
        for n, m in [(1, 2), (2, 1), (3, 5), (4, 2)]:
            A = random_matrix(rng, context, n, m)
            B = random_matrix(rng, context, m, n)
            weights = WeightVectors(random_matrix(rng, context, 1, n).entries,
                                    random_matrix(rng, context, 1, m).entries)
            lhs, rhs = lemma_ab_check(A, B, weights)
            assert lhs == rhs

    def test_bad_shapes(self, rational):
        A = matrix([[1, 2]], rational)
        with pytest.raises(ShapeError):
            lemma_ab_check(A, A, WeightVectors([1], [1, 2]))
        with pytest.raises(ShapeError):
            lemma_ab_check(A, A.transpose(), WeightVectors([1, 2], [1, 2]))


class TestBorder(object):

    def test_examples(self, rational):
        det, total = border_det_general(matrix([[5]], rational))
        assert (det, total) == (-1, 1)
        det, total = border_det_general(Matrix.identity(2, rational))
        assert (str(det), str(total)) == ("-2", "2")

    def test_random(self, context, rng):
        for _ in range(20):
            n = rng.randint(1, 5)
            det, total = border_det_general(random_matrix(rng, context, n, n))
            assert det + total == context.zero()
