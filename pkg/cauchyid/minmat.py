"""The min matrix F = (min(x_i, y_j)) over the rationals."""
from __future__ import absolute_import
from __future__ import division
from __future__ import unicode_literals

from cauchyid.cauchy import SpecError
from cauchyid.densela import Matrix, det_fast
from cauchyid.ring import (NotInvertible, RATIONAL, Scalar, UnorderedRing,
                           product_of)


class UnsortedSpec(ValueError):
    """Raised when an operation needs sorted parameters and gets others"""


class MinSpec(object):
    """Rational parameter vectors of one min matrix"""

    def __init__(self, xs, ys, context=None):
        xs, ys = list(xs), list(ys)
        if context is None:
            context = next((v.context for v in xs + ys
                            if isinstance(v, Scalar)), RATIONAL)
        if not context.is_ordered:
            raise UnorderedRing("Min matrices need an ordered ring, got {}"
                                .format(context))
        if not xs:
            raise SpecError("A min spec needs n >= 1 parameters")
        if len(xs) != len(ys):
            raise SpecError("xs has {} entries but ys has {}"
                            .format(len(xs), len(ys)))
        self.context = context
        self.xs = tuple(context.element(x) for x in xs)
        self.ys = tuple(context.element(y) for y in ys)

    @property
    def n(self):
        return len(self.xs)

    @property
    def is_sorted(self):
        return _ascending(self.xs) and _ascending(self.ys)

    def minimum(self):
        return min(self.xs + self.ys)

    def __eq__(self, other):
        if not isinstance(other, MinSpec):
            return NotImplemented
        return (self.xs, self.ys) == (other.xs, other.ys)

    def __hash__(self):
        return hash((self.xs, self.ys))

    def __repr__(self):
        return "{}(xs={}, ys={})".format(type(self).__name__,
                                         [str(x) for x in self.xs],
                                         [str(y) for y in self.ys])


class SortedMinSpec(MinSpec):
    """A MinSpec with ascending xs, ascending ys and x_1 <= y_1. swapped
    records whether xs and ys were exchanged to get there."""

    def __init__(self, xs, ys, swapped=False, context=None):
        super(SortedMinSpec, self).__init__(xs, ys, context)
        self.swapped = swapped
        if not self.is_sorted:
            raise UnsortedSpec("Parameters must be ascending: xs={}, ys={}"
                               .format([str(x) for x in self.xs],
                                       [str(y) for y in self.ys]))
        if self.xs[0] > self.ys[0]:
            raise UnsortedSpec("Sorted min specs need x_1 <= y_1, got {} > {}"
                               .format(self.xs[0], self.ys[0]))


def _ascending(values):
    return all(a <= b for a, b in zip(values, values[1:]))


def _require_sorted(spec):
    if not spec.is_sorted:
        raise UnsortedSpec("Parameters must be ascending: xs={}, ys={}"
                           .format([str(x) for x in spec.xs],
                                   [str(y) for y in spec.ys]))


def build(spec):
    n = spec.n
    return Matrix._trusted(n, n, [min(x, y) for x in spec.xs for y in spec.ys],
                           spec.context)


def normalize(spec):
    """Sorts both vectors and exchanges them if needed so that x_1 <= y_1.
    Row and column permutations and transposition leave entry sums and |det|
    alone, so only the exchange is recorded."""
    xs, ys = sorted(spec.xs), sorted(spec.ys)
    if xs[0] <= ys[0]:
        return SortedMinSpec(xs, ys, False, spec.context)
    return SortedMinSpec(ys, xs, True, spec.context)


def normalizing_permutation(spec):
    """(row_perm, col_perm, transposed) such that build(normalize(spec)) is
    permute(F, row_perm, col_perm), with F transposed first when normalize
    exchanged xs and ys"""
    x_order = sorted(range(spec.n), key=lambda i: spec.xs[i])
    y_order = sorted(range(spec.n), key=lambda j: spec.ys[j])
    if normalize(spec).swapped:
        return y_order, x_order, True
    return x_order, y_order, False


def _require_invertible(spec):
    det = det_fast(build(spec))
    if not det.is_invertible():
        raise NotInvertible(det, "Min matrix is singular (det = 0)")


def inverse_entry_sum(spec):
    """Sum of all entries of the inverse: 1 / min(xs + ys)"""
    _require_invertible(spec)
    return spec.minimum().inv()


def inverse_column_sums(spec):
    """Column sums of the inverse for a sorted spec with x_1 <= y_1:
    1 / x_1 for the first column, 0 for the rest"""
    _require_sorted(spec)
    if spec.xs[0] > spec.ys[0]:
        raise UnsortedSpec("Column sums need x_1 <= y_1, got {} > {}"
                           .format(spec.xs[0], spec.ys[0]))
    _require_invertible(spec)
    zero = spec.context.zero()
    return [spec.xs[0].inv()] + [zero] * (spec.n - 1)


def det_factors(spec):
    """f_11 followed by the mixed second differences
    f_kk - f_k,k-1 - f_k-1,k + f_k-1,k-1 for k = 2..n"""
    _require_sorted(spec)
    xs, ys = spec.xs, spec.ys

    def f(i, j):
        return min(xs[i], ys[j])

    return [f(0, 0)] + [f(k, k) - f(k, k - 1) - f(k - 1, k) + f(k - 1, k - 1)
                        for k in range(1, spec.n)]


def det_closed(spec):
    """det F as the product of det_factors; needs ascending xs and ys but
    not x_1 <= y_1"""
    return product_of(spec.context, det_factors(spec))


def det_zero_predicate(spec):
    return any(factor == 0 for factor in det_factors(spec))


def difference_matrix(spec):
    """F with every row minus the row above and every column minus the column
    to the left, taken simultaneously. Same determinant as F; for sorted
    parameters it is block triangular with the det_factors on its diagonal."""
    _require_sorted(spec)
    xs, ys, n = spec.xs, spec.ys, spec.n
    zero = spec.context.zero()

    def f(i, j):
        if i < 0 or j < 0:
            return zero
        return min(xs[i], ys[j])

    return Matrix._trusted(n, n, [f(i, j) - f(i - 1, j) - f(i, j - 1)
                                  + f(i - 1, j - 1)
                                  for i in range(n) for j in range(n)],
                           spec.context)
