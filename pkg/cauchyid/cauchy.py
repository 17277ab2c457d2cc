"""Cauchy matrices C = (1 / (x_i + y_j)) and their closed forms.

The sign convention throughout is x_i + y_j. Inputs written for the
1 / (x_i - y_j) convention go through minus_convention first.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import unicode_literals

from collections import namedtuple

from cauchyid.densela import (Matrix, WeightVectors, bordered, inverse,
                              lemma_ab_check)
from cauchyid.ring import (NotInvertible, RATIONAL, Scalar, product_of,
                           sum_of)


InvertibilityVerdict = namedtuple("InvertibilityVerdict",
                                  ("invertible", "witness"))
Witness = namedtuple("Witness", ("vector", "first", "second"))


class SpecError(ValueError):
    """Raised for malformed parameter vectors"""


class NonInvertiblePairSum(NotInvertible):
    """Raised when some x_i + y_j has no inverse, so C is undefined"""

    def __init__(self, row, col, value):
        self.row = row
        self.col = col
        super(NonInvertiblePairSum, self).__init__(
            value, "x[{0}] + y[{1}] = {2} is not invertible, so entry "
            "({0}, {1}) of the Cauchy matrix is undefined".format(row, col, value))


class CauchySpec(object):
    """Parameter vectors xs and ys of one Cauchy matrix. Every pair sum
    x_i + y_j is checked for invertibility on construction."""

    def __init__(self, xs, ys, context=None):
        xs, ys = list(xs), list(ys)
        if context is None:
            context = next((v.context for v in xs + ys
                            if isinstance(v, Scalar)), RATIONAL)
        if not xs:
            raise SpecError("A Cauchy spec needs n >= 1 parameters")
        if len(xs) != len(ys):
            raise SpecError("xs has {} entries but ys has {}"
                            .format(len(xs), len(ys)))
        self.context = context
        self.xs = tuple(context.element(x) for x in xs)
        self.ys = tuple(context.element(y) for y in ys)

        for i, x in enumerate(self.xs):
            for j, y in enumerate(self.ys):
                total = x + y
                if not total.is_invertible():
                    raise NonInvertiblePairSum(i, j, total)

    @property
    def n(self):
        return len(self.xs)

    def parameter_sum(self):
        """sum(xs) + sum(ys)"""
        return sum_of(self.context, self.xs + self.ys)

    def __eq__(self, other):
        if not isinstance(other, CauchySpec):
            return NotImplemented
        return (self.context, self.xs, self.ys) == \
            (other.context, other.xs, other.ys)

    def __hash__(self):
        return hash((self.context, self.xs, self.ys))

    def __repr__(self):
        return "CauchySpec(xs={}, ys={}, ring={})".format(
            [str(x) for x in self.xs], [str(y) for y in self.ys], self.context)


def swapped(spec):
    """Exchanges the roles of xs and ys, which transposes C"""
    return CauchySpec(spec.ys, spec.xs, spec.context)


def minus_convention(xs, ys, context=RATIONAL):
    """Builds the spec whose C has entries 1 / (x_i - y_j), by negating ys
    before validation"""
    return CauchySpec(xs, [-context.element(y) for y in ys], context)


def build(spec):
    n = spec.n
    return Matrix._trusted(n, n, [(x + y).inv() for x in spec.xs
                                  for y in spec.ys], spec.context)


def det_closed(spec):
    """prod_{i<j} (x_i - x_j)(y_i - y_j) / prod_{i,j} (x_i + y_j)"""
    xs, ys, n = spec.xs, spec.ys, spec.n
    numerator = product_of(spec.context,
                           [(xs[i] - xs[j]) * (ys[i] - ys[j])
                            for i in range(n) for j in range(i + 1, n)])
    denominator = product_of(spec.context, [x + y for x in xs for y in ys])
    return numerator * denominator.inv()


def _first_clash(values):
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if not (values[i] - values[j]).is_invertible():
                return i, j
    return None


def is_invertible_spec(spec):
    """C is invertible iff the xs are pairwise strongly distinct and so are
    the ys (two scalars are strongly distinct when their difference is
    invertible)"""
    for name, values in (('xs', spec.xs), ('ys', spec.ys)):
        clash = _first_clash(values)
        if clash is not None:
            return InvertibilityVerdict(False, Witness(name, *clash))
    return InvertibilityVerdict(True, None)


def _require_invertible(spec):
    verdict = is_invertible_spec(spec)
    if not verdict.invertible:
        witness = verdict.witness
        raise NotInvertible(
            det_closed(spec),
            "Cauchy matrix is singular: {0}[{1}] and {0}[{2}] are not strongly "
            "distinct".format(witness.vector, witness.first, witness.second))


def inverse_entry_closed(spec, i, j):
    """Entry (i, j) of the inverse:

        prod_k (x_j + y_k)(x_k + y_i)
        / ((x_j + y_i) prod_{k != j} (x_j - x_k) prod_{k != i} (y_i - y_k))
    """
    n = spec.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError("Entry ({}, {}) outside a {}x{} inverse"
                         .format(i, j, n, n))
    _require_invertible(spec)
    xs, ys, context = spec.xs, spec.ys, spec.context
    numerator = product_of(context, [(xs[j] + ys[k]) * (xs[k] + ys[i])
                                     for k in range(n)])
    denominator = ((xs[j] + ys[i])
                   * product_of(context, [xs[j] - xs[k]
                                          for k in range(n) if k != j])
                   * product_of(context, [ys[i] - ys[k]
                                          for k in range(n) if k != i]))
    return numerator * denominator.inv()


def inverse_closed(spec):
    """All n^2 entries of the inverse in O(n^2) scalar operations.

    Entry (i, j) factors as col_factor[j] * row_factor[i] / (x_j + y_i) with
    col_factor[j] = prod_k (x_j + y_k) / prod_{k != j} (x_j - x_k) and
    row_factor[i] = prod_k (x_k + y_i) / prod_{k != i} (y_i - y_k).
    """
    _require_invertible(spec)
    xs, ys, n, context = spec.xs, spec.ys, spec.n, spec.context
    col_factor = [
        product_of(context, [xs[j] + y for y in ys])
        * product_of(context, [xs[j] - xs[k]
                               for k in range(n) if k != j]).inv()
        for j in range(n)]
    row_factor = [
        product_of(context, [x + ys[i] for x in xs])
        * product_of(context, [ys[i] - ys[k]
                               for k in range(n) if k != i]).inv()
        for i in range(n)]
    entries = [row_factor[i] * col_factor[j] * (xs[j] + ys[i]).inv()
               for i in range(n) for j in range(n)]
    return Matrix._trusted(n, n, entries, context)


def inverse_entry_sum(spec):
    """Sum of all entries of the inverse: sum(xs) + sum(ys)"""
    _require_invertible(spec)
    return spec.parameter_sum()


def weighted_inverse_sum(spec):
    """sum_{i,j} (x_i + y_j) C[i,j] Cinv[j,i]: every weight cancels its
    entry of C, leaving the entry sum of the inverse, while the trace form
    of the same sum collapses to sum(xs) + sum(ys)"""
    _require_invertible(spec)
    C = build(spec)
    lhs, _ = lemma_ab_check(C, inverse(C), WeightVectors(spec.xs, spec.ys))
    return lhs


def adjugate_entry_sum_closed(spec):
    """(sum(xs) + sum(ys)) det C; holds for singular C as well"""
    return spec.parameter_sum() * det_closed(spec)


def bordered_matrix(spec):
    """C with a row of ones below, a column of ones to the right and zero in
    the corner"""
    return bordered(build(spec))


def bordered_det_closed(spec):
    return -adjugate_entry_sum_closed(spec)
