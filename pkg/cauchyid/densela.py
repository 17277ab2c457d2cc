"""Dense exact linear algebra over a RingContext.

Nothing here knows about Cauchy or min matrices; these are the oracles the
closed forms are checked against. Cofactor expansion and elimination are
independent determinant algorithms.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import unicode_literals

from collections import namedtuple
from fractions import Fraction
import math

from cauchyid.config import defaults
from cauchyid.ring import NotInvertible, RingContext, sum_of


WeightVectors = namedtuple("WeightVectors", ("xs", "ys"))


class ShapeError(ValueError):
    """Raised when matrix shapes are incompatible with an operation"""


class SizeGuardExceeded(ValueError):
    """Raised when cofactor expansion is asked for a matrix too large for it"""


class Matrix(object):
    """Immutable dense matrix of scalars sharing one ring context, stored row
    major"""

    __slots__ = ('rows', 'cols', 'entries', 'context')

    def __init__(self, rows, cols, entries, context):
        entries = tuple(context.element(entry) for entry in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeError("{} entries cannot fill a {}x{} matrix"
                             .format(len(entries), rows, cols))
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self.context = context

    @classmethod
    def _trusted(cls, rows, cols, entries, context):
        obj = object.__new__(cls)
        obj.rows = rows
        obj.cols = cols
        obj.entries = tuple(entries)
        obj.context = context
        return obj

    @classmethod
    def from_rows(cls, rows, context):
        """Builds a matrix from a list of equal-length rows"""
        rows = [list(row) for row in rows]
        cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ShapeError("Ragged rows: expected {} entries, got {}"
                                 .format(cols, len(row)))
        return cls(len(rows), cols, [e for row in rows for e in row], context)

    @classmethod
    def identity(cls, n, context):
        zero, one = context.zero(), context.one()
        return cls._trusted(n, n, [one if i == j else zero
                                   for i in range(n) for j in range(n)],
                            context)

    @classmethod
    def zeros(cls, rows, cols, context):
        return cls._trusted(rows, cols, [context.zero()] * (rows * cols),
                            context)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, index):
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("Entry ({}, {}) outside a {}x{} matrix"
                             .format(i, j, self.rows, self.cols))
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return self.entries[j::self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return Matrix._trusted(self.cols, self.rows,
                               [self.entries[i * self.cols + j]
                                for j in range(self.cols)
                                for i in range(self.rows)],
                               self.context)

    def minor(self, row, col):
        """The matrix with the given row and column removed"""
        return Matrix._trusted(self.rows - 1, self.cols - 1,
                               [self.entries[i * self.cols + j]
                                for i in range(self.rows) if i != row
                                for j in range(self.cols) if j != col],
                               self.context)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.shape == other.shape and self.context == other.context
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return "Matrix({}x{}, {}, {})".format(
            self.rows, self.cols, self.context,
            [[str(e) for e in row] for row in self.to_rows()])


def _same_context(A, B):
    if A.context != B.context:
        raise ShapeError("Matrices live in different rings: {} and {}"
                         .format(A.context, B.context))


def _require_square(A, operation):
    if not A.is_square:
        raise ShapeError("{} needs a square matrix, got {}x{}"
                         .format(operation, A.rows, A.cols))


def mat_mul(A, B):
    """Exact matrix product"""
    _same_context(A, B)
    if A.cols != B.rows:
        raise ShapeError("Cannot multiply {}x{} by {}x{}"
                         .format(A.rows, A.cols, B.rows, B.cols))
    context = A.context
    columns = [B.column(k) for k in range(B.cols)]
    entries = []
    for i in range(A.rows):
        row = A.row(i)
        for column in columns:
            entries.append(sum_of(context, [a * b for a, b in zip(row, column)]))
    return Matrix._trusted(A.rows, B.cols, entries, context)


def scale(c, A):
    c = A.context.element(c)
    return Matrix._trusted(A.rows, A.cols, [c * e for e in A.entries],
                           A.context)


def permute(A, row_perm, col_perm):
    """Entry (i, j) of the result is A[row_perm[i], col_perm[j]]"""
    if sorted(row_perm) != list(range(A.rows)) or \
            sorted(col_perm) != list(range(A.cols)):
        raise ShapeError("Permutations do not match a {}x{} matrix"
                         .format(A.rows, A.cols))
    return Matrix._trusted(A.rows, A.cols,
                           [A[i, j] for i in row_perm for j in col_perm],
                           A.context)


def bordered(A):
    """A with a row of ones appended at the bottom, a column of ones at the
    right and zero in the new corner"""
    _require_square(A, "Bordering")
    one, zero = A.context.one(), A.context.zero()
    entries = []
    for i in range(A.rows):
        entries.extend(A.row(i))
        entries.append(one)
    entries.extend([one] * A.cols)
    entries.append(zero)
    return Matrix._trusted(A.rows + 1, A.cols + 1, entries, A.context)


def _cofactor_expand(rows, r, cols, zero):
    # Laplace expansion along row r over the remaining columns
    if len(cols) == 1:
        return rows[r][cols[0]]
    total = zero
    for idx, c in enumerate(cols):
        entry = rows[r][c]
        if entry == 0:
            continue
        term = entry * _cofactor_expand(rows, r + 1,
                                        cols[:idx] + cols[idx + 1:], zero)
        total = total + term if idx % 2 == 0 else total - term
    return total


def det_cofactor(A, limit=None):
    """Determinant by first-row Laplace expansion. Exponential cost, hence
    the size guard."""
    _require_square(A, "Cofactor determinant")
    limit = defaults['COFACTOR_LIMIT'] if limit is None else limit
    if A.rows > limit:
        raise SizeGuardExceeded("Cofactor expansion is limited to n <= {}, "
                                "got n = {}".format(limit, A.rows))
    if A.rows == 0:
        return A.context.one()
    rows = [A.row(i) for i in range(A.rows)]
    return _cofactor_expand(rows, 0, tuple(range(A.cols)), A.context.zero())


def _bareiss(rows):
    """Fraction-free elimination on an integer matrix"""
    n = len(rows)
    M = [list(row) for row in rows]
    sign = 1
    previous = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            below = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, n):
                # exact: every intermediate is a minor of the input
                row_i[j] = (pivot * row_i[j] - below * row_k[j]) // previous
        previous = pivot
    return sign * M[n - 1][n - 1]


def _det_rational(A):
    # Scale each row to integers, run Bareiss, undo the scaling
    rows = []
    scaling = 1
    for i in range(A.rows):
        values = [e.value for e in A.row(i)]
        lcm = 1
        for value in values:
            lcm = lcm * value.denominator // math.gcd(lcm, value.denominator)
        rows.append([int(value * lcm) for value in values])
        scaling *= lcm
    return A.context.from_fraction(Fraction(_bareiss(rows), scaling))


def _det_prime(A):
    p = A.context.modulus
    n = A.rows
    M = [[e.value for e in A.row(i)] for i in range(n)]
    det = 1
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if M[i][k]), None)
        if pivot_row is None:
            return A.context.zero()
        if pivot_row != k:
            M[k], M[pivot_row] = M[pivot_row], M[k]
            det = -det
        pivot = M[k][k]
        det = det * pivot % p
        pivot_inv = pow(pivot, -1, p)
        for i in range(k + 1, n):
            factor = M[i][k] * pivot_inv % p
            if factor:
                row_i, row_k = M[i], M[k]
                for j in range(k, n):
                    row_i[j] = (row_i[j] - factor * row_k[j]) % p
    return A.context.from_fraction(Fraction(det))


def det_fast(A):
    """Determinant by elimination: Bareiss over the rationals, pivoted
    Gaussian elimination over a prime field"""
    _require_square(A, "Determinant")
    if A.rows == 0:
        return A.context.one()
    if A.context.kind == RingContext.RATIONAL:
        return _det_rational(A)
    return _det_prime(A)


def adjugate(A):
    """Entry (i, j) is (-1)^(i+j) times the determinant of A without row j
    and column i. The 1x1 adjugate is [[1]]."""
    _require_square(A, "Adjugate")
    n = A.rows
    if n == 1:
        return Matrix.identity(1, A.context)
    entries = []
    for i in range(n):
        for j in range(n):
            minor = det_fast(A.minor(j, i))
            entries.append(minor if (i + j) % 2 == 0 else -minor)
    return Matrix._trusted(n, n, entries, A.context)


def inverse(A):
    """inv(det A) times adj A; raises NotInvertible carrying det A when the
    determinant has no inverse in the ring"""
    _require_square(A, "Inverse")
    det = det_fast(A)
    if not det.is_invertible():
        raise NotInvertible(det, "Matrix is singular over {} (det = {})"
                            .format(A.context, det))
    return scale(det.inv(), adjugate(A))


def entry_sum(A):
    return sum_of(A.context, A.entries)


def column_sum(A, j):
    if not 0 <= j < A.cols:
        raise IndexError("Column {} outside a {}x{} matrix"
                         .format(j, A.rows, A.cols))
    return sum_of(A.context, A.column(j))


def trace(A):
    _require_square(A, "Trace")
    return sum_of(A.context, [A[i, i] for i in range(A.rows)])


def lemma_ab_check(A, B, weights):
    """Both sides of the weighted trace identity

        sum_{i,j} (x_i + y_j) A[i,j] B[j,i]
            = sum_i x_i (AB)[i,i] + sum_j y_j (BA)[j,j]

    for A n x m, B m x n and weights of lengths n and m."""
    _same_context(A, B)
    n, m = A.rows, A.cols
    if B.shape != (m, n):
        raise ShapeError("Expected B to be {}x{}, got {}x{}"
                         .format(m, n, B.rows, B.cols))
    context = A.context
    xs = [context.element(x) for x in weights.xs]
    ys = [context.element(y) for y in weights.ys]
    if len(xs) != n or len(ys) != m:
        raise ShapeError("Weights of lengths {} and {} do not fit a {}x{} "
                         "matrix".format(len(xs), len(ys), n, m))
    lhs = sum_of(context, [(xs[i] + ys[j]) * A[i, j] * B[j, i]
                           for i in range(n) for j in range(m)])
    AB = mat_mul(A, B)
    BA = mat_mul(B, A)
    rhs = (sum_of(context, [xs[i] * AB[i, i] for i in range(n)])
           + sum_of(context, [ys[j] * BA[j, j] for j in range(m)]))
    return lhs, rhs


def border_det_general(A):
    """(det of the bordered A, entry sum of adj A); the first is always the
    negative of the second"""
    _require_square(A, "Bordered determinant")
    return det_fast(bordered(A)), entry_sum(adjugate(A))
