"""Float64 inversion of Cauchy matrices scored against the exact entry sum
of the inverse.

The entry sum of C^-1 is sum(xs) + sum(ys), known exactly in O(n), which
makes it a cheap witness of how much an approximate inverse has drifted.
Hilbert matrices (x_i = i, y_j = j - 1) are the standard stress case.
"""
from __future__ import absolute_import
from __future__ import division

from collections import OrderedDict, namedtuple
import math
import time

import numpy as np

from cauchyid.cauchy import CauchySpec, is_invertible_spec
from cauchyid.logging import Log, logger
from cauchyid.ring import NotInvertible, RATIONAL, RingError


CLOSED_FORM = 'closed_form'
GAUSS_PP = 'gauss_pp'
METHODS = (CLOSED_FORM, GAUSS_PP)

# Soft expectations on the Hilbert ladder. A miss is logged, never raised.
MIN_GROWTH = 3.0
CLOSED_FORM_FROM_N = 10

CanaryReport = namedtuple("CanaryReport", ("n", "method", "entry_sum_residual",
                                           "identity_residual", "elapsed"))


class ExactZeroPivot(ArithmeticError):
    """Raised when elimination meets a column with no nonzero pivot"""


def float_matrix(entries):
    """A 2-d float64 array with finite entries"""
    matrix = np.array(entries, dtype=np.float64)
    if matrix.ndim != 2:
        raise ValueError("Expected a 2-d matrix, got shape {}"
                         .format(matrix.shape))
    if not np.all(np.isfinite(matrix)):
        raise ValueError("Float matrices must have finite entries")
    return matrix


def hilbert_spec(n):
    """The spec whose Cauchy matrix has entries 1 / (i + j - 1)"""
    if n < 1:
        raise ValueError("Hilbert matrices need n >= 1, got {}".format(n))
    return CauchySpec(range(1, n + 1), range(n), RATIONAL)


def _float_parameters(spec):
    if not spec.context.is_ordered:
        raise RingError("Float canaries need rational parameters, got {}"
                        .format(spec.context))
    return (np.array([float(x) for x in spec.xs]),
            np.array([float(y) for y in spec.ys]))


def build_float(spec):
    xs, ys = _float_parameters(spec)
    return float_matrix(1.0 / (xs[:, None] + ys[None, :]))


def invert_gauss_pp(M):
    """Gauss-Jordan inversion with partial pivoting"""
    a = float_matrix(M)
    n, cols = a.shape
    if n != cols:
        raise ValueError("Cannot invert a {}x{} matrix".format(n, cols))
    work = np.hstack([a, np.eye(n)])
    for k in range(n):
        p = k + int(np.argmax(np.abs(work[k:, k])))
        if work[p, k] == 0.0:
            raise ExactZeroPivot("No nonzero pivot in column {}".format(k))
        if p != k:
            work[[k, p]] = work[[p, k]]
        work[k] = work[k] / work[k, k]
        others = np.arange(n) != k
        work[others] -= np.outer(work[others, k], work[k])
    return work[:, n:]


def invert_closed_float(spec):
    """The closed-form inverse evaluated in float64"""
    if not is_invertible_spec(spec).invertible:
        raise NotInvertible(None, "Cauchy matrix of {!r} is singular"
                            .format(spec))
    xs, ys = _float_parameters(spec)
    n = len(xs)
    sums = xs[:, None] + ys[None, :]
    x_gaps = xs[:, None] - xs[None, :]
    y_gaps = ys[:, None] - ys[None, :]
    np.fill_diagonal(x_gaps, 1.0)
    np.fill_diagonal(y_gaps, 1.0)
    col_factor = np.prod(sums, axis=1) / np.prod(x_gaps, axis=1)
    row_factor = np.prod(sums, axis=0) / np.prod(y_gaps, axis=1)
    inverse = np.outer(row_factor, col_factor) / sums.T
    return float_matrix(inverse.reshape(n, n))


def _score(spec, method, C, exact_sum):
    start = time.perf_counter()
    if method == CLOSED_FORM:
        inverse = invert_closed_float(spec)
    else:
        inverse = invert_gauss_pp(C)
    elapsed = time.perf_counter() - start
    entry_sum_residual = abs(float(np.sum(inverse)) - exact_sum)
    identity_residual = float(np.max(np.abs(C @ inverse - np.eye(spec.n))))
    return CanaryReport(spec.n, method, entry_sum_residual, identity_residual,
                        elapsed)


@Log("Running float canary")
def run_canary(spec):
    """(closed_form report, gauss_pp report) for one invertible spec. The
    exact entry sum is converted to float only at the comparison."""
    C = build_float(spec)
    exact_sum = float(spec.parameter_sum())
    return tuple(_score(spec, method, C, exact_sum) for method in METHODS)


def canary_table(sizes):
    """Reports for the Hilbert matrices of the given sizes, both methods"""
    log = logger()
    reports = []
    for n in sizes:
        log.info("Hilbert matrix of size {}".format(n))
        reports.extend(run_canary(hilbert_spec(n)))
    return reports


def residual_floor(n):
    """One ulp of the exact Hilbert entry sum n^2; smaller residuals are
    rounding noise"""
    return np.finfo(np.float64).eps * float(hilbert_spec(n).parameter_sum())


def residual_growth(reports, method=GAUSS_PP):
    """log10 of the entry sum residual at the largest n over the residual at
    the smallest n, for one method of a canary_table. Residuals are floored
    at residual_floor(n)."""
    rows = sorted((r for r in reports if r.method == method),
                  key=lambda r: r.n)
    if len(rows) < 2:
        raise ValueError("Need reports for at least two sizes")
    first, last = rows[0], rows[-1]
    return (math.log10(max(last.entry_sum_residual, residual_floor(last.n)))
            - math.log10(max(first.entry_sum_residual,
                             residual_floor(first.n))))


def closed_form_not_worse(reports, from_n=CLOSED_FORM_FROM_N):
    """n -> whether the closed form's entry sum residual is at most the
    gauss_pp one plus residual_floor(n), for every n >= from_n in the table"""
    residuals = dict(((r.n, r.method), r.entry_sum_residual)
                     for r in reports)
    return OrderedDict(
        (n, residuals[n, CLOSED_FORM] <= residuals[n, GAUSS_PP] +
         residual_floor(n))
        for n in sorted(set(r.n for r in reports))
        if n >= from_n and all((n, m) in residuals for m in METHODS))


def soft_checks(reports):
    """Logs a warning for each soft expectation a canary_table misses and
    returns whether all of them held"""
    log = logger()
    held = True
    if len(set(r.n for r in reports)) >= 2:
        growth = residual_growth(reports)
        log.info("gauss_pp residual growth: {:.2f} orders".format(growth))
        if growth < MIN_GROWTH:
            log.warning("gauss_pp residual grew by {:.2f} orders of "
                        "magnitude, expected at least {}"
                        .format(growth, MIN_GROWTH))
            held = False
    for n, not_worse in closed_form_not_worse(reports).items():
        if not not_worse:
            log.warning("closed_form residual exceeds gauss_pp at n = {}"
                        .format(n))
            held = False
    return held
