"""Seeded random inputs. Every generator takes an explicit random.Random so
that a run is reproduced by its seed alone."""
from __future__ import absolute_import
from __future__ import division
from __future__ import unicode_literals

from fractions import Fraction
import hashlib
import json

from cauchyid.cauchy import CauchySpec, NonInvertiblePairSum, is_invertible_spec
from cauchyid.config import defaults
from cauchyid.densela import Matrix, det_fast
from cauchyid.minmat import MinSpec, build as build_min, normalize
from cauchyid.ring import RATIONAL, RingContext


class GenerationFailed(ValueError):
    """Raised when rejection sampling runs out of attempts"""


def hashgen(hash_object):
    """Generate an md5 hash using the JSON value of the specified object"""
    return hashlib.md5(json.dumps(hash_object).encode('utf-8')).hexdigest()


def trial_seed(*parts):
    """Deterministic 64-bit seed for one trial, independent of run order"""
    return int(hashgen(list(parts))[:16], 16)


def random_scalar(rng, context, bound=None):
    """Rationals a/b with a in [-bound, bound], b in [1, bound]; prime field
    residues uniformly"""
    bound = defaults['SCALAR_BOUND'] if bound is None else bound
    if context.kind == RingContext.RATIONAL:
        return context.from_fraction(Fraction(rng.randint(-bound, bound),
                                              rng.randint(1, bound)))
    return context.from_fraction(Fraction(rng.randrange(context.modulus)))


def random_matrix(rng, context, rows, cols, bound=None):
    return Matrix._trusted(rows, cols,
                           [random_scalar(rng, context, bound)
                            for _ in range(rows * cols)], context)


def random_invertible_matrix(rng, context, n, bound=None, attempts=None):
    attempts = attempts or defaults['GEN_MAX_ATTEMPTS']
    for _ in range(attempts):
        matrix = random_matrix(rng, context, n, n, bound)
        if det_fast(matrix).is_invertible():
            return matrix
    raise GenerationFailed("No invertible {}x{} matrix over {} in {} attempts"
                           .format(n, n, context, attempts))


def _repeat_one(rng, values):
    i, j = rng.sample(range(len(values)), 2)
    values[j] = values[i]


def _prime_cauchy_spec(rng, context, n, invertible, degenerate):
    # x + y = 0 exactly when -y is one of the xs, so ys avoid the negated xs
    p = context.modulus
    if invertible:
        if 2 * n > p:
            raise GenerationFailed("Invertible Cauchy specs of size {} need "
                                   "2n <= p, got {}".format(n, context))
        picked = rng.sample(range(p), 2 * n)
        xs, ys = picked[:n], [-v for v in picked[n:]]
    else:
        support = rng.sample(range(p), rng.randint(1, p - 1))
        allowed = [v for v in range(p) if -v % p not in support]
        xs = [rng.choice(support) for _ in range(n)]
        ys = [rng.choice(allowed) for _ in range(n)]
        if degenerate:
            _repeat_one(rng, xs if rng.random() < 0.5 else ys)
    return CauchySpec([context.element(x) for x in xs],
                      [context.element(y) for y in ys], context)


def random_cauchy_spec(rng, context, n, bound=None, invertible=False,
                       degenerate=False, attempts=None):
    """A valid spec (all pair sums invertible). invertible rejects specs with
    a singular C; degenerate repeats one x or y value so that C is singular,
    which needs n >= 2. Prime field specs are built directly, rationals by
    rejection."""
    attempts = attempts or defaults['GEN_MAX_ATTEMPTS']
    if degenerate and n < 2:
        raise GenerationFailed("Singular Cauchy matrices need n >= 2")
    if context.kind == RingContext.PRIME:
        return _prime_cauchy_spec(rng, context, n, invertible, degenerate)
    for _ in range(attempts):
        xs = [random_scalar(rng, context, bound) for _ in range(n)]
        ys = [random_scalar(rng, context, bound) for _ in range(n)]
        if degenerate:
            _repeat_one(rng, xs if rng.random() < 0.5 else ys)
        try:
            spec = CauchySpec(xs, ys, context)
        except NonInvertiblePairSum:
            continue
        if invertible and not is_invertible_spec(spec).invertible:
            continue
        return spec
    raise GenerationFailed("No valid Cauchy spec of size {} over {} in {} "
                           "attempts".format(n, context, attempts))


def random_min_spec(rng, n, bound=None):
    return MinSpec([random_scalar(rng, RATIONAL, bound) for _ in range(n)],
                   [random_scalar(rng, RATIONAL, bound) for _ in range(n)],
                   RATIONAL)


def random_sorted_min_spec(rng, n, bound=None):
    return normalize(random_min_spec(rng, n, bound))


def _interleaved_min_spec(rng, n, bound):
    # x_1 < y_1 < x_2 < y_2 < ... makes every diagonal factor positive.
    # Sorted draws plus a growing offset are strictly increasing however
    # few distinct scalars the bound allows.
    draws = sorted(random_scalar(rng, RATIONAL, bound) for _ in range(2 * n))
    values = [value + RATIONAL.from_fraction(Fraction(k, bound + 1))
              for k, value in enumerate(draws)]
    if values[0] == 0:
        values[0] = values[0] - RATIONAL.one()
    xs, ys = values[0::2], values[1::2]
    rng.shuffle(xs)
    rng.shuffle(ys)
    if rng.random() < 0.5:
        xs, ys = ys, xs
    return MinSpec(xs, ys, RATIONAL)


# Random min specs are rarely invertible beyond this size
REJECTION_MAX_N = 6


def random_invertible_min_spec(rng, n, bound=None, attempts=None):
    """Half the time plain rejection sampling for n <= REJECTION_MAX_N,
    otherwise (or when rejection runs dry) an interleaved spec in shuffled
    order"""
    bound = defaults['SCALAR_BOUND'] if bound is None else bound
    attempts = attempts or defaults['GEN_MAX_ATTEMPTS']
    if n <= REJECTION_MAX_N and rng.random() < 0.5:
        for _ in range(attempts):
            spec = random_min_spec(rng, n, bound)
            if det_fast(build_min(spec)).is_invertible():
                return spec
    return _interleaved_min_spec(rng, n, bound)


def random_well_separated_spec(rng, n, separation=Fraction(1, 4), span=4):
    """A rational Cauchy spec whose parameters are distinct multiples of
    separation in [separation, span], so every gap and every pair sum is at
    least separation"""
    steps = int(span / separation)
    if n > steps:
        raise GenerationFailed("Only {} multiples of {} fit in [{}, {}]"
                               .format(steps, separation, separation, span))
    xs = [separation * k for k in rng.sample(range(1, steps + 1), n)]
    ys = [separation * k for k in rng.sample(range(1, steps + 1), n)]
    return CauchySpec(xs, ys, RATIONAL)
