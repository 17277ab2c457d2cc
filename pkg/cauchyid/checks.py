"""The identity checks run by `verify`. Every check pits a closed form
against the generic oracle on one random input."""
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import OrderedDict

from cauchyid import cauchy, minmat
from cauchyid.densela import (Matrix, WeightVectors, adjugate,
                              border_det_general, column_sum, det_cofactor,
                              det_fast, entry_sum, inverse, lemma_ab_check,
                              permute, scale)
from cauchyid.generators import (random_cauchy_spec, random_invertible_matrix,
                                 random_invertible_min_spec, random_matrix,
                                 random_min_spec, random_scalar,
                                 random_sorted_min_spec)
from cauchyid.parsers import matrix_to_dict, spec_to_dict
from cauchyid.ring import RingContext
from cauchyid.suite import Suite


suite = Suite()


def _size(trial, ceiling=None):
    top = trial.max_n if ceiling is None else min(trial.max_n, ceiling)
    return trial.rng.randint(1, top)


def _invertible_size(trial):
    # 2n <= p: the xs and the negated ys must be 2n distinct residues
    if trial.context.kind == RingContext.PRIME:
        return _size(trial, trial.context.modulus // 2)
    return _size(trial)


def _cauchy_spec(trial, invertible=False, degenerate=False):
    if invertible:
        n = _invertible_size(trial)
    else:
        n = _size(trial)
    degenerate = degenerate and n >= 2
    return random_cauchy_spec(trial.rng, trial.context, n,
                              bound=trial.config.SCALAR_BOUND,
                              invertible=invertible, degenerate=degenerate,
                              attempts=trial.config.GEN_MAX_ATTEMPTS)


def _matrix(trial, rows, cols):
    return random_matrix(trial.rng, trial.context, rows, cols,
                         trial.config.SCALAR_BOUND)


def _echo(**matrices):
    return OrderedDict((key, matrix_to_dict(value))
                       for key, value in sorted(matrices.items()))


@suite.check('det_fast_matches_cofactor')
def det_fast_matches_cofactor(trial):
    """Elimination and cofactor expansion agree"""
    n = _size(trial)
    A = _matrix(trial, n, n)
    return (det_fast(A), det_cofactor(A, trial.config.COFACTOR_LIMIT),
            _echo(A=A))


@suite.check('adjugate_identity')
def adjugate_identity(trial):
    """A adj(A) = det(A) I"""
    n = _size(trial)
    A = _matrix(trial, n, n)
    return (A @ adjugate(A), scale(det_fast(A), Matrix.identity(n, A.context)),
            _echo(A=A))


@suite.check('inverse_identity')
def inverse_identity(trial):
    """A inv(A) = I"""
    n = _size(trial)
    A = random_invertible_matrix(trial.rng, trial.context, n,
                                 trial.config.SCALAR_BOUND,
                                 trial.config.GEN_MAX_ATTEMPTS)
    return A @ inverse(A), Matrix.identity(n, A.context), _echo(A=A)


@suite.check('det_multiplicative')
def det_multiplicative(trial):
    """det(AB) = det(A) det(B)"""
    n = _size(trial)
    A, B = _matrix(trial, n, n), _matrix(trial, n, n)
    return det_fast(A @ B), det_fast(A) * det_fast(B), _echo(A=A, B=B)


@suite.check('lemma_ab')
def lemma_ab(trial):
    """The weighted trace identity for rectangular A and B; even trials use
    n != m"""
    n = _size(trial)
    sizes = list(range(1, trial.max_n + 1))
    if trial.index % 2 == 0 and len(sizes) > 1:
        sizes.remove(n)
    m = trial.rng.choice(sizes)
    A, B = _matrix(trial, n, m), _matrix(trial, m, n)
    weights = WeightVectors(
        [random_scalar(trial.rng, trial.context, trial.config.SCALAR_BOUND)
         for _ in range(n)],
        [random_scalar(trial.rng, trial.context, trial.config.SCALAR_BOUND)
         for _ in range(m)])
    lhs, rhs = lemma_ab_check(A, B, weights)
    echo = _echo(A=A, B=B)
    echo['weights'] = OrderedDict([('xs', [str(x) for x in weights.xs]),
                                   ('ys', [str(y) for y in weights.ys])])
    return lhs, rhs, echo


@suite.check('border_general')
def border_general(trial):
    """Bordering any square A gives det = -(entry sum of adj A)"""
    n = _size(trial, 5)
    A = _matrix(trial, n, n)
    det, total = border_det_general(A)
    return det, -total, _echo(A=A)


@suite.check('cauchy_determinant')
def cauchy_determinant(trial):
    """Closed-form Cauchy determinant against elimination"""
    spec = _cauchy_spec(trial)
    return (cauchy.det_closed(spec), det_fast(cauchy.build(spec)),
            spec_to_dict(spec))


@suite.check('inverse_entry_sum')
def inverse_entry_sum(trial):
    """Entry sum of the inverse is sum(xs) + sum(ys), for the oracle inverse
    and for the closed-form inverse"""
    spec = _cauchy_spec(trial, invertible=True)
    closed = cauchy.inverse_entry_sum(spec)
    return ([closed, closed],
            [entry_sum(inverse(cauchy.build(spec))),
             entry_sum(cauchy.inverse_closed(spec))],
            spec_to_dict(spec))


@suite.check('closed_form_inverse')
def closed_form_inverse(trial):
    """Closed-form inverse entries against the adjugate inverse"""
    spec = _cauchy_spec(trial, invertible=True)
    return (cauchy.inverse_closed(spec), inverse(cauchy.build(spec)),
            spec_to_dict(spec))


@suite.check('weighted_inverse_sum')
def weighted_inverse_sum(trial):
    """The weighted trace identity with A = C, B = inv(C)"""
    spec = _cauchy_spec(trial, invertible=True)
    return (cauchy.weighted_inverse_sum(spec), spec.parameter_sum(),
            spec_to_dict(spec))


@suite.check('adjugate_entry_sum')
def adjugate_entry_sum(trial):
    """Entry sum of adj C is (sum(xs) + sum(ys)) det C; odd trials repeat a
    parameter so that C is singular"""
    spec = _cauchy_spec(trial, degenerate=trial.index % 2 == 1)
    return (cauchy.adjugate_entry_sum_closed(spec),
            entry_sum(adjugate(cauchy.build(spec))), spec_to_dict(spec))


@suite.check('bordered_determinant')
def bordered_determinant(trial):
    """det of the bordered C is -(sum(xs) + sum(ys)) det C"""
    spec = _cauchy_spec(trial, degenerate=trial.index % 2 == 1)
    return (cauchy.bordered_det_closed(spec),
            det_fast(cauchy.bordered_matrix(spec)), spec_to_dict(spec))


@suite.check('invertibility_criterion')
def invertibility_criterion(trial):
    """Strong distinctness of the parameters decides invertibility"""
    spec = _cauchy_spec(trial, degenerate=trial.index % 2 == 1)
    verdict = cauchy.is_invertible_spec(spec).invertible
    return ([verdict, verdict],
            [cauchy.det_closed(spec).is_invertible(),
             det_fast(cauchy.build(spec)).is_invertible()],
            spec_to_dict(spec))


@suite.check('cauchy_swap_symmetry')
def cauchy_swap_symmetry(trial):
    """Exchanging xs and ys transposes C"""
    spec = _cauchy_spec(trial)
    return (cauchy.build(cauchy.swapped(spec)),
            cauchy.build(spec).transpose(), spec_to_dict(spec))


def _min_spec(trial):
    # Random specs are mostly singular, so odd trials take invertible ones
    n = _size(trial)
    if trial.index % 2 == 1:
        return minmat.normalize(random_invertible_min_spec(
            trial.rng, n, trial.config.SCALAR_BOUND,
            trial.config.GEN_MAX_ATTEMPTS))
    return random_sorted_min_spec(trial.rng, n, trial.config.SCALAR_BOUND)


@suite.check('min_determinant', ordered_only=True)
def min_determinant(trial):
    """Product of mixed second differences against elimination"""
    spec = _min_spec(trial)
    return (minmat.det_closed(spec), det_fast(minmat.build(spec)),
            spec_to_dict(spec))


@suite.check('min_difference_matrix', ordered_only=True)
def min_difference_matrix(trial):
    """The difference matrix keeps det F and carries the factors on its
    diagonal"""
    spec = _min_spec(trial)
    F = minmat.difference_matrix(spec)
    return ([det_fast(F)] + [F[k, k] for k in range(spec.n)],
            [det_fast(minmat.build(spec))] + minmat.det_factors(spec),
            spec_to_dict(spec))


@suite.check('min_inverse_entry_sum', ordered_only=True)
def min_inverse_entry_sum(trial):
    """Entry sum of inv(F) is 1 / min, before and after normalizing"""
    spec = random_invertible_min_spec(trial.rng, _size(trial),
                                      trial.config.SCALAR_BOUND,
                                      trial.config.GEN_MAX_ATTEMPTS)
    oracle = entry_sum(inverse(minmat.build(spec)))
    return ([minmat.inverse_entry_sum(spec),
             minmat.inverse_entry_sum(minmat.normalize(spec))],
            [oracle, oracle], spec_to_dict(spec))


@suite.check('min_inverse_column_sums', ordered_only=True)
def min_inverse_column_sums(trial):
    """Column sums of inv(F) are 1 / x_1 then zeros"""
    spec = minmat.normalize(random_invertible_min_spec(
        trial.rng, _size(trial), trial.config.SCALAR_BOUND,
        trial.config.GEN_MAX_ATTEMPTS))
    oracle = inverse(minmat.build(spec))
    return (minmat.inverse_column_sums(spec),
            [column_sum(oracle, j) for j in range(spec.n)],
            spec_to_dict(spec))


@suite.check('min_normalize_abs_det', ordered_only=True)
def min_normalize_abs_det(trial):
    """Normalizing permutes and maybe transposes F, so |det F| survives"""
    spec = random_min_spec(trial.rng, _size(trial), trial.config.SCALAR_BOUND)
    F = minmat.build(spec)
    row_perm, col_perm, transposed = minmat.normalizing_permutation(spec)
    moved = permute(F.transpose() if transposed else F, row_perm, col_perm)
    F_sorted = minmat.build(minmat.normalize(spec))
    return ([F_sorted, abs(det_fast(F_sorted))], [moved, abs(det_fast(F))],
            spec_to_dict(spec))
