from __future__  import absolute_import

from itertools import product


def add_sweep(base, **kwargs):
    """Generate a list of dictionaries containing all possible combinations of
    the supplied parameters, using the provided list as a base. Parameters
    should be specified using keywords with iterables; the last keyword
    varies fastest, so the output order is fixed by the call.
    """

    output = []
    for params in base:
        for items in product(*kwargs.values()):
            params_to_add = params.copy()
            params_to_add.update(zip(kwargs.keys(), items))
            output.append(params_to_add)
    return output


def trial_plan(seed, checks, trials):
    """Parameter dictionaries for every (check, ring, trial) combination,
    ordered by check, then ring, then trial index. checks maps a check tag
    to the ring names it runs over."""

    plan = []
    for tag, rings in checks.items():
        plan.extend(add_sweep([{'seed': seed, 'check': tag}],
                              ring=list(rings), trial=range(trials)))
    return plan
