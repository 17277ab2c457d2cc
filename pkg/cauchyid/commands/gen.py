"""Generate a random spec reproducible from --seed"""
from __future__ import absolute_import
from __future__ import unicode_literals

import random

from cauchyid.cli import SPEC_NONE, parse_args
from cauchyid.generators import (random_cauchy_spec, random_invertible_min_spec,
                                 trial_seed)
from cauchyid.management import run
from cauchyid.parsers import MIN, spec_to_dict
from cauchyid.reports import Record
from cauchyid.ring import RATIONAL


def execute(config):
    settings = config.settings
    rng = random.Random(trial_seed(config.seed, 'gen', config.kind))
    if config.kind == MIN:
        if config.ring is not None and config.ring != RATIONAL:
            raise ValueError("Min specs are rational, got --ring {}"
                             .format(config.ring))
        spec = random_invertible_min_spec(rng, config.max_n,
                                          settings.SCALAR_BOUND,
                                          settings.GEN_MAX_ATTEMPTS)
    else:
        # A repeated parameter needs n >= 2 and is drawn half the time
        degenerate = (config.allow_degenerate and config.max_n >= 2
                      and rng.random() < 0.5)
        spec = random_cauchy_spec(rng, config.ring or RATIONAL, config.max_n,
                                  bound=settings.SCALAR_BOUND,
                                  invertible=not degenerate,
                                  degenerate=degenerate,
                                  attempts=settings.GEN_MAX_ATTEMPTS)
    document = spec_to_dict(spec)
    return [Record(document.pop('kind'), document)]


def main(argv):
    return run(parse_args('gen', argv, __doc__, spec=SPEC_NONE), execute)
