"""Weighted trace identity on seeded random rectangular A and B"""
from __future__ import absolute_import
from __future__ import unicode_literals

from cauchyid.checks import suite
from cauchyid.cli import SPEC_NONE, parse_args
from cauchyid.management import run


def execute(config):
    suite.config = config.settings
    contexts = [config.ring] if config.ring else None
    return suite.run(config.seed, config.trials, config.max_n, contexts,
                     tags=['lemma_ab'], workers=config.workers)


def main(argv):
    return run(parse_args('lemma-ab', argv, __doc__, spec=SPEC_NONE), execute)
