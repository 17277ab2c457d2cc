"""Entry sum of the adjugate against (sum(xs) + sum(ys)) det C; singular
specs are fine"""
from __future__ import absolute_import
from __future__ import unicode_literals

from cauchyid import cauchy
from cauchyid.cli import parse_args
from cauchyid.densela import adjugate, entry_sum
from cauchyid.management import run
from cauchyid.parsers import spec_to_dict
from cauchyid.reports import VerificationReport


def execute(config):
    spec = config.cauchy_spec()
    return [VerificationReport('adjugate_entry_sum',
                               cauchy.adjugate_entry_sum_closed(spec),
                               entry_sum(adjugate(cauchy.build(spec))),
                               spec_to_dict(spec))]


def main(argv):
    return run(parse_args('adjsum', argv, __doc__), execute)
