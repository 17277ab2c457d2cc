"""Entry sum of the inverse against sum(xs) + sum(ys)"""
from __future__ import absolute_import
from __future__ import unicode_literals

from cauchyid import cauchy
from cauchyid.cli import parse_args
from cauchyid.densela import entry_sum, inverse
from cauchyid.management import run
from cauchyid.parsers import spec_to_dict
from cauchyid.reports import VerificationReport


def execute(config):
    spec = config.cauchy_spec()
    return [VerificationReport('inverse_entry_sum',
                               cauchy.inverse_entry_sum(spec),
                               entry_sum(inverse(cauchy.build(spec))),
                               spec_to_dict(spec))]


def main(argv):
    return run(parse_args('invsum', argv, __doc__), execute)
