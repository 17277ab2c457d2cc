"""Entry sum of the inverse min matrix against 1 / min"""
from __future__ import absolute_import
from __future__ import unicode_literals

from cauchyid import minmat
from cauchyid.cli import parse_args
from cauchyid.densela import entry_sum, inverse
from cauchyid.management import run
from cauchyid.parsers import spec_to_dict
from cauchyid.reports import VerificationReport


def execute(config):
    spec = config.min_spec()
    return [VerificationReport('min_inverse_entry_sum',
                               minmat.inverse_entry_sum(spec),
                               entry_sum(inverse(minmat.build(spec))),
                               spec_to_dict(spec))]


def main(argv):
    return run(parse_args('min-invsum', argv, __doc__), execute)
