"""Column sums of the inverse min matrix of the normalized spec"""
from __future__ import absolute_import
from __future__ import unicode_literals

from cauchyid import minmat
from cauchyid.cli import parse_args
from cauchyid.densela import column_sum, inverse
from cauchyid.management import run
from cauchyid.parsers import spec_to_dict
from cauchyid.reports import VerificationReport


def execute(config):
    spec = minmat.normalize(config.min_spec())
    oracle = inverse(minmat.build(spec))
    return [VerificationReport('min_inverse_column_sums',
                               minmat.inverse_column_sums(spec),
                               [column_sum(oracle, j) for j in range(spec.n)],
                               spec_to_dict(spec))]


def main(argv):
    return run(parse_args('min-colsums', argv, __doc__), execute)
