"""Min-matrix determinant as a product of factors, against elimination"""
from __future__ import absolute_import
from __future__ import unicode_literals

from cauchyid import minmat
from cauchyid.cli import parse_args
from cauchyid.densela import det_fast
from cauchyid.management import run
from cauchyid.parsers import spec_to_dict
from cauchyid.reports import VerificationReport


def execute(config):
    spec = config.min_spec()
    if not spec.is_sorted:
        spec = minmat.normalize(spec)
    det = det_fast(minmat.build(spec))
    echo = spec_to_dict(spec)
    return [VerificationReport('min_determinant', minmat.det_closed(spec),
                               det, echo),
            VerificationReport('min_determinant_zero',
                               minmat.det_zero_predicate(spec),
                               not det.is_invertible(), echo)]


def main(argv):
    return run(parse_args('min-det', argv, __doc__), execute)
