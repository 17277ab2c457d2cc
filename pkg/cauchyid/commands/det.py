"""Closed-form Cauchy determinant against elimination. Given a matrix
document instead, elimination against cofactor expansion."""
from __future__ import absolute_import
from __future__ import unicode_literals

from cauchyid import cauchy
from cauchyid.cli import parse_args
from cauchyid.densela import det_cofactor, det_fast
from cauchyid.management import run
from cauchyid.parsers import is_matrix_document, matrix_to_dict, spec_to_dict
from cauchyid.reports import VerificationReport


def execute(config):
    if is_matrix_document(config.document()):
        A = config.matrix()
        return [VerificationReport(
            'det_fast_matches_cofactor', det_fast(A),
            det_cofactor(A, config.settings.COFACTOR_LIMIT),
            matrix_to_dict(A))]
    spec = config.cauchy_spec()
    return [VerificationReport('cauchy_determinant', cauchy.det_closed(spec),
                               det_fast(cauchy.build(spec)),
                               spec_to_dict(spec))]


def main(argv):
    return run(parse_args('det', argv, __doc__), execute)
