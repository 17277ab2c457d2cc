"""Determinant of the bordered Cauchy matrix against its closed form. Given
a matrix document instead, det of the bordered matrix against minus the
entry sum of its adjugate."""
from __future__ import absolute_import
from __future__ import unicode_literals

from cauchyid import cauchy
from cauchyid.cli import parse_args
from cauchyid.densela import border_det_general, det_fast
from cauchyid.management import run
from cauchyid.parsers import is_matrix_document, matrix_to_dict, spec_to_dict
from cauchyid.reports import VerificationReport


def execute(config):
    if is_matrix_document(config.document()):
        A = config.matrix()
        det, total = border_det_general(A)
        return [VerificationReport('border_general', det, -total,
                                   matrix_to_dict(A))]
    spec = config.cauchy_spec()
    return [VerificationReport('bordered_determinant',
                               cauchy.bordered_det_closed(spec),
                               det_fast(cauchy.bordered_matrix(spec)),
                               spec_to_dict(spec))]


def main(argv):
    return run(parse_args('border', argv, __doc__), execute)
