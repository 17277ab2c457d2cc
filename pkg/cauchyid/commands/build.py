"""Build the Cauchy (or, for min specs, the min) matrix of a spec"""
from __future__ import absolute_import
from __future__ import unicode_literals

from cauchyid import cauchy, minmat
from cauchyid.cli import parse_args
from cauchyid.management import run
from cauchyid.parsers import MIN, document_kind, matrix_to_dict
from cauchyid.reports import Record


def execute(config):
    if document_kind(config.document()) == MIN:
        matrix = minmat.build(config.min_spec())
    else:
        matrix = cauchy.build(config.cauchy_spec())
    return [Record('matrix', matrix_to_dict(matrix))]


def main(argv):
    return run(parse_args('build', argv, __doc__), execute)
