from __future__ import absolute_import

from cauchyid.densela import Matrix


def matrix(rows, context):
    """Builds a matrix from rows of integers or fraction strings"""
    return Matrix.from_rows(rows, context)


def as_strings(matrix):
    return [[str(e) for e in row] for row in matrix.to_rows()]


def failures(reports):
    """The reports that did not pass, for readable assertion messages"""
    return [report for report in reports if not report.passed]
