"""Closed-form inverse against the adjugate inverse"""
from __future__ import absolute_import
from __future__ import unicode_literals

from cauchyid import cauchy
from cauchyid.cli import parse_args
from cauchyid.densela import inverse
from cauchyid.management import run
from cauchyid.parsers import spec_to_dict
from cauchyid.reports import VerificationReport


def execute(config):
    spec = config.cauchy_spec()
    return [VerificationReport('closed_form_inverse',
                               cauchy.inverse_closed(spec),
                               inverse(cauchy.build(spec)),
                               spec_to_dict(spec))]


def main(argv):
    return run(parse_args('inv', argv, __doc__), execute)
