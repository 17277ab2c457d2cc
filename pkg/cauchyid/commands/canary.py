"""Float64 inversion scored against the exact inverse entry sum. Without a
spec, runs the Hilbert matrices of CANARY_SIZES and logs a warning when the
table misses its soft expectations."""
from __future__ import absolute_import
from __future__ import unicode_literals

from cauchyid.canary import canary_table, run_canary, soft_checks
from cauchyid.cli import SPEC_OPTIONAL, parse_args
from cauchyid.management import run


def execute(config):
    if config.spec is None:
        reports = canary_table(config.settings.CANARY_SIZES)
        soft_checks(reports)
        return reports
    return run_canary(config.cauchy_spec())


def main(argv):
    return run(parse_args('canary', argv, __doc__, spec=SPEC_OPTIONAL,
                          default_format='csv'), execute)
