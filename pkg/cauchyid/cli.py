"""Flag parsing shared by every subcommand."""
from __future__ import absolute_import
from __future__ import unicode_literals

import argparse

from cauchyid.config import default_config
from cauchyid.parsers import (CAUCHY, KINDS, cauchy_spec_from_dict,
                              document_ring, load_document, matrix_from_dict,
                              min_spec_from_dict)
from cauchyid.reports import FORMATS
from cauchyid.ring import parse_ring

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2

# Failures while reading input or computing on it; argparse handles flags
INPUT_ERRORS = (ValueError, LookupError, ArithmeticError, OSError)

# Commands whose oracle may fall back on cofactor expansion
SIZE_GUARDED = ('verify', 'lemma-ab')

SPEC_REQUIRED = 'required'
SPEC_OPTIONAL = 'optional'
SPEC_NONE = 'none'


class RunConfig(object):
    """Everything one invocation needs, validated on construction"""

    def __init__(self, command, spec=None, ring=None, seed=None, trials=None,
                 max_n=None, output_format='json', minus_convention=False,
                 allow_degenerate=False, kind=CAUCHY, workers=1, output=None,
                 settings=None):
        self.settings = settings or default_config()
        self.command = command
        self.spec = spec
        self.ring = None if ring is None else parse_ring(ring)
        self.seed = self.settings.DEFAULT_SEED if seed is None else seed
        self.trials = self.settings.DEFAULT_TRIALS if trials is None else trials
        self.max_n = self.settings.DEFAULT_MAX_N if max_n is None else max_n
        self.output_format = output_format
        self.minus_convention = minus_convention
        self.allow_degenerate = allow_degenerate
        self.kind = kind
        self.workers = workers
        self.output = output
        self._document = None

        if self.trials < 1:
            raise ValueError("--trials must be at least 1, got {}"
                             .format(self.trials))
        if self.max_n < 1:
            raise ValueError("--n must be at least 1, got {}".format(self.max_n))
        if command in SIZE_GUARDED and \
                self.max_n > self.settings.COFACTOR_LIMIT:
            raise ValueError("--n is limited to {} for {}, got {}"
                             .format(self.settings.COFACTOR_LIMIT, command,
                                     self.max_n))
        if self.workers < 1:
            raise ValueError("--workers must be at least 1, got {}"
                             .format(self.workers))
        if output_format not in FORMATS:
            raise ValueError("Unknown format {!r}".format(output_format))
        if kind not in KINDS:
            raise ValueError("Unknown spec kind {!r}".format(kind))

    def document(self, stdin=None):
        # Read once: stdin cannot be read a second time
        if self._document is None:
            self._document = load_document(self.spec, stdin)
        return self._document

    def cauchy_spec(self, stdin=None):
        return cauchy_spec_from_dict(self.document(stdin), self.ring,
                                     self.minus_convention)

    def min_spec(self, stdin=None):
        return min_spec_from_dict(self.document(stdin), self.ring)

    def matrix(self, stdin=None):
        document = self.document(stdin)
        return matrix_from_dict(document, document_ring(document, self.ring))


def build_parser(command, description=None, spec=SPEC_REQUIRED,
                 default_format='json'):
    parser = argparse.ArgumentParser(prog="cauchyid {}".format(command),
                                     description=description)
    if spec == SPEC_REQUIRED:
        parser.add_argument('spec', help="JSON spec: a path, - for stdin, "
                            "or inline JSON text")
    elif spec == SPEC_OPTIONAL:
        parser.add_argument('spec', nargs='?', default=None,
                            help="JSON spec: a path, - for stdin, or inline "
                            "JSON text")
    parser.add_argument('--ring', default=None,
                        help="rational or prime:P (overrides the spec's ring)")
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--trials', type=int, default=None)
    parser.add_argument('--n', type=int, default=None, dest='max_n',
                        help="matrix size (gen) or upper size bound")
    parser.add_argument('--format', choices=FORMATS, default=default_format,
                        dest='output_format')
    parser.add_argument('--minus-convention', action='store_true',
                        help="read the spec as 1 / (x_i - y_j)")
    parser.add_argument('--allow-degenerate', action='store_true',
                        help="let gen repeat a parameter")
    parser.add_argument('--kind', choices=KINDS, default=CAUCHY)
    parser.add_argument('--workers', type=int, default=1)
    parser.add_argument('--output', default=None,
                        help="write reports here instead of stdout")
    parser.add_argument('--settings', default=None,
                        help="Python file overriding the default settings")
    return parser


def parse_args(command, argv, description=None, spec=SPEC_REQUIRED,
               default_format='json'):
    """Parses argv into a RunConfig; bad flags exit with status 2"""
    parser = build_parser(command, description, spec, default_format)
    args = parser.parse_args(argv)
    settings = default_config()
    try:
        if args.settings:
            settings.from_pyfile(args.settings)
        return RunConfig(command, spec=getattr(args, 'spec', None),
                         ring=args.ring, seed=args.seed, trials=args.trials,
                         max_n=args.max_n, output_format=args.output_format,
                         minus_convention=args.minus_convention,
                         allow_degenerate=args.allow_degenerate,
                         kind=args.kind, workers=args.workers,
                         output=args.output, settings=settings)
    except INPUT_ERRORS as e:
        parser.error(str(e))
