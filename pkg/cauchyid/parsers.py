"""Reading and writing the JSON documents the command line works with.

A spec document looks like

    {"kind": "cauchy", "ring": "rational", "xs": ["1", "2"], "ys": ["3", "5"]}

with "kind" defaulting to "cauchy" and "ring" to "rational" ({"prime": P}
selects a prime field). Min specs use "kind": "min" and must be rational.
"""
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import OrderedDict
import json
import sys

from cauchyid.cauchy import CauchySpec, SpecError, minus_convention
from cauchyid.densela import Matrix
from cauchyid.minmat import MinSpec, SortedMinSpec
from cauchyid.ring import RATIONAL, Scalar, parse_ring

CAUCHY = 'cauchy'
MIN = 'min'
KINDS = (CAUCHY, MIN)
MATRIX = 'matrix'


def find_or_error(document, key):
    """Fetches key from the document, failing with a SpecError naming it"""
    try:
        return document[key]
    except (KeyError, TypeError):
        raise SpecError("Spec document is missing {!r}".format(key))


def load_document(source, stdin=None):
    """Reads a JSON document from a path, from stdin ('-') or from inline
    JSON text"""
    if source is None:
        raise SpecError("This command needs a spec")
    if source == '-':
        text = (stdin or sys.stdin).read()
    elif source.lstrip().startswith(('{', '[')):
        text = source
    else:
        with open(source) as f:
            text = f.read()
    document = json.loads(text)
    # gen writes its spec as a one-element report list
    if isinstance(document, list) and len(document) == 1:
        document = document[0]
    if not isinstance(document, dict):
        raise SpecError("Spec documents must be JSON objects")
    return document


def is_matrix_document(document):
    """Matrix documents are what `build` writes: {"kind": "matrix", "rows",
    "cols", "entries"}; "kind" may be left out"""
    return document.get('kind') == MATRIX or \
        ('kind' not in document and 'entries' in document)


def document_kind(document):
    kind = document.get('kind', CAUCHY)
    if kind not in KINDS:
        raise SpecError("Unknown spec kind {!r}; expected one of {}"
                        .format(kind, ", ".join(KINDS)))
    return kind


def document_ring(document, ring=None):
    """The ring of a document; an explicit ring selection wins"""
    if ring is not None:
        return parse_ring(ring)
    return parse_ring(document.get('ring', 'rational'))


def _vector(document, key):
    values = find_or_error(document, key)
    if not isinstance(values, list):
        raise SpecError("{!r} must be a list of scalars".format(key))
    return values


def cauchy_spec_from_dict(document, ring=None, minus=False):
    """Builds a CauchySpec; minus negates ys first, for documents written for
    the 1 / (x_i - y_j) convention"""
    if document_kind(document) != CAUCHY:
        raise SpecError("Expected a Cauchy spec, got kind {!r}"
                        .format(document['kind']))
    context = document_ring(document, ring)
    xs, ys = _vector(document, 'xs'), _vector(document, 'ys')
    if minus:
        return minus_convention(xs, ys, context)
    return CauchySpec(xs, ys, context)


def min_spec_from_dict(document, ring=None):
    if document_kind(document) != MIN:
        raise SpecError("Expected a min spec, got kind {!r}"
                        .format(document.get('kind', CAUCHY)))
    context = document_ring(document, ring)
    return MinSpec(_vector(document, 'xs'), _vector(document, 'ys'), context)


def spec_to_dict(spec):
    document = OrderedDict()
    document['kind'] = MIN if isinstance(spec, MinSpec) else CAUCHY
    document['ring'] = spec.context.as_json()
    document['xs'] = [str(x) for x in spec.xs]
    document['ys'] = [str(y) for y in spec.ys]
    if isinstance(spec, SortedMinSpec):
        document['swapped'] = spec.swapped
    return document


def matrix_to_dict(matrix):
    document = OrderedDict()
    document['rows'] = matrix.rows
    document['cols'] = matrix.cols
    document['entries'] = [[str(e) for e in row] for row in matrix.to_rows()]
    return document


def matrix_from_dict(document, context=RATIONAL):
    rows = find_or_error(document, 'rows')
    cols = find_or_error(document, 'cols')
    entries = find_or_error(document, 'entries')
    matrix = Matrix.from_rows(entries, context) if entries else \
        Matrix(rows, cols, [], context)
    if matrix.shape != (rows, cols):
        raise SpecError("Matrix document declares {}x{} but holds {}x{}"
                        .format(rows, cols, matrix.rows, matrix.cols))
    return matrix


def render_value(value):
    """Canonical text of a scalar, matrix, boolean or list of those, as used
    on both sides of a verification report"""
    if isinstance(value, Scalar):
        return str(value)
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, Matrix):
        return json.dumps([[str(e) for e in row] for row in value.to_rows()],
                          separators=(',', ':'))
    if isinstance(value, (list, tuple)):
        return json.dumps([_plain(v) for v in value], separators=(',', ':'))
    return str(value)


def _plain(value):
    if isinstance(value, Matrix):
        return [[str(e) for e in row] for row in value.to_rows()]
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, bool):
        return value
    return str(value)
