from __future__ import absolute_import
from __future__ import unicode_literals

import io
import json
import os

import pytest

from cauchyid.cauchy import CauchySpec, NonInvertiblePairSum, SpecError
from cauchyid.densela import Matrix
from cauchyid.minmat import MinSpec, normalize
from cauchyid.parsers import (cauchy_spec_from_dict, document_kind,
                              document_ring, find_or_error, load_document,
                              matrix_from_dict, matrix_to_dict,
                              min_spec_from_dict, render_value, spec_to_dict)
from cauchyid.ring import RATIONAL, RingContext, RingError, UnorderedRing

SPECS = os.path.join(os.path.dirname(__file__), 'static', 'specs')


@pytest.fixture
def cauchy_document():
    return {"xs": ["1", "2"], "ys": ["3", "5"]}


class TestLoadDocument(object):

    def test_path(self):
        document = load_document(os.path.join(SPECS, 'cauchy.json'))
        assert document['xs'] == ["1", "2"]

    def test_inline(self):
        assert load_document('{"xs": ["1"], "ys": ["2"]}')['ys'] == ["2"]

    def test_stdin(self):
        stdin = io.StringIO('{"xs": ["1"], "ys": ["2"]}')
        assert load_document('-', stdin)['xs'] == ["1"]

    def test_report_list(self):
        """A one-element list, as written by gen, is unwrapped"""
        assert load_document('[{"xs": ["1"], "ys": ["2"]}]')['xs'] == ["1"]

    def test_errors(self, tmp_dir):
        with pytest.raises(ValueError):
            load_document('{"xs": [')
        with pytest.raises(SpecError):
            load_document('[1, 2]')
        with pytest.raises(SpecError):
            load_document(None)
        with pytest.raises(OSError):
            load_document(os.path.join(tmp_dir, 'missing.json'))


class TestSpecs(object):

    def test_cauchy(self, cauchy_document):
        spec = cauchy_spec_from_dict(cauchy_document)
        assert spec == CauchySpec([1, 2], [3, 5], RATIONAL)

    def test_ring(self, cauchy_document):
        cauchy_document['ring'] = {'prime': 101}
        spec = cauchy_spec_from_dict(cauchy_document)
        assert spec.context == RingContext.prime(101)
        spec = cauchy_spec_from_dict(cauchy_document, ring='rational')
        assert spec.context == RATIONAL
        assert document_ring({'ring': 'prime:7'}) == RingContext.prime(7)
        with pytest.raises(RingError):
            document_ring({'ring': 'reals'})

    def test_minus(self, cauchy_document):
        spec = cauchy_spec_from_dict(cauchy_document, minus=True)
        assert [str(y) for y in spec.ys] == ["-3", "-5"]

    def test_invalid(self, cauchy_document):
        with pytest.raises(SpecError):
            cauchy_spec_from_dict({"xs": ["1"]})
        with pytest.raises(SpecError):
            cauchy_spec_from_dict({"xs": "1", "ys": ["2"]})
        with pytest.raises(NonInvertiblePairSum):
            cauchy_spec_from_dict({"xs": ["1"], "ys": ["-1"]})
        cauchy_document['kind'] = 'min'
        with pytest.raises(SpecError):
            cauchy_spec_from_dict(cauchy_document)
        with pytest.raises(SpecError):
            document_kind({'kind': 'hankel'})

    def test_min(self):
        document = load_document(os.path.join(SPECS, 'min.json'))
        assert min_spec_from_dict(document) == MinSpec([1, 3], [2, 4])
        with pytest.raises(UnorderedRing):
            min_spec_from_dict(document, ring='prime:101')
        with pytest.raises(SpecError):
            min_spec_from_dict({"xs": ["1"], "ys": ["2"]})

    def test_spec_to_dict(self, f101):
        document = spec_to_dict(CauchySpec([1, 2], [3, 5], f101))
        assert json.loads(json.dumps(document)) == \
            {"kind": "cauchy", "ring": {"prime": 101}, "xs": ["1", "2"],
             "ys": ["3", "5"]}
        document = spec_to_dict(normalize(MinSpec([5, 6], [1, 2])))
        assert document['swapped'] is True
        assert document['xs'] == ["1", "2"]
        assert min_spec_from_dict(document) == MinSpec([1, 2], [5, 6])

    def test_find_or_error(self):
        assert find_or_error({'a': 1}, 'a') == 1
        with pytest.raises(SpecError):
            find_or_error({}, 'a')


class TestMatrices(object):

    def test_matrix_dict(self, rational):
        A = Matrix.from_rows([["1/2", 1], [0, -3]], rational)
        document = matrix_to_dict(A)
        assert document == {"rows": 2, "cols": 2,
                            "entries": [["1/2", "1"], ["0", "-3"]]}
        assert matrix_from_dict(document) == A

    def test_bad_matrix_dict(self):
        with pytest.raises(SpecError):
            matrix_from_dict({"rows": 3, "cols": 1, "entries": [["1"]]})
        with pytest.raises(SpecError):
            matrix_from_dict({"rows": 1, "entries": [["1"]]})


class TestRenderValue(object):

    def test_values(self, rational, f101):
        assert render_value(rational.parse("-2/4")) == "-1/2"
        assert render_value(f101.element(-1)) == "100"
        assert render_value(True) == "true"
        assert render_value([rational.one(), rational.zero()]) == '["1","0"]'
        A = Matrix.from_rows([[1, "1/3"]], rational)
        assert render_value(A) == '[["1","1/3"]]'
        assert render_value([False, True]) == '[false,true]'
