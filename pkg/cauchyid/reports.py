from __future__ import absolute_import
from __future__ import unicode_literals

from collections import OrderedDict
import csv
import json
import os

from jinja2 import Template

from cauchyid.parsers import render_value

FORMATS = ('json', 'csv', 'text')

TEMPLATE_PATH = os.path.join(os.path.dirname(__file__), 'templates')


class VerificationReport(object):
    """One identity evaluated on one input: the closed form (lhs) and the
    oracle (rhs), both rendered canonically so that pass is just string
    equality"""

    csv_header = ('identity', 'lhs', 'rhs', 'pass', 'seed', 'trial')

    def __init__(self, identity, lhs, rhs, spec_echo=None, seed=None,
                 trial=None):
        self.identity = identity
        self.lhs = render_value(lhs)
        self.rhs = render_value(rhs)
        self.passed = self.lhs == self.rhs
        self.spec_echo = spec_echo
        self.seed = seed
        self.trial = trial

    def as_dict(self):
        out = OrderedDict()
        out['identity'] = self.identity
        out['lhs'] = self.lhs
        out['rhs'] = self.rhs
        out['pass'] = self.passed
        out['spec'] = self.spec_echo
        out['seed'] = self.seed
        out['trial'] = self.trial
        return out

    def csv_row(self):
        return [self.identity, self.lhs, self.rhs,
                'true' if self.passed else 'false',
                '' if self.seed is None else self.seed,
                '' if self.trial is None else self.trial]

    def __repr__(self):
        return "VerificationReport({!r}, lhs={!r}, rhs={!r}, pass={})".format(
            self.identity, self.lhs, self.rhs, self.passed)


class Record(object):
    """A plain result (a generated spec, a built matrix) with nothing to
    verify"""

    csv_header = ('kind', 'value')
    passed = True

    def __init__(self, kind, payload):
        self.kind = kind
        self.payload = payload

    def as_dict(self):
        out = OrderedDict()
        out['kind'] = self.kind
        out.update(self.payload)
        return out

    def csv_row(self):
        return [self.kind, json.dumps(self.payload, separators=(',', ':'))]


def _as_dict(output):
    if hasattr(output, 'as_dict'):
        return output.as_dict()
    return output._asdict()


def _csv_header(output):
    return getattr(output, 'csv_header', None) or output._fields


def _csv_row(output):
    if hasattr(output, 'csv_row'):
        return output.csv_row()
    return list(output)


def all_passed(outputs):
    return all(getattr(output, 'passed', True) for output in outputs)


def write_json(outputs, stream):
    json.dump([_as_dict(output) for output in outputs], stream, indent=2)
    stream.write("\n")


def write_csv(outputs, stream):
    writer = csv.writer(stream, lineterminator="\n")
    if outputs:
        writer.writerow(_csv_header(outputs[0]))
    for output in outputs:
        writer.writerow(_csv_row(output))


def write_text(outputs, stream):
    with open(os.path.join(TEMPLATE_PATH, 'report.txt')) as f:
        template = Template(f.read())
    items = []
    for output in outputs:
        fields = list(_as_dict(output).items())
        title, status = fields[0][1], None
        if hasattr(output, 'passed') and hasattr(output, 'identity'):
            status = 'PASS' if output.passed else 'FAIL'
        items.append({'title': title, 'status': status, 'fields': fields[1:]})
    failures = sum(1 for output in outputs
                   if not getattr(output, 'passed', True))
    stream.write(template.render(items=items, total=len(outputs),
                                 failures=failures))
    stream.write("\n")


WRITERS = {'json': write_json, 'csv': write_csv, 'text': write_text}


def write_reports(outputs, output_format, stream):
    try:
        writer = WRITERS[output_format]
    except KeyError:
        raise ValueError("Unknown output format {!r}; expected one of {}"
                         .format(output_format, ", ".join(FORMATS)))
    writer(list(outputs), stream)
