"""
JSON shapes for fields, matrices, subspaces, codes, specs and reports.

Field elements are written as their integer encodings and polynomials as
little-endian lists of encodings. Readers re-canonicalize subspaces, so a
hand-written basis need not be in RRE form.
"""
import json
from dataclasses import asdict, fields
from fractions import Fraction

from django.core.serializers.json import DjangoJSONEncoder

from .analysis import SubspaceCode
from .exceptions import ParameterError
from .fields import get_field
from .grassmann import Subspace
from .linalg import MatrixFq
from .sunflower import SunflowerCodeSpec


class SubspaceJSONEncoder(DjangoJSONEncoder):
    def default(self, o):
        if isinstance(o, Fraction):
            return f'{o.numerator}/{o.denominator}'
        if isinstance(o, Subspace):
            return subspace_to_dict(o)
        if isinstance(o, MatrixFq):
            return matrix_to_dict(o)
        if isinstance(o, (set, frozenset, tuple)):
            return list(o)
        if hasattr(o, 'item'):  # numpy scalars
            return o.item()
        return super().default(o)


def dumps(document):
    return json.dumps(document, cls=SubspaceJSONEncoder, sort_keys=True, indent=2)


def _require(data, *keys):
    missing = [key for key in keys if key not in data]
    if missing:
        raise ParameterError(f'JSON document is missing {", ".join(missing)}')


def field_to_dict(ctx):
    return {'p': ctx.p, 'm': ctx.m, 'modulus': list(ctx.modulus or ())}


def field_from_dict(data):
    _require(data, 'p')
    modulus = data.get('modulus') or None
    return get_field(int(data['p']), int(data.get('m', 1)), modulus)


def matrix_to_dict(matrix):
    return {'rows': matrix.rows, 'cols': matrix.cols, 'entries': matrix.tolist()}


def matrix_from_dict(ctx, data):
    _require(data, 'rows', 'cols', 'entries')
    return MatrixFq(ctx, data['entries'] or [], rows=int(data['rows']), cols=int(data['cols']))


def subspace_to_dict(subspace):
    return {'n': subspace.n, 'basis': matrix_to_dict(subspace.basis)}


def subspace_from_dict(ctx, data):
    _require(data, 'n', 'basis')
    basis = matrix_from_dict(ctx, data['basis'])
    if basis.cols != int(data['n']):
        raise ParameterError(f'basis has {basis.cols} columns but n = {data["n"]}')
    return Subspace(basis)


def code_to_dict(code):
    return {
        'field': field_to_dict(code.ctx),
        'k': code.k,
        'n': code.n,
        'words': [subspace_to_dict(w) for w in code.words],
    }


def code_from_dict(data, ctx=None):
    """A SubspaceCode from {"field"?, "words": [...]}; ctx is used when "field" is absent."""
    _require(data, 'words')
    if 'field' in data:
        ctx = field_from_dict(data['field'])
    if ctx is None:
        raise ParameterError('a code document needs a "field" entry or an explicit --q')
    return SubspaceCode(subspace_from_dict(ctx, w) for w in data['words'])


def spec_to_dict(spec):
    return {
        'field': field_to_dict(spec.ctx),
        'q': spec.q,
        'k': spec.k,
        'n': spec.n,
        'c': spec.c,
        'h': spec.h,
        'r': spec.r,
        'p': list(spec.p.values),
        'p_prime': list(spec.p_prime.values),
        'cardinality': spec.cardinality,
    }


def spec_from_dict(data):
    _require(data, 'field', 'k', 'n', 'c')
    return SunflowerCodeSpec.build(field_from_dict(data['field']), int(data['k']), int(data['n']),
                                   int(data['c']), data.get('p'), data.get('p_prime'))


def outcome_to_dict(outcome):
    return {
        'status': outcome.status.value,
        'index': outcome.index,
        'message': outcome.message.describe() if outcome.message is not None else None,
        'distance': outcome.distance,
        'basis': matrix_to_dict(outcome.word.basis) if outcome.word is not None else None,
        'candidates': outcome.candidates,
    }


def profile_to_dict(prof):
    data = {f.name: getattr(prof, f.name) for f in fields(prof)}
    data['center'] = subspace_to_dict(prof.center) if prof.center is not None else None
    data['centers'] = [subspace_to_dict(a) for a in prof.centers]
    return data


def ledger_to_dict(ledger):
    data = asdict(ledger)
    data['center_count_coefficient'] = '{}/{}'.format(ledger.center_count_coefficient.numerator,
                                                      ledger.center_count_coefficient.denominator)
    for key in ('parameters', 'reduced_parameters', 'dual_parameters'):
        data[key] = list(data[key])
    return data


def report_to_dict(report):
    return {
        'equidistant': report.equidistant,
        'c': report.c,
        'is_sunflower': report.is_sunflower,
        'orthogonal_is_sunflower': report.orthogonal_is_sunflower,
        'all_passed': report.all_passed,
        'checks': [
            {'name': check.name, 'applicable': check.applicable, 'pass': check.passed, 'detail': check.detail}
            for check in report.checks
        ],
    }
