"""JSON formats for algebras, morphisms, elements, paths and reports.

Every ``*_to_dict`` function returns plain JSON data with rationals as
``"p/q"`` strings and monomials as exponent vectors; :func:`dumps`
serializes with sorted keys so that output is byte-stable.

"""

import json
import logging
from fractions import Fraction
from pathlib import Path

from .core import TPoly, TruncationContext, format_rational, parse_rational
from .dgla import DGLAMorphism, DGLieAlgebra, GradedSpace, tensor_with_m
from .exceptions import FormatError, MCDeformError
from .options import OPTIONS


logger = logging.getLogger(__name__)


def dumps(payload):
    return json.dumps(payload, indent=2, sort_keys=True) + '\n'


def read_json(path):
    """Read a JSON file. ``OSError`` propagates, bad JSON raises
    :class:`~mcdeform.exceptions.FormatError`."""
    text = Path(path).read_text(encoding='utf-8')
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("{}: invalid JSON ({})".format(path, exc))


def write_json(payload, path):
    Path(path).write_text(dumps(payload), encoding='utf-8')


def _rational(value):
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return parse_rational(value)


def _get(data, key, kind):
    if not isinstance(data, dict):
        raise FormatError("{} must be a JSON object".format(kind))
    try:
        return data[key]
    except KeyError:
        raise FormatError("{} is missing the field {!r}".format(kind, key))


def _pairs(entries, kind):
    """``[[name, "c"], ...]`` into ``{name: Fraction}``."""
    out = {}
    try:
        for name, c in entries:
            out[str(name)] = out.get(str(name), 0) + _rational(c)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, MCDeformError):
            raise
        raise FormatError("malformed {} entry list".format(kind))
    return out


# DG Lie algebras

def algebra_to_dict(g):
    data = {
        'kind': 'dgla',
        'degrees': {str(d): list(names)
                    for d, names in g.space.degree_map().items()},
        'window': list(g.window),
        'differential': [[x, [[y, format_rational(c)]
                              for y, c in image.items()]]
                         for x, image in g.differential.items()],
        'bracket': [[[x, y], [[z, format_rational(c)]
                              for z, c in image.items()]]
                    for (x, y), image in g.bracket_entries.items()],
    }
    if g.name:
        data['name'] = g.name
    return data


def algebra_from_dict(data, check=None):
    degrees = _get(data, 'degrees', 'DG Lie algebra')
    if not isinstance(degrees, dict):
        raise FormatError("'degrees' must map degrees to name lists")
    try:
        degrees = {int(d): [str(n) for n in names]
                   for d, names in degrees.items()}
    except (TypeError, ValueError):
        raise FormatError("degrees must be integers")
    window = data.get('window')
    space = GradedSpace(degrees, tuple(window) if window else None)

    differential = {}
    for entry in data.get('differential', []):
        try:
            x, image = entry
        except (TypeError, ValueError):
            raise FormatError("malformed differential entry {!r}"
                              .format(entry))
        differential[str(x)] = _pairs(image, 'differential')

    bracket = {}
    for entry in data.get('bracket', []):
        try:
            (x, y), image = entry
        except (TypeError, ValueError):
            raise FormatError("malformed bracket entry {!r}".format(entry))
        bracket[(str(x), str(y))] = _pairs(image, 'bracket')

    return DGLieAlgebra(space, differential, bracket, name=data.get('name'),
                        check=check)


# references to algebras from morphism files

def _resolve(ref, base_dir, check=None):
    if isinstance(ref, dict):
        return algebra_from_dict(ref, check)
    if isinstance(ref, str):
        path = Path(ref)
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        return algebra_from_dict(read_json(path), check)
    raise FormatError("algebra reference must be a path or an inline object")


def _reference(g, ref):
    return ref if ref is not None else algebra_to_dict(g)


# DG Lie algebra morphisms

def morphism_to_dict(phi, source_ref=None, target_ref=None):
    degrees = sorted(set(phi.source.space.degrees))
    return {
        'kind': 'morphism',
        'source': _reference(phi.source, source_ref),
        'target': _reference(phi.target, target_ref),
        'components': {str(d): phi.matrix(d).to_strings() for d in degrees},
    }


def morphism_from_dict(data, base_dir=None, check=None):
    source = _resolve(_get(data, 'source', 'morphism'), base_dir, check)
    target = _resolve(_get(data, 'target', 'morphism'), base_dir, check)
    components = {}
    for d, rows in _get(data, 'components', 'morphism').items():
        try:
            components[int(d)] = [[_rational(c) for c in row]
                                  for row in rows]
        except (TypeError, ValueError) as exc:
            if isinstance(exc, MCDeformError):
                raise
            raise FormatError("malformed component in degree {}".format(d))
    return DGLAMorphism(source, target, components, check=check)


# elements of m (x) g

def element_to_dict(x, include_context=True):
    """``{"degree", "terms": [[name, exponents, "c"], ...]}``."""
    ambient = x.ambient
    name = ambient.base.space.name
    terms = []
    for m in ambient.context.monomials:
        for i in ambient.base.space.indices(x.degree):
            c = x.terms.get((i, m))
            if c:
                terms.append([name(i), list(m), format_rational(c)])
    data = {'degree': x.degree, 'terms': terms}
    if include_context:
        data['kind'] = 'element'
        data['params'] = ambient.context.num_params
        data['order'] = ambient.order
    return data


def context_from_dict(data, num_params=None, order=None):
    """Truncation context of an element file; explicit arguments win."""
    if num_params is None:
        num_params = data.get('params', 1) if isinstance(data, dict) else 1
    if order is None:
        order = data.get('order') if isinstance(data, dict) else None
        if order is None:
            order = OPTIONS['default_order']
    try:
        return TruncationContext(int(num_params), int(order))
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc))


def element_from_dict(data, ambient):
    degree = _get(data, 'degree', 'element')
    terms = {}
    for entry in _get(data, 'terms', 'element'):
        try:
            name, mono, c = entry
            key = (str(name), tuple(int(e) for e in mono))
        except (TypeError, ValueError):
            raise FormatError("malformed element term {!r}".format(entry))
        terms[key] = terms.get(key, 0) + _rational(c)
    return ambient.element(int(degree), terms)


def ambient_for(g, data, num_params=None, order=None):
    return tensor_with_m(g, context_from_dict(data, num_params, order))


# MC paths

def path_to_dict(path):
    return {
        'kind': 'path',
        'params': path.ambient.context.num_params,
        'order': path.ambient.order,
        'one_part': [element_to_dict(c, False)
                     for c in path.one_part.coefficients],
        'form_part': [element_to_dict(c, False)
                      for c in path.form_part.coefficients],
    }


def path_from_dict(data, ambient):
    from .gauge import MCPath

    one = [element_from_dict(c, ambient)
           for c in _get(data, 'one_part', 'path')]
    form = [element_from_dict(c, ambient)
            for c in _get(data, 'form_part', 'path')]
    return MCPath(ambient, TPoly(one, ambient.zero(1)),
                  TPoly(form, ambient.zero(0)))


# L-infinity morphisms

def linf_to_dict(phi, source_ref=None, target_ref=None):
    orders = []
    for j in phi.orders:
        entries = []
        for inputs, image in phi.component(j).items():
            for y, c in image.items():
                entries.append([list(inputs), y, format_rational(c)])
        orders.append({'j': j, 'entries': entries})
    return {
        'kind': 'linf',
        'source': _reference(phi.source, source_ref),
        'target': _reference(phi.target, target_ref),
        'horizon': phi.horizon,
        'orders': orders,
    }


def linf_from_dict(data, base_dir=None, check=None):
    from .linf import LInfMorphism

    source = _resolve(_get(data, 'source', 'L-infinity morphism'), base_dir)
    target = _resolve(_get(data, 'target', 'L-infinity morphism'), base_dir)
    taylor = {}
    for block in _get(data, 'orders', 'L-infinity morphism'):
        j = int(_get(block, 'j', 'order block'))
        table = taylor.setdefault(j, {})
        for entry in _get(block, 'entries', 'order block'):
            try:
                inputs, y, c = entry
                key = tuple(str(n) for n in inputs)
            except (TypeError, ValueError):
                raise FormatError("malformed Taylor entry {!r}"
                                  .format(entry))
            image = table.setdefault(key, {})
            image[str(y)] = image.get(str(y), 0) + _rational(c)
    return LInfMorphism(source, target, taylor, data.get('horizon'),
                        check=check)


# reports and generic loading

def report_to_dict(report):
    return report.to_dict()


def load(path, check=None):
    """Load any file of a known ``kind``; returns ``(kind, object)``.

    Elements and paths are returned as raw data since they need an
    ambient algebra.
    """
    path = Path(path)
    data = read_json(path)
    kind = data.get('kind') if isinstance(data, dict) else None
    base_dir = path.parent
    logger.debug("loading %s (%s)", path, kind)
    if kind == 'dgla' or (kind is None and isinstance(data, dict)
                          and 'degrees' in data):
        return 'dgla', algebra_from_dict(data, check)
    if kind == 'morphism':
        return kind, morphism_from_dict(data, base_dir, check)
    if kind == 'linf':
        return kind, linf_from_dict(data, base_dir, check)
    if kind in ('element', 'path') or (isinstance(data, dict)
                                       and 'terms' in data):
        return kind or 'element', data
    raise FormatError("{}: unknown file kind {!r}".format(path, kind))


def load_algebra(path, check=None):
    return algebra_from_dict(read_json(path), check)


def load_morphism(path, check=None):
    return morphism_from_dict(read_json(path), Path(path).parent, check)


def load_linf(path, check=None):
    return linf_from_dict(read_json(path), Path(path).parent, check)
