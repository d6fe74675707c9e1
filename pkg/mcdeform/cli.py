"""Command line interface: ``mcdeform <command> ...``.

Exit codes: ``0`` success, ``1`` failed validation, ``2`` unreadable or
malformed input, ``3`` violated precondition, ``4`` obstruction found
(the class is printed as payload).

"""

import argparse
import logging
import sys
from pathlib import Path

from . import io
from .deligne import (Connected, ObstructedAtOrder, lift_mc, reduced_equal,
                      stabilizer_exp, transfer_mc)
from .dgla import tensor_with_m, validate_dgla, validate_morphism
from .exceptions import (AxiomError, ContextMismatchError, DegreeError,
                         DimensionError, FormatError, NotMaurerCartanError,
                         ObstructionError, PreconditionError)
from .fixtures import FIXTURES, emit_fixture, list_fixtures
from .gauge import (GaugeElement, MCElement, af_action, bch, curvature,
                    integrate_mc_path, path_from_gauge)
from .options import OPTIONS, set_options


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FORMAT = 2
EXIT_PRECONDITION = 3
EXIT_OBSTRUCTION = 4


# output

def _emit(args, payload, lines):
    if args.json:
        sys.stdout.write(io.dumps(payload))
    else:
        for line in lines:
            print(line)


def _element_payload(x):
    return io.element_to_dict(x)


def _element_text(label, x):
    return '{}: {}'.format(label, x.ambient.format(x))


def _report_result(args, reports):
    ok = all(r.ok for r in reports)
    payload = {'ok': ok, 'reports': [r.to_dict() for r in reports]}
    _emit(args, payload, [r.summary() for r in reports])
    return EXIT_OK if ok else EXIT_INVALID


# loading

def _element_data(path):
    data = io.read_json(path)
    if not isinstance(data, dict) or 'terms' not in data:
        raise FormatError("{}: not an element file".format(path))
    return data


def _ambient(args, g, data):
    return io.ambient_for(g, data, args.params, args.order)


def _elements(args, g, paths, degree=None):
    """Elements from files, all in the ambient of the first one."""
    datas = [_element_data(p) for p in paths]
    ambient = _ambient(args, g, datas[0])
    out = [io.element_from_dict(d, ambient) for d in datas]
    if degree is not None:
        for p, x in zip(paths, out):
            if x.degree != degree:
                raise DegreeError("{}: expected degree {}, got {}"
                                  .format(p, degree, x.degree))
    return ambient, out


# validate

def cmd_validate(args):
    reports = []
    with set_options(check_axioms=False):
        for path in args.paths:
            kind, obj = io.load(path)
            if kind == 'dgla':
                reports.append(validate_dgla(obj))
            elif kind == 'morphism':
                reports.append(validate_dgla(obj.source))
                reports.append(validate_dgla(obj.target))
                reports.append(validate_morphism(obj))
            elif kind == 'linf':
                from .linf import validate_linf

                reports.append(validate_dgla(obj.source))
                reports.append(validate_dgla(obj.target))
                reports.append(validate_linf(obj, obj.horizon))
            else:
                if 'algebra' not in obj:
                    raise FormatError("{}: element files need an inline "
                                      "'algebra' to be validated alone"
                                      .format(path))
                g = io.algebra_from_dict(obj['algebra'])
                report = validate_dgla(g)
                x = io.element_from_dict(obj, _ambient(args, g, obj))
                report.add('parses', True)
                report.add('homogeneous_degree', x.degree == obj['degree'])
                reports.append(report)
    return _report_result(args, reports)


# mc

def cmd_mc_curvature(args):
    g = io.load_algebra(args.algebra)
    _, (x,) = _elements(args, g, [args.element], degree=1)
    cur = curvature(x)
    payload = {'curvature': _element_payload(cur), 'mc': cur.is_zero()}
    _emit(args, payload, [_element_text('curvature', cur),
                          'Maurer-Cartan: {}'.format(cur.is_zero())])
    return EXIT_OK


def cmd_mc_lift(args):
    g = io.load_algebra(args.algebra)
    data = _element_data(args.element)
    to_order = args.order if args.order is not None else \
        OPTIONS['default_order']
    ambient = io.ambient_for(g, data, args.params, to_order)
    x = io.element_from_dict(data, ambient)
    from_order = args.from_order
    if from_order is None:
        from_order = min(int(data.get('order', 1)), to_order)
    omega = lift_mc(x, from_order, to_order)
    if not curvature(omega.value).is_zero():
        raise AssertionError("lift failed its re-verification")
    _emit(args, {'status': 'lifted', 'from_order': from_order,
                 'element': _element_payload(omega.value)},
          [_element_text('lift', omega.value)])
    return EXIT_OK


def cmd_mc_connect(args):
    from .deligne import connect_greedy

    g = io.load_algebra(args.algebra)
    _, (x, y) = _elements(args, g, [args.element, args.other], degree=1)
    result = connect_greedy(x, y)
    if isinstance(result, Connected):
        g_ = result.witness
        if af_action(g_, MCElement(x)).value != y:
            raise AssertionError("witness failed its re-verification")
        _emit(args, {'status': 'connected',
                     'gauge': _element_payload(g_.log)},
              [_element_text('gauge', g_.log)])
        return EXIT_OK
    status = 'obstructed' if isinstance(result, ObstructedAtOrder) \
        else 'inconclusive'
    _emit(args, {'status': status, 'order': result.order,
                 'obstruction': result.obstruction.to_dict()},
          ['{} at order {}: {}'.format(status, result.order,
                                       result.obstruction.format())])
    return EXIT_OBSTRUCTION


def cmd_mc_stabilizer(args):
    g = io.load_algebra(args.algebra)
    _, (x,) = _elements(args, g, [args.element], degree=1)
    stab = stabilizer_exp(x)
    payload = {'dimension': stab.dimension,
               'basis': [_element_payload(k) for k in stab.basis]}
    lines = ['reduced stabilizer of dimension {}'.format(stab.dimension)]
    lines += [_element_text('kappa_{}'.format(i), k)
              for i, k in enumerate(stab.basis)]
    _emit(args, payload, lines)
    return EXIT_OK


# gauge

def cmd_gauge_act(args):
    g = io.load_algebra(args.algebra)
    ambient, (gamma,) = _elements(args, g, [args.gauge], degree=0)
    x = io.element_from_dict(_element_data(args.element), ambient)
    moved = af_action(GaugeElement(gamma), x)
    mc = curvature(x).is_zero()
    if mc and not curvature(moved).is_zero():
        raise AssertionError("gauge action lost the MC equation")
    _emit(args, {'element': _element_payload(moved), 'mc': mc},
          [_element_text('result', moved)])
    return EXIT_OK


def cmd_gauge_compose(args):
    g = io.load_algebra(args.algebra)
    _, (g1, g2) = _elements(args, g, [args.first, args.second], degree=0)
    log = bch(g1, g2)
    _emit(args, {'gauge': _element_payload(log)},
          [_element_text('product', log)])
    return EXIT_OK


def cmd_gauge_reduced_equal(args):
    g = io.load_algebra(args.algebra)
    ambient, (g1, g2) = _elements(args, g, [args.first, args.second],
                                  degree=0)
    omega = io.element_from_dict(_element_data(args.element), ambient)
    equal = reduced_equal(GaugeElement(g1), GaugeElement(g2), omega)
    _emit(args, {'reduced_equal': equal},
          ['reduced equal: {}'.format(equal)])
    return EXIT_OK


def cmd_gauge_path(args):
    g = io.load_algebra(args.algebra)
    ambient, (gamma,) = _elements(args, g, [args.gauge], degree=0)
    omega = io.element_from_dict(_element_data(args.element), ambient)
    path = path_from_gauge(gamma, omega)
    lines = [_element_text('omega1[t^{}]'.format(i), c)
             for i, c in enumerate(path.one_part.coefficients)]
    lines += [_element_text('omega0[t^{}]'.format(i), c)
              for i, c in enumerate(path.form_part.coefficients)]
    _emit(args, io.path_to_dict(path), lines)
    return EXIT_OK


def cmd_gauge_integrate_path(args):
    g = io.load_algebra(args.algebra)
    data = io.read_json(args.path)
    ambient = _ambient(args, g, data)
    path = io.path_from_dict(data, ambient)
    h = integrate_mc_path(path)
    _emit(args, {'gauge': _element_payload(h.log)},
          [_element_text('gauge', h.log)])
    return EXIT_OK


# transfer

def cmd_transfer(args):
    phi = io.load_morphism(args.morphism)
    data = _element_data(args.mc)
    ambient_h = _ambient(args, phi.target, data)
    chi = io.element_from_dict(data, ambient_h)
    result = transfer_mc(phi, chi)
    image = result.omega.ambient.apply_morphism(phi, result.omega.value,
                                                ambient_h)
    if af_action(result.gauge, image) != chi:
        raise AssertionError("transfer witness failed its re-verification")
    _emit(args, {'omega': _element_payload(result.omega.value),
                 'gauge': _element_payload(result.gauge.log)},
          [_element_text('omega', result.omega.value),
           _element_text('gauge', result.gauge.log)])
    return EXIT_OK


# groupoid

def _sampled_mc(args, ambient, paths):
    from .samples import check_random_state, random_mc

    if paths:
        return [MCElement(x) for x in
                _elements(args, ambient.base, paths, degree=1)[1]]
    rs = check_random_state(args.seed)
    return [random_mc(ambient, rs) for _ in range(args.samples)]


def _sampled_gauges(args, ambient, paths):
    from .samples import check_random_state, random_gauge

    if paths:
        return [GaugeElement(x) for x in
                _elements(args, ambient.base, paths, degree=0)[1]]
    rs = check_random_state(None if args.seed is None else args.seed + 1)
    return [random_gauge(ambient, rs) for _ in range(args.samples)]


def _groupoid_ambient(args, g):
    data = _element_data(args.elements[0]) if args.elements else {}
    return _ambient(args, g, data)


def cmd_groupoid_pi(args):
    from .twogroupoid import pi0_evidence, pi1_reduced, pi2

    g = io.load_algebra(args.algebra)
    ambient = _groupoid_ambient(args, g)
    samples = _sampled_mc(args, ambient, args.elements)
    if args.level == 0:
        evidence = pi0_evidence(samples)
        _emit(args, {'level': 0, **evidence.to_dict()},
              ['classes: {}'.format(evidence.classes),
               'obstructed pairs: {}'.format(evidence.obstructed),
               'inconclusive pairs: {}'.format(evidence.inconclusive)])
        return EXIT_OK
    groups = [pi1_reduced(x) if args.level == 1 else pi2(x)
              for x in samples]
    payload = {'level': args.level,
               'groups': [{'dimension': grp.dimension,
                           'basis': [_element_payload(b)
                                     for b in grp.basis]}
                          for grp in groups]}
    lines = ['sample {}: pi_{} of dimension {}'.format(i, args.level,
                                                       grp.dimension)
             for i, grp in enumerate(groups)]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_groupoid_crossed_check(args):
    from .twogroupoid import build_deligne_crossed, crossed_check_report

    g = io.load_algebra(args.algebra)
    ambient = _groupoid_ambient(args, g)
    samples = _sampled_mc(args, ambient, args.elements)
    gauges = _sampled_gauges(args, ambient, args.gauges)
    data = build_deligne_crossed(ambient, samples, gauges, check=False)
    return _report_result(args, [crossed_check_report(data)])


def cmd_groupoid_weak_equiv(args):
    from .samples import check_random_state, random_mc
    from .twogroupoid import weak_equiv_evidence

    phi = io.load_morphism(args.morphism)
    if args.elements:
        data = _element_data(args.elements[0])
        ambient = _ambient(args, phi.source, data)
        samples = [MCElement(x) for x in
                   _elements(args, phi.source, args.elements, 1)[1]]
    else:
        ambient = _ambient(args, phi.source, {})
        rs = check_random_state(args.seed)
        samples = [random_mc(ambient, rs) for _ in range(args.samples)]
    ambient_h = tensor_with_m(phi.target, ambient.context)
    rs = check_random_state(None if args.seed is None else args.seed + 1)
    targets = [random_mc(ambient_h, rs) for _ in range(args.samples)]
    return _report_result(args, [weak_equiv_evidence(phi, samples,
                                                     targets)])


# linf

def cmd_linf_validate(args):
    from .linf import validate_linf

    with set_options(check_axioms=False):
        phi = io.load_linf(args.linf)
    weight = args.weight if args.weight is not None else phi.horizon
    return _report_result(args, [validate_linf(phi, weight)])


def cmd_linf_push(args):
    from .linf import mc_pushforward

    phi = io.load_linf(args.linf)
    _, (x,) = _elements(args, phi.source, [args.element], degree=1)
    pushed = mc_pushforward(phi, x)
    _emit(args, {'element': _element_payload(pushed.value)},
          [_element_text('pushforward', pushed.value)])
    return EXIT_OK


def cmd_linf_respect(args):
    from .linf import gauge_respect, mc_pushforward

    phi = io.load_linf(args.linf)
    ambient, (x,) = _elements(args, phi.source, [args.element], degree=1)
    gamma = io.element_from_dict(_element_data(args.gauge), ambient)
    h = gauge_respect(phi, x, gamma)
    start = mc_pushforward(phi, x)
    end = mc_pushforward(phi, af_action(GaugeElement(gamma), MCElement(x)))
    if af_action(h, start) != end:
        raise AssertionError("gauge witness failed its re-verification")
    _emit(args, {'gauge': _element_payload(h.log)},
          [_element_text('gauge', h.log)])
    return EXIT_OK


def cmd_linf_compose(args):
    from .linf import compose_linf

    phi = io.load_linf(args.first)
    xi = io.load_linf(args.second)
    composite = compose_linf(phi, xi, args.weight)
    payload = io.linf_to_dict(composite)
    _emit(args, payload, [io.dumps(payload).rstrip()])
    return EXIT_OK


def cmd_linf_correct(args):
    from .linf import correct_weight_two

    with set_options(check_axioms=False):
        phi = io.load_morphism(args.morphism)
    images = {}
    for i in range(len(phi.source.space)):
        image = phi.basis_image(i)
        images[phi.source.space.name(i)] = {
            phi.target.space.name(k): c for k, c in image.items()}
    result = correct_weight_two(phi.source, phi.target, images)
    if result is None:
        _emit(args, {'status': 'no_correction'},
              ['no weight two correction exists'])
        return EXIT_INVALID
    payload = io.linf_to_dict(result)
    _emit(args, payload, [io.dumps(payload).rstrip()])
    return EXIT_OK


# examples

def cmd_examples_list(args):
    names = list_fixtures()
    payload = {'examples': [{'name': n, 'kind': FIXTURES[n].kind,
                             'valid': FIXTURES[n].valid,
                             'description': FIXTURES[n].description}
                            for n in names]}
    _emit(args, payload, ['{:<22} {:<9} {}'.format(
        n, FIXTURES[n].kind, FIXTURES[n].description) for n in names])
    return EXIT_OK


def cmd_examples_emit(args):
    names = args.names or list_fixtures()
    output = Path(args.output)
    paths = [emit_fixture(n, output) for n in names]
    _emit(args, {'written': [str(p) for p in paths]},
          [str(p) for p in paths])
    return EXIT_OK


# parser

def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--order', type=int, default=None,
                        help='truncation order N (default: element file, '
                             'else {})'.format(OPTIONS['default_order']))
    common.add_argument('--params', type=int, default=None,
                        help='number of formal parameters k')
    common.add_argument('--json', action='store_true',
                        help='machine readable output')
    common.add_argument('--seed', type=int, default=None,
                        help='seed for sampled data')
    common.add_argument('--jobs', type=int, default=1,
                        help='parallel workers for sample checks')
    common.add_argument('--verbose', '-v', action='store_true')
    return common


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog='mcdeform', parents=[common],
        description='Exact deformation theory over truncated parameter '
                    'rings: Maurer-Cartan elements, gauge actions, the '
                    'Deligne 2-groupoid and L-infinity morphisms.')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    def leaf(group, name, func, help_):
        p = group.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = leaf(sub, 'validate', cmd_validate,
             'validate algebra, morphism and L-infinity files')
    p.add_argument('paths', nargs='+')

    mc = sub.add_parser('mc', help='Maurer-Cartan elements')
    mcs = mc.add_subparsers(dest='action')
    mcs.required = True
    p = leaf(mcs, 'curvature', cmd_mc_curvature, 'curvature of an element')
    p.add_argument('algebra')
    p.add_argument('element')
    p = leaf(mcs, 'lift', cmd_mc_lift, 'lift an MC element order by order')
    p.add_argument('algebra')
    p.add_argument('element')
    p.add_argument('--from-order', type=int, default=None)
    p = leaf(mcs, 'connect', cmd_mc_connect,
             'search a gauge element between two MC elements')
    p.add_argument('algebra')
    p.add_argument('element')
    p.add_argument('other')
    p = leaf(mcs, 'stabilizer', cmd_mc_stabilizer,
             'reduced stabilizer of an MC element')
    p.add_argument('algebra')
    p.add_argument('element')

    gauge = sub.add_parser('gauge', help='gauge group')
    gs = gauge.add_subparsers(dest='action')
    gs.required = True
    p = leaf(gs, 'act', cmd_gauge_act, 'affine gauge action')
    p.add_argument('algebra')
    p.add_argument('gauge')
    p.add_argument('element')
    p = leaf(gs, 'compose', cmd_gauge_compose, 'BCH product of two logs')
    p.add_argument('algebra')
    p.add_argument('first')
    p.add_argument('second')
    p = leaf(gs, 'reduced-equal', cmd_gauge_reduced_equal,
             'compare two gauge elements in the reduced groupoid')
    p.add_argument('algebra')
    p.add_argument('first')
    p.add_argument('second')
    p.add_argument('element')
    p = leaf(gs, 'path', cmd_gauge_path, 'MC path of a gauge element')
    p.add_argument('algebra')
    p.add_argument('gauge')
    p.add_argument('element')
    p = leaf(gs, 'integrate-path', cmd_gauge_integrate_path,
             'gauge element joining the ends of an MC path')
    p.add_argument('algebra')
    p.add_argument('path')

    p = leaf(sub, 'transfer', cmd_transfer,
             'transfer an MC element along a quasi-isomorphism')
    p.add_argument('--morphism', required=True)
    p.add_argument('--mc', required=True)

    grp = sub.add_parser('groupoid', help='Deligne 2-groupoid')
    grs = grp.add_subparsers(dest='action')
    grs.required = True
    p = leaf(grs, 'pi', cmd_groupoid_pi, 'homotopy groups on samples')
    p.add_argument('algebra')
    p.add_argument('elements', nargs='*')
    p.add_argument('--level', type=int, choices=(0, 1, 2), default=0)
    p.add_argument('--samples', type=int, default=3)
    p = leaf(grs, 'crossed-check', cmd_groupoid_crossed_check,
             'check the crossed groupoid and 2-groupoid axioms')
    p.add_argument('algebra')
    p.add_argument('elements', nargs='*')
    p.add_argument('--gauges', nargs='*', default=[])
    p.add_argument('--samples', type=int, default=2)
    p = leaf(grs, 'weak-equiv', cmd_groupoid_weak_equiv,
             'evidence that a quasi-isomorphism is a weak equivalence')
    p.add_argument('morphism')
    p.add_argument('elements', nargs='*')
    p.add_argument('--samples', type=int, default=2)

    linf = sub.add_parser('linf', help='L-infinity morphisms')
    ls = linf.add_subparsers(dest='action')
    ls.required = True
    p = leaf(ls, 'validate', cmd_linf_validate, 'check the L-infinity '
             'relations')
    p.add_argument('linf')
    p.add_argument('--weight', type=int, default=None)
    p = leaf(ls, 'push', cmd_linf_push, 'push an MC element forward')
    p.add_argument('linf')
    p.add_argument('element')
    p = leaf(ls, 'respect', cmd_linf_respect,
             'push a gauge equivalence forward')
    p.add_argument('linf')
    p.add_argument('element')
    p.add_argument('gauge')
    p = leaf(ls, 'compose', cmd_linf_compose, 'compose two morphisms')
    p.add_argument('first')
    p.add_argument('second')
    p.add_argument('--weight', type=int, default=None)
    p = leaf(ls, 'correct', cmd_linf_correct,
             'solve for a weight two correction of a chain map')
    p.add_argument('morphism')

    ex = sub.add_parser('examples', help='bundled examples')
    exs = ex.add_subparsers(dest='action')
    exs.required = True
    leaf(exs, 'list', cmd_examples_list, 'list bundled examples')
    p = leaf(exs, 'emit', cmd_examples_emit, 'write bundled examples')
    p.add_argument('names', nargs='*')
    p.add_argument('--output', '-o', default='.')
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(level=logging.DEBUG if args.verbose
                        else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')

    options = {}
    if args.jobs and args.jobs > 1:
        options = {'use_dask': True, 'num_workers': args.jobs}
    if args.order is not None and args.order < 1:
        parser.error('--order must be positive')

    try:
        with set_options(**options):
            return args.func(args)
    except ObstructionError as exc:
        payload = {'status': 'obstructed', 'message': str(exc)}
        if exc.obstruction is not None:
            payload['obstruction'] = exc.obstruction.to_dict()
        _emit(args, payload, [str(exc)])
        return EXIT_OBSTRUCTION
    except AxiomError as exc:
        reports = [exc.report] if exc.report is not None else []
        if reports:
            _report_result(args, reports)
        print('error: {}'.format(exc), file=sys.stderr)
        return EXIT_INVALID
    except (FormatError, OSError) as exc:
        print('error: {}'.format(exc), file=sys.stderr)
        return EXIT_FORMAT
    except (PreconditionError, NotMaurerCartanError, DegreeError,
            ContextMismatchError, DimensionError) as exc:
        print('error: {}'.format(exc), file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == '__main__':
    sys.exit(main())
