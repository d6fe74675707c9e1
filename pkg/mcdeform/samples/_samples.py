import logging
from fractions import Fraction

import numpy as np

from ..core import kernel_basis
from ..deligne import lift_mc_one_order
from ..dgla import (DGLAMorphism, DGLieAlgebra, NilElement,
                    abelian_lie_algebra, affine_lie_algebra,
                    contractible_unit, current_algebra, exterior_algebra,
                    heisenberg_lie_algebra, sl2_lie_algebra,
                    square_zero_extension)
from ..gauge import GaugeElement, MCElement, af_action
from ..linf import homotopy_extension, sym_basis


logger = logging.getLogger(__name__)


def check_random_state(random_state=None):
    """Turn ``None``, an int or a ``RandomState`` into a ``RandomState``."""
    if isinstance(random_state, np.random.RandomState):
        return random_state
    return np.random.RandomState(seed=random_state)


def random_rational(random_state=None, bound=2, nonzero=False):
    """Small rational ``p/q`` with ``|p| <= bound`` and ``q`` in 1..2."""
    rs = check_random_state(random_state)
    while True:
        p = int(rs.randint(-bound, bound + 1))
        if p or not nonzero:
            return Fraction(p, int(rs.randint(1, 3)))


def random_element(ambient, degree, random_state=None, density=0.5,
                   bound=2, max_order=None):
    """Random element of ``m (x) g^degree`` with sparse small rational
    coefficients, supported in orders ``<= max_order``."""
    rs = check_random_state(random_state)
    max_order = ambient.order if max_order is None else max_order
    indices = ambient.base.space.indices(degree)
    terms = {}
    for m in ambient.context.monomials:
        if sum(m) > max_order:
            continue
        for i in indices:
            if rs.rand() < density:
                c = random_rational(rs, bound, nonzero=True)
                terms[(i, m)] = c
    return NilElement(ambient, degree, terms)


def random_gauge(ambient, random_state=None, **kwargs):
    return GaugeElement(random_element(ambient, 0, random_state, **kwargs))


def _random_cocycle_layer(ambient, j, rs, density):
    g = ambient.base
    indices = g.space.indices(1)
    basis = kernel_basis(g.matrix_d(1)) if indices else []
    terms = {}
    for m in ambient.context.layer(j):
        for z in basis:
            if rs.rand() >= density:
                continue
            c = random_rational(rs, nonzero=True)
            for k, v in enumerate(z):
                if v:
                    key = (indices[k], m)
                    terms[key] = terms.get(key, 0) + c * v
    return NilElement(ambient, 1, {k: v for k, v in terms.items() if v})


def random_mc(ambient, random_state=None, density=0.5, max_tries=5,
              gauge=True):
    """Random Maurer-Cartan element.

    Lifts order by order with random cocycle corrections and restarts
    when an obstruction is met. After ``max_tries`` failed attempts it
    falls back to ``0``. With ``gauge=True`` the result is moved by a
    random gauge element, so that it is generally not in Maurer-Cartan
    normal form.

    """
    rs = check_random_state(random_state)
    omega = None
    for attempt in range(max_tries):
        current = ambient.zero(1)
        for j in range(1, ambient.order + 1):
            correction = _random_cocycle_layer(ambient, j, rs, density)
            current = lift_mc_one_order(current, j, correction)
            if current is None:
                logger.debug("random_mc: obstructed at order %d "
                             "(attempt %d)", j, attempt)
                break
        if current is not None:
            omega = current
            break
    if omega is None:
        omega = ambient.zero(1)

    omega = MCElement(omega)
    if gauge:
        omega = af_action(random_gauge(ambient, rs, density=density / 2),
                          omega)
    return omega


def random_lie_algebra(random_state=None):
    """A small Lie algebra from a catalog, with a random structure scale."""
    rs = check_random_state(random_state)
    scale = random_rational(rs, nonzero=True)
    choice = int(rs.randint(0, 4))
    if choice == 0:
        return affine_lie_algebra(scale)
    if choice == 1:
        return heisenberg_lie_algebra(scale)
    if choice == 2:
        return sl2_lie_algebra()
    return abelian_lie_algebra(['x', 'y'])


def random_dga(random_state=None):
    """A small graded commutative DG algebra."""
    rs = check_random_state(random_state)
    choice = int(rs.randint(0, 4))
    if choice == 0:
        return exterior_algebra({'e': 1})
    if choice == 1:
        c1, c2 = random_rational(rs), random_rational(rs)
        differential = {}
        if c1:
            differential['e'] = {'ef': c1}
        if c2:
            differential['f'] = {'ef': c2}
        return exterior_algebra({'e': 1, 'f': 1}, differential)
    if choice == 3:
        # non-unit degree 0 part, so gauge elements need not be closed
        c = random_rational(rs, nonzero=True)
        return square_zero_extension({'p': 0, 'q': 1, 'w': 2},
                                     {'p': {'q': c}})
    return square_zero_extension({'e': 1, 'w': 2})


def random_dgla(random_state=None):
    """Current algebra of a random Lie algebra and a random DG algebra."""
    rs = check_random_state(random_state)
    lie = random_lie_algebra(rs)
    dga = random_dga(rs)
    return current_algebra(lie, dga,
                           name='{}_current'.format(lie.name or 'lie'))


def _degree_label(k):
    return 'm{}'.format(-k) if k < 0 else str(k)


def random_abelian_dgla(random_state=None, degrees=(-1, 0, 1, 2),
                        max_dim=2):
    """Random abelian DG Lie algebra.

    Each degree gets cycles ``z<k>_i`` and non-cycles ``n<k>_i``; the
    differential sends non-cycles of degree ``k`` to random combinations
    of cycles of degree ``k + 1``, so ``d^2 = 0``.

    """
    rs = check_random_state(random_state)
    cycles, others = {}, {}
    for k in degrees:
        label = _degree_label(k)
        cycles[k] = ['z{}_{}'.format(label, i)
                     for i in range(int(rs.randint(0, max_dim + 1)))]
        others[k] = ['n{}_{}'.format(label, i)
                     for i in range(int(rs.randint(0, max_dim + 1)))]
    if not any(cycles[k] or others[k] for k in degrees):
        cycles[1] = ['z1_0']

    differential = {}
    for k in degrees:
        targets = cycles.get(k + 1, [])
        for x in others[k]:
            image = {}
            for y in targets:
                c = random_rational(rs)
                if c:
                    image[y] = c
            if image:
                differential[x] = image
    space = {k: cycles[k] + others[k] for k in degrees
             if cycles[k] or others[k]}
    return DGLieAlgebra(space, differential, name='random_abelian')


def random_quasi_iso_pair(random_state=None):
    """Unit inclusion ``k (x) A -> k (x) (A (x) C)`` for a contractible
    ``C = Q (+) <a, b>`` with ``|a|`` random in ``{-1, 0, 1}``."""
    rs = check_random_state(random_state)
    lie = random_lie_algebra(rs)
    dga = random_dga(rs)
    a_degree = int(rs.randint(-1, 2))
    source = current_algebra(lie, dga, name='source')
    target = current_algebra(lie, dga.tensor(contractible_unit(a_degree)),
                             name='target')
    images = {x: {x: 1} for x in source.space.names}
    return DGLAMorphism.from_images(source, target, images)


def random_homotopy(source, random_state=None, density=0.3, max_weight=2):
    """Random ``{(x_1, ..., x_j): c}`` on canonical monomials of weight
    ``1..max_weight``, with at least one entry of weight ``max_weight``
    when such monomials exist."""
    rs = check_random_state(random_state)
    name = source.space.name
    homotopy = {}
    for n in range(1, max_weight + 1):
        words = sym_basis(source.space, n)
        for word in words:
            if rs.rand() < density:
                homotopy[tuple(name(i) for i in word)] = \
                    random_rational(rs, nonzero=True)
        if n == max_weight and words and \
                not any(len(w) == n for w in homotopy):
            word = words[int(rs.randint(len(words)))]
            homotopy[tuple(name(i) for i in word)] = \
                random_rational(rs, nonzero=True)
    return homotopy


def random_nonstrict_linf(random_state=None, source=None, horizon=3,
                          density=0.3, max_weight=2):
    """Random L-infinity quasi-isomorphism ``g -> g x C``, non-strict
    whenever ``max_weight >= 2``.

    ``g`` defaults to :func:`random_dgla`; see
    :func:`~mcdeform.linf.homotopy_extension` for ``C``.
    """
    rs = check_random_state(random_state)
    if source is None:
        source = random_dgla(rs)
    homotopy = random_homotopy(source, rs, density, max_weight)
    return homotopy_extension(source, homotopy, horizon=horizon, check=False)
