"""Truncated symmetric coalgebra ``Sym(g[1])`` and its coderivation."""

import logging
from fractions import Fraction
from itertools import combinations_with_replacement

from ..base import Check, Report, run_checks
from ..dgla import DGLieAlgebra
from ..exceptions import ContextMismatchError


logger = logging.getLogger(__name__)


def shifted_parity(space, index):
    """Parity of ``s x`` in ``g[1]`` for a basis vector ``x``."""
    return (space.degree(index) - 1) % 2


def koszul_sort(space, word):
    """Bring a word of basis indices into canonical (ascending) order.

    Returns
    -------
    sign : int
        Koszul sign of the reordering in ``Sym(g[1])``; ``0`` if an odd
        factor repeats, in which case the monomial vanishes.
    canonical : tuple

    """
    word = list(word)
    sign = 1
    for k in range(1, len(word)):
        j = k
        while j > 0 and word[j - 1] > word[j]:
            if shifted_parity(space, word[j - 1]) and \
                    shifted_parity(space, word[j]):
                sign = -sign
            word[j - 1], word[j] = word[j], word[j - 1]
            j -= 1
    for a, b in zip(word, word[1:]):
        if a == b and shifted_parity(space, a):
            return 0, tuple(word)
    return sign, tuple(word)


def permutation_sign(parities, order):
    """Koszul sign of listing factors with the given parities in
    ``order``."""
    sign = 1
    for p, a in enumerate(order):
        for b in order[p + 1:]:
            if b < a and parities[a] and parities[b]:
                sign = -sign
    return sign


def sym_basis(space, weight):
    """Canonical monomials of ``Sym^weight(g[1])``."""
    out = []
    for word in combinations_with_replacement(range(len(space)), weight):
        if all(not (a == b and shifted_parity(space, a))
               for a, b in zip(word, word[1:])):
            out.append(word)
    return out


def _add_to(acc, key, value):
    v = acc.get(key, 0) + value
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class BarElement:
    """Element of ``Sym^(<= weight)(g[1])``.

    Parameters
    ----------
    base : DGLieAlgebra
    terms : dict, optional
        ``{word: c}`` where a word is a tuple of basis names or indices.
        Words are canonicalized with their Koszul sign on input.
    weight : int, optional
        Truncation weight; longer words are dropped. Defaults to the
        longest word given.

    """

    def __init__(self, base, terms=None, weight=None):
        self.base = base
        space = base.space
        raw = {}
        for word, c in (terms or {}).items():
            word = tuple(space.index(w) if isinstance(w, str) else int(w)
                         for w in word)
            raw[word] = Fraction(c)
        if weight is None:
            weight = max((len(w) for w in raw), default=0)
        self.weight = weight
        self._terms = {}
        for word, c in raw.items():
            if len(word) > weight:
                continue
            sign, canon = koszul_sort(space, word)
            if sign:
                _add_to(self._terms, canon, sign * c)

    @classmethod
    def _from_canonical(cls, base, terms, weight):
        obj = cls.__new__(cls)
        obj.base = base
        obj.weight = weight
        obj._terms = {k: v for k, v in terms.items()
                      if v and len(k) <= weight}
        return obj

    @classmethod
    def monomial(cls, base, names, weight=None):
        return cls(base, {tuple(names): 1}, weight)

    def __repr__(self):
        return 'BarElement({})'.format(self.format())

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, BarElement):
            return NotImplemented
        return self.base == other.base and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def _check(self, other):
        if self.base != other.base:
            raise ContextMismatchError("bar elements over different algebras")

    def __add__(self, other):
        self._check(other)
        terms = dict(self._terms)
        for k, v in other._terms.items():
            _add_to(terms, k, v)
        return BarElement._from_canonical(self.base, terms,
                                          max(self.weight, other.weight))

    def __neg__(self):
        return BarElement._from_canonical(
            self.base, {k: -v for k, v in self._terms.items()}, self.weight)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return BarElement._from_canonical(
            self.base, {k: v * scalar for k, v in self._terms.items()},
            self.weight)

    __rmul__ = __mul__

    def component(self, j):
        """The weight ``j`` component."""
        return BarElement._from_canonical(
            self.base, {k: v for k, v in self._terms.items() if len(k) == j},
            self.weight)

    def format(self):
        if not self._terms:
            return '0'
        name = self.base.space.name
        return ' + '.join('{}*{}'.format(c, '.'.join('s' + name(i)
                                                     for i in word) or '1')
                          for word, c in sorted(self._terms.items()))


class BarCoderivation:
    """The coderivation ``Q`` of ``Sym(g[1])`` encoding ``d`` and ``[-, -]``.

    ``Q`` is determined by its corestrictions ``Q1(s x) = -s dx`` and
    ``Q2(s x . s y) = (-1)^|x| s[x, y]``. It never raises the weight, so
    its restriction to a truncation is exact.

    """

    def __init__(self, base, weight=3):
        if not isinstance(base, DGLieAlgebra):
            raise TypeError("expected a DGLieAlgebra")
        self.base = base
        self.weight = weight

    def __repr__(self):
        return 'BarCoderivation({!r}, weight={})'.format(self.base,
                                                         self.weight)

    def q1(self, i):
        return {j: -c for j, c in self.base.d_basis(i).items()}

    def q2(self, i, j):
        sign = -1 if self.base.space.degree(i) % 2 else 1
        return {k: sign * c for k, c in self.base.bracket_basis(i, j).items()}

    def apply_word(self, word):
        """``Q`` of a canonical monomial, as ``{canonical word: c}``."""
        space = self.base.space
        par = [shifted_parity(space, i) for i in word]
        out = {}

        before = 0
        for p, i in enumerate(word):
            sign = -1 if before % 2 else 1
            for j, c in self.q1(i).items():
                s, canon = koszul_sort(space, word[:p] + (j,) + word[p + 1:])
                if s:
                    _add_to(out, canon, s * sign * c)
            before += par[p]

        for p in range(len(word)):
            for q in range(p + 1, len(word)):
                image = self.q2(word[p], word[q])
                if not image:
                    continue
                sign = permutation_sign(
                    par, [p, q] + [r for r in range(len(word))
                                   if r not in (p, q)])
                rest = tuple(word[r] for r in range(len(word))
                             if r not in (p, q))
                for k, c in image.items():
                    s, canon = koszul_sort(space, (k,) + rest)
                    if s:
                        _add_to(out, canon, s * sign * c)
        return out

    def __call__(self, element):
        if element.base != self.base:
            raise ContextMismatchError("bar element over another algebra")
        out = {}
        for word, c in element.terms.items():
            for k, v in self.apply_word(word).items():
                _add_to(out, k, c * v)
        return BarElement._from_canonical(self.base, out, element.weight)

    def check_square_zero(self):
        """``Q^2 = 0`` on every basis monomial up to the weight."""
        name = self.base.space.name

        def weight_checks(w):
            for word in sym_basis(self.base.space, w):
                once = BarElement._from_canonical(
                    self.base, self.apply_word(word), w)
                if not self(once).is_zero():
                    return [Check('weight {}'.format(w), False,
                                  tuple(name(i) for i in word))]
            return [Check('weight {}'.format(w), True)]

        report = Report('bar coderivation')
        report.extend(run_checks(weight_checks, range(1, self.weight + 1)))
        return report


def bar_coderivation(g, weight=3):
    """The degree one coderivation of ``Sym^(<= weight)(g[1])``."""
    return BarCoderivation(g, weight)
