"""Base classes."""

from dataclasses import dataclass, field

from .options import OPTIONS


@dataclass(frozen=True)
class Check:
    """Outcome of one named check.

    ``witness`` identifies the failing input (basis names, sample index,
    monomial, ...) and is ``None`` for passing checks.
    """
    name: str
    passed: bool
    witness: object = None
    detail: str = ''

    def to_dict(self):
        return {'name': self.name, 'passed': self.passed,
                'witness': _jsonable(self.witness), 'detail': self.detail}


@dataclass
class Report:
    """A list of checks. Truthy iff every check passed."""
    subject: str
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.ok

    def add(self, name, passed, witness=None, detail=''):
        self.checks.append(Check(name, bool(passed),
                                 None if passed else witness, detail))
        return self

    def extend(self, checks):
        self.checks.extend(checks)
        return self

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def failed_names(self):
        return sorted({c.name for c in self.failures})

    def first_failure(self):
        failures = self.failures
        return failures[0] if failures else None

    def to_dict(self):
        return {'subject': self.subject, 'ok': self.ok,
                'checks': [c.to_dict() for c in self.checks]}

    def summary(self):
        lines = ['{}: {}'.format(self.subject, 'ok' if self.ok else 'FAILED')]
        for c in self.checks:
            status = 'ok' if c.passed else 'FAILED'
            line = '  {} {}'.format(c.name, status)
            if not c.passed and c.witness is not None:
                line += ' (witness: {})'.format(c.witness)
            if c.detail:
                line += ' - ' + c.detail
            lines.append(line)
        return '\n'.join(lines)


def _jsonable(value):
    if value is None or isinstance(value, (str, int, float, bool)):
        return value
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


def run_checks(func, items):
    """Apply ``func`` to every item, optionally in parallel using dask.

    ``func`` must return a list of :class:`Check`. Results are returned
    flattened, in the order of ``items``.

    """
    items = list(items)

    if OPTIONS['use_dask'] and items:
        import dask
        import dask.bag as db

        npartitions = min(len(items), OPTIONS['num_workers'] or 100)
        b = db.from_sequence(items, npartitions=npartitions)
        dlyd = b.map(func).to_delayed()

        kwargs = {}
        if OPTIONS['num_workers']:
            kwargs['num_workers'] = OPTIONS['num_workers']
        res = dask.compute(*dlyd, **kwargs)
        # one list per partition, each holding one list of checks per item
        res = [item for sublist in res for item in sublist]

    else:
        res = [func(item) for item in items]

    return [check for checks in res for check in checks]


class BaseCrossedGroupoid:
    """Base class for crossed groupoids.

    A crossed groupoid is a groupoid ``G`` together with groups ``N(x)``
    for each object ``x``, an action ``twist(f, a)`` of arrows
    ``f: x -> y`` sending ``N(x)`` to ``N(y)``, and a feedback
    homomorphism ``feedback(a)`` from ``N(x)`` to the automorphisms of
    ``x`` in ``G``.

    Subclasses implement the underscored hooks. Only finite samples of
    objects, arrows and group elements are ever enumerated.

    """

    def objects(self):
        """Returns the sampled objects."""
        return list(self._objects())

    def _objects(self):
        raise NotImplementedError()

    def arrows(self):
        """Returns the sampled arrows."""
        return list(self._arrows())

    def _arrows(self):
        raise NotImplementedError()

    def arrows_from(self, x):
        """Returns sampled arrows out of ``x``."""
        return [f for f in self.arrows()
                if self.objects_equal(self.source(f), x)]

    def cells(self, x):
        """Returns sampled elements of ``N(x)``."""
        return list(self._cells(x))

    def _cells(self, x):
        raise NotImplementedError()

    def source(self, f):
        raise NotImplementedError()

    def target(self, f):
        raise NotImplementedError()

    def compose(self, g, f):
        """Returns ``g o f`` (``f`` first)."""
        raise NotImplementedError()

    def inverse(self, f):
        raise NotImplementedError()

    def identity(self, x):
        raise NotImplementedError()

    def arrows_equal(self, f, g):
        raise NotImplementedError()

    def objects_equal(self, x, y):
        raise NotImplementedError()

    def n_multiply(self, a, b):
        """Returns the product ``a b`` in ``N(x)``."""
        raise NotImplementedError()

    def n_inverse(self, a):
        raise NotImplementedError()

    def n_identity(self, x):
        raise NotImplementedError()

    def n_equal(self, a, b):
        raise NotImplementedError()

    def n_base(self, a):
        """Returns the object ``x`` such that ``a`` lies in ``N(x)``."""
        raise NotImplementedError()

    def twist(self, f, a):
        """Action of the arrow ``f: x -> y`` sending ``N(x)`` to ``N(y)``."""
        raise NotImplementedError()

    def feedback(self, a):
        """Feedback ``D(a)``, an automorphism of ``n_base(a)``."""
        raise NotImplementedError()
