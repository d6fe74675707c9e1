"""
The :mod:`mcdeform.fixtures` module gathers the bundled example algebras,
morphisms and elements, including deliberately broken algebras that
fail exactly one axiom each.

"""

from ._fixtures import (Fixture, FIXTURES, list_fixtures, get_fixture,
                        fixture_payload, emit_fixture)
