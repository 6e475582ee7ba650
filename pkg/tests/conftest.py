"""Shared fixtures: small model polytopes used across the suite."""

from fractions import Fraction

import pytest

from dingstab.polytope import VPolytope, from_vertices

# Moment polytope of the projective bundle fourfold used as the worked
# golden example throughout the suite (volume 62/3, extremal data below).
D6_VERTICES = [
    (-1, -1, -1, -1), (-1, -1, -1, 1), (-1, -1, 0, -1), (-1, -1, 2, 1),
    (-1, 1, -1, -1), (-1, 1, 0, -1), (-1, 3, -1, 1), (-1, 3, 2, 1),
    (1, -1, -1, -1), (1, -1, 0, -1), (3, -1, -1, 1), (3, -1, 2, 1),
]

D6_DUAL_VERTICES = [
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (0, 0, 0, -1), (-1, -1, 0, 1), (0, 0, -1, 1),
]


@pytest.fixture(scope="session")
def d6() -> VPolytope:
    return from_vertices(D6_VERTICES)


@pytest.fixture(scope="session")
def square() -> VPolytope:
    return from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1)])


@pytest.fixture(scope="session")
def p2_moment() -> VPolytope:
    """Moment polytope of the projective plane (anticanonical)."""
    return from_vertices([(2, -1), (-1, 2), (-1, -1)])


def frac_vec(entries):
    return tuple(Fraction(x) for x in entries)
