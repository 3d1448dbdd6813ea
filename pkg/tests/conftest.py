"""Shared instances and cached heavy computations for the test suite."""

from functools import cache

import pytest

from li2poly import constructors, faces, model


def unit_square() -> model.HPolytope:
    return model.parse_hrep("""4 2
1 0 1
0 1 1
-1 0 0
0 -1 0""")


def square_pyramid() -> model.HPolytope:
    # Apex (0,0,1) lies on four side facets: not simple.
    return model.parse_hrep("""5 3
0 0 -1 0
1 0 1 1
-1 0 1 1
0 1 1 1
0 -1 1 1""")


def simplex3() -> model.HPolytope:
    return model.parse_hrep("""4 3
-1 0 0 0
0 -1 0 0
0 0 -1 0
1 1 1 1""")


@cache
def cached_instance(family: str, n: int, d: int) -> model.HPolytope:
    if family == "pstar":
        return constructors.pstar(n, d)
    if family == "dualcyclic":
        return constructors.dual_cyclic(n, d)
    if family == "prism3":
        return constructors.prism3(n)
    raise ValueError(family)


@cache
def cached_lattice(family: str, n: int, d: int) -> list[faces.Face]:
    return faces.face_lattice(cached_instance(family, n, d))


@cache
def cached_f_vector(family: str, n: int, d: int) -> tuple[int, ...]:
    p = cached_instance(family, n, d)
    return faces.f_vector_from_lattice(p, cached_lattice(family, n, d))


@pytest.fixture
def square():
    return unit_square()


@pytest.fixture
def pyramid():
    return square_pyramid()
