"""Shared fixtures: the objects every test file keeps rebuilding.

Everything here is cheap (the whole pipeline runs in well under a
second) but session scope keeps the suite snappy and guarantees all
tests look at the same instances.
"""

import pytest

from chiralcube import (colourful_polytope, color_respecting_automorphisms,
                        derive_chiral_colorings, geometric_symmetry_group,
                        hemicube_embedding, hypercube_embedding,
                        lift_double_cover)


@pytest.fixture(scope="session")
def hemi():
    return hemicube_embedding()


@pytest.fixture(scope="session")
def cube_embedding():
    return hypercube_embedding()


@pytest.fixture(scope="session")
def P(hemi):
    return colourful_polytope(hemi.graph)


@pytest.fixture(scope="session")
def AP(hemi):
    """Color-respecting automorphisms of the direction-colored graph."""
    return color_respecting_automorphisms(hemi.graph)


@pytest.fixture(scope="session")
def twins(hemi):
    return derive_chiral_colorings(hemi)


@pytest.fixture(scope="session")
def Q(hemi, twins):
    return colourful_polytope(hemi.graph.recolored(twins[0]))


@pytest.fixture(scope="session")
def Qm(hemi, twins):
    return colourful_polytope(hemi.graph.recolored(twins[1]))


@pytest.fixture(scope="session")
def GP(hemi):
    return geometric_symmetry_group(hemi)


@pytest.fixture(scope="session")
def GQ(hemi, twins):
    return geometric_symmetry_group(hemi, twins[0])


@pytest.fixture(scope="session")
def cover(hemi, twins):
    """The lifted twin coloring on the full sign-vector skeleton."""
    return lift_double_cover(hemi, twins[0])


@pytest.fixture(scope="session")
def H(cover):
    return colourful_polytope(cover.graph)


@pytest.fixture(scope="session")
def GH(cover):
    return geometric_symmetry_group(cover)
