"""Permutations, group closure, induced actions, flag orbits, stabilizers."""

import pytest

from chiralcube.graph import Coloring, GraphError
from chiralcube.group import (NotAnAutomorphismError, PermutationGroup,
                              VertexPermutation, chain_stabilizer,
                              classify_symmetry, closure,
                              color_respecting_automorphisms, flag_orbits,
                              group_order, induced_face_action,
                              reduce_generators)


# -------------------------------------------------------- permutations


def test_identity():
    p = VertexPermutation.identity(5)
    assert p.is_identity()
    assert p.order() == 1
    # fixed points count as 1-cycles
    assert p.cycle_type() == (1, 1, 1, 1, 1)


def test_composition_order():
    # (p*q)(x) must be p(q(x)), i.e. apply q first
    p = VertexPermutation((1, 0, 2))
    q = VertexPermutation((0, 2, 1))
    assert (p * q).images == tuple(p(q(x)) for x in range(3))


def test_inverse():
    p = VertexPermutation((2, 0, 1, 3))
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()


def test_cycles_and_order():
    p = VertexPermutation((1, 2, 0, 4, 3, 5))
    assert p.cycles() == ((0, 1, 2), (3, 4), (5,))
    assert p.cycle_type() == (3, 2, 1)
    assert p.order() == 6


# ------------------------------------------------------------- groups


def test_closure_of_identity():
    G = closure([VertexPermutation.identity(4)])
    assert group_order(G) == 1


def test_closure_of_a_three_cycle():
    G = closure([VertexPermutation((1, 2, 0))])
    assert G.order == 3
    assert G.is_cyclic()


def test_symmetric_group_on_three_points():
    G = closure([VertexPermutation((1, 0, 2)), VertexPermutation((0, 2, 1))])
    assert G.order == 6
    assert not G.is_cyclic()


def test_elements_are_sorted_and_stable():
    G = closure([VertexPermutation((1, 2, 0))])
    imgs = [p.images for p in G]
    assert imgs == sorted(imgs)


def test_membership_and_equality():
    G = closure([VertexPermutation((1, 2, 0))])
    assert VertexPermutation((2, 0, 1)) in G
    assert VertexPermutation((1, 0, 2)) not in G
    assert G == closure([VertexPermutation((2, 0, 1))])


def test_subgroup_verifies_closure():
    G = closure([VertexPermutation((1, 0, 2)), VertexPermutation((0, 2, 1))])
    even = G.subgroup(lambda p: (p.degree - len(p.cycles())) % 2 == 0)
    assert even.order == 3
    # a 3-cycle without its inverse is not closed; must fail loudly
    with pytest.raises(ValueError):
        G.subgroup(lambda p: p.images == (1, 2, 0) or p.is_identity())


def test_reduce_generators_reproduces_group(AP):
    gens = reduce_generators(AP.elements)
    assert len(gens) < 5
    assert closure(gens).elements == AP.elements


def test_group_json_shape(AP):
    data = AP.to_json()
    assert data["order"] == 192
    assert data["degree"] == 8
    assert closure([VertexPermutation(tuple(im))
                    for im in data["generators"]]).order == 192


# ----------------------------------------------- graph automorphisms


def test_regular_graph_automorphism_count(AP):
    assert AP.order == 192


def test_chiral_graph_automorphism_count(hemi, twins):
    A = color_respecting_automorphisms(hemi.graph.recolored(twins[0]))
    assert A.order == 192


def test_automorphism_count_survives_color_relabel(hemi):
    g = hemi.graph
    relabeled = g.recolored(Coloring.of(g).permuted({0: 3, 1: 2, 2: 1, 3: 0}))
    assert color_respecting_automorphisms(relabeled).order == 192


def test_every_automorphism_carries_a_color_permutation(hemi, AP):
    g = hemi.graph
    for p in AP:
        cp = AP.color_permutation(p)
        for u, v, c in g.edges:
            assert g.color_of(p(u), p(v)) == cp(c)


# ------------------------------------------------------- face actions


def test_identity_face_action(P):
    a = induced_face_action(P, VertexPermutation.identity(8))
    assert a.is_identity()


def test_color_breaking_map_is_rejected(P):
    # swapping two vertices inside one part of the bipartition does not
    # respect colors, so some face image is not a face
    bad = VertexPermutation((0, 1, 2, 4, 3, 5, 6, 7))
    with pytest.raises(NotAnAutomorphismError) as info:
        induced_face_action(P, bad)
    assert isinstance(info.value.face_id, int)


def test_face_action_is_a_homomorphism(P, AP):
    p, q = AP.elements[3], AP.elements[17]
    ap, aq = induced_face_action(P, p), induced_face_action(P, q)
    assert induced_face_action(P, p * q).images == (ap * aq).images


# -------------------------------------------------------- flag orbits


def test_regular_polytope_has_one_orbit(P, AP):
    orbits = flag_orbits(P, AP)
    assert len(orbits) == 1
    assert len(orbits[0]) == 192


def test_twin_has_two_orbits(Q, GQ):
    orbits = flag_orbits(Q, GQ.group)
    assert sorted(len(o) for o in orbits) == [96, 96]


def test_orbit_ids_deterministic(Q, GQ):
    assert flag_orbits(Q, GQ.group) == flag_orbits(Q, GQ.group)


def test_classification_verdicts(P, AP, Q, GQ):
    cp = classify_symmetry(P, AP)
    assert (cp.verdict, cp.flag_orbit_count) == ("regular", 1)
    cq = classify_symmetry(Q, GQ.group)
    assert (cq.verdict, cq.orbit_sizes) == ("chiral", (96, 96))
    assert cq.adjacency_crosses_orbits


def test_trivial_group_is_neither(Q):
    triv = closure([VertexPermutation.identity(8)])
    assert classify_symmetry(Q, triv).verdict == "neither"


# -------------------------------------------------------- stabilizers


def test_chain_stabilizer_rejects_non_incident_chain(Q, GQ):
    # two distinct vertices are never comparable
    v0, v1 = Q.faces_of_rank(0)[:2]
    with pytest.raises((GraphError, ValueError)):
        chain_stabilizer(Q, GQ.group, [v0, v1])


def test_facet_stabilizer_order(Q, GQ):
    st = chain_stabilizer(Q, GQ.group, [Q.faces_of_rank(3)[0]])
    assert st.order == 24


def test_square_in_facet_stabilizer(Q, GQ):
    f2 = Q.faces_of_rank(2)[0]
    f3 = next(i for i in Q.faces_of_rank(3) if Q.leq(f2, i))
    st = chain_stabilizer(Q, GQ.group, [f2, f3])
    assert st.order == 4 and st.is_cyclic()
    gen = next(p for p in st if p.order() == 4)
    assert gen.cycle_type() == (4, 4)


def test_edge_pointwise_stabilizer(Q, GQ):
    e1 = Q.faces_of_rank(1)[0]
    v = next(i for i in Q.faces_of_rank(0) if Q.leq(i, e1))
    st = chain_stabilizer(Q, GQ.group, [v, e1])
    assert st.order == 3 and st.is_cyclic()
