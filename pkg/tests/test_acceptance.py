"""Acceptance criteria, one test per criterion, one verdict line each.

Each test prints "criterion N: PASS/FAIL" before asserting, so the
verdict survives in captured output either way.  Numbers are exact
integer equalities except rotation angles, which use the 1e-9 tolerance
the geometry module fixes.

Criterion 5 is asserted in its strict form (set equality of zigzag
polygons and twin squares in both directions) even though the computed
zigzag set of either polytope is the disjoint union of the squares of
BOTH twins, twice the size of one twin's square set.  The strict claim
therefore fails; the containment forms hold and are verified separately
(see the verification report rows petrie.*).  The failure is left
visible on purpose instead of weakening the assertion.
"""

import itertools
import json
import math

from chiralcube.classify import verify_paper
from chiralcube.geometry import (ANGLE_ATOL, affine_rank, cycle_holonomy,
                                 classes_hit_all_directions,
                                 exchanging_isometries, lift_cycle,
                                 lift_double_cover, orientation,
                                 rotation_profile, squares_see_all_colors)
from chiralcube.graph import colored_isomorphism, enumerate_matching_colorings
from chiralcube.group import (chain_stabilizer, classify_symmetry,
                              color_respecting_automorphisms, flag_orbits)
from chiralcube.polytope import (check_polytopality, colourful_polytope,
                                 f_vector, petrie_polygons, schlafli_type,
                                 two_face_cycle, two_face_cycles)

# every quoted sentence the verification report is required to carry
ANCHORS = (
    "P has 4 facets and each of them is a cube",
    "Recall that P has 192 symmetries.",
    "each colour has an edge in each direction",
    "each 2-face of the regular hemi-hypercube has the four colours",
    "any of these properties defines the chiral colourings",
    "Q has precisely 96 symmetries",
    "all 96 orientation preserving elements",
    "geometrically chiral, with geometrically chiral facets",
    "(v₀u₀v₁u₁)(u₂v₂u₃v₃)",
    "generated by the 3-fold rotation around that edge",
    "the 2-faces of Q are Petrie polygons of the hemicube P and vice-versa",
    "The 4-gons of Q lift into 8-gons",
    "Q̂ has Schläfli type {8,3,3}",
    "has 16 vertices, 24 edges and 6 faces",
    "Q̂ is not regular",
    "1-step 8-fold rotation followed by a perpendicular 3-step 8-fold rotation",
    "chiral 4-polytope of full rank",
    "the 2-faces of Q̂ are helices in R⁴",
    "the two enantiomorphic forms of Q",
)


def verdict(n, label, ok):
    print("criterion %2d: %s  (%s)" % (n, "PASS" if ok else "FAIL", label))
    assert ok, "criterion %d failed: %s" % (n, label)


def test_criterion_01_regular_polytope(P, AP, GP):
    ok = (check_polytopality(P) == []
          and f_vector(P) == (8, 16, 12, 4)
          and schlafli_type(P) == (4, 3, 3))
    bot = P.faces_of_rank(-1)[0]
    facets = P.faces_of_rank(3)
    ok = ok and len(facets) == 4
    for fid in facets:
        sec = P.section(bot, fid)
        ok = ok and (f_vector(sec), schlafli_type(sec)) == ((8, 12, 6), (4, 3))
    orbits = flag_orbits(P, AP)
    ok = ok and AP.order == 192 and GP.order == 192 and len(orbits) == 1
    verdict(1, "regular polytope: f-vector, type, cube facets, order 192, "
               "one flag orbit", ok)


def test_criterion_02_coloring_search(hemi, twins):
    every = enumerate_matching_colorings(hemi.graph,
                                         up_to_color_permutation=True)
    by_a = [c for c in every if classes_hit_all_directions(hemi, c)]
    by_b = [c for c in every if squares_see_all_colors(hemi, c)]
    ok = len(twins) == 2 and by_a == by_b == list(twins)
    verdict(2, "exactly 2 chiral colorings up to renaming, both property "
               "filters agree", ok)


def test_criterion_03_twin_chirality(hemi, twins, P, Q, GQ):
    ok = colored_isomorphism(Q.source_graph, P.source_graph) is not None
    ok = ok and GQ.order == 96
    ok = ok and all(orientation(GQ.matrix(p)) == 1 for p in GQ)
    cls = classify_symmetry(Q, GQ.group)
    ok = (ok and cls.verdict == "chiral" and cls.flag_orbit_count == 2
          and cls.adjacency_crosses_orbits)
    qbot = Q.faces_of_rank(-1)[0]
    for fid in Q.faces_of_rank(3):
        sec = Q.section(qbot, fid)
        stab = chain_stabilizer(Q, GQ.group, [fid])
        ok = ok and classify_symmetry(sec, stab).verdict == "chiral"
    verdict(3, "twin is isomorphic to the regular polytope, 96 rotations, "
               "chiral with chiral facets", ok)


def test_criterion_04_stabilizers(Q, GQ):
    ok = True
    for f2 in Q.faces_of_rank(2):
        for f3 in Q.faces_of_rank(3):
            if not Q.leq(f2, f3):
                continue
            st = chain_stabilizer(Q, GQ.group, [f2, f3])
            ok = ok and st.order == 4 and st.is_cyclic()
            ok = ok and all(p.cycle_type() == (4, 4) for p in st
                            if p.order() == 4)
    for v in Q.faces_of_rank(0):
        for f3 in Q.faces_of_rank(3):
            if not Q.leq(v, f3):
                continue
            st = chain_stabilizer(Q, GQ.group, [v, f3])
            ok = ok and st.order == 3 and st.is_cyclic()
    for e1 in Q.faces_of_rank(1):
        v = min(Q.faces[e1].vertices)
        vid = next(i for i in Q.faces_of_rank(0)
                   if Q.faces[i].vertices == frozenset([v]))
        st = chain_stabilizer(Q, GQ.group, [vid, e1])
        ok = ok and st.order == 3 and st.is_cyclic()
    verdict(4, "square-facet stabilizer C4 of type (4,4), vertex-facet C3, "
               "edge pointwise C3", ok)


def test_criterion_05_petrie_exchange(P, Q):
    # computed fact: petrie_polygons(P) has 24 members, the squares of
    # the twin AND of its mirror together; two_face_cycles(Q) has 12.
    # The strict equalities below are kept as stated and fail.
    ok = (set(two_face_cycles(Q)) == set(petrie_polygons(P))
          and set(two_face_cycles(P)) == set(petrie_polygons(Q)))
    verdict(5, "twin squares equal zigzag polygons of the regular polytope, "
               "and vice versa, as canonical cycle sets", ok)


def test_criterion_06_double_cover(hemi, Q, H):
    ok = True
    for fid in Q.faces_of_rank(2):
        cyc = two_face_cycle(Q, fid)
        ok = ok and cycle_holonomy(hemi, cyc) == -1
        up = lift_cycle(hemi, cyc)
        ok = ok and len(up) == 1 and len(up[0]) == 8
    ok = (ok and check_polytopality(H) == []
          and schlafli_type(H) == (8, 3, 3)
          and f_vector(H) == (16, 32, 12, 4))
    hbot = H.faces_of_rank(-1)[0]
    facets = H.faces_of_rank(3)
    ok = ok and len(facets) == 4
    for fid in facets:
        ok = ok and f_vector(H.section(hbot, fid)) == (16, 24, 6)
    verdict(6, "twin squares lift to octagons; cover is polytopal {8,3,3} "
               "(16,32,12,4) with (16,24,6) facets", ok)


def test_criterion_07_cover_chirality(cover, H, GH):
    AH = color_respecting_automorphisms(cover.graph)
    ok = AH.order < 384
    cls = classify_symmetry(H, GH.group)
    ok = (ok and cls.verdict == "chiral" and cls.flag_orbit_count == 2
          and cls.adjacency_crosses_orbits)
    h2 = H.faces_of_rank(2)[0]
    h3 = next(i for i in H.faces_of_rank(3) if H.leq(h2, i))
    st = chain_stabilizer(H, GH.group, [h2, h3])
    gen = next((p for p in st if p.order() == 8), None)
    ok = ok and gen is not None and gen.cycle_type() == (8, 8)
    if gen is not None:
        m = GH.matrix(gen)
        ok = ok and orientation(m) == 1
        ok = ok and rotation_profile(m).matches(
            (math.pi / 4, 3 * math.pi / 4), ANGLE_ATOL)
    verdict(7, "cover is not regular, geometrically chiral, octagon "
               "stabilizer turns pi/4 and 3pi/4", ok)


def test_criterion_08_helices(hemi, cover, H):
    ok = all(affine_rank([cover.coords[v] for v in two_face_cycle(H, fid)]) == 4
             for fid in H.faces_of_rank(2))
    lifted = lift_double_cover(hemi, hemi.direction_coloring())
    cube = colourful_polytope(lifted.graph)
    ok = ok and all(
        affine_rank([lifted.coords[v] for v in two_face_cycle(cube, fid)]) == 2
        for fid in cube.faces_of_rank(2))
    verdict(8, "cover 2-faces have affine rank 4, lifted regular 2-faces "
               "rank 2", ok)


def test_criterion_09_enantiomorphy(hemi, twins):
    ex = exchanging_isometries(hemi, twins[0], twins[1])
    dets = [d for _, d in ex]
    ok = dets.count(-1) > 0 and dets.count(1) == 0
    verdict(9, "twins exchanged by reflections only", ok)


def test_criterion_10_property_suite(hemi, P, Q, H, AP, GP, GQ, GH,
                                     cube_embedding):
    ok = True

    # flag i-adjacency is a perfect involution on every flag set
    cube = colourful_polytope(cube_embedding.graph)
    for p in (P, Q, H, cube):
        fg = p.flag_graph()
        for j in range(len(fg.flags)):
            for i in range(p.rank):
                k = fg.adjacent(j, i)
                ok = ok and k != j and fg.adjacent(k, i) == j

    # orbit sizes divide group orders and sum to flag counts
    for p, G in ((P, AP), (Q, GQ.group), (H, GH.group)):
        orbits = flag_orbits(p, G)
        sizes = [len(o) for o in orbits]
        ok = ok and sum(sizes) == len(p.flag_graph().flags)
        ok = ok and all(G.order % s == 0 for s in sizes)

    # matrix tagging is a homomorphism, checked on all pairs
    for G in (GP, GQ):
        mats = {p: G.matrix(p) for p in G}
        for p, q in itertools.product(G, repeat=2):
            ok = ok and mats[p] @ mats[q] == mats[p * q]
        if not ok:
            break

    # holonomy does not depend on where a cycle starts or which way it runs
    for fid in Q.faces_of_rank(2):
        cyc = two_face_cycle(Q, fid)
        h = cycle_holonomy(hemi, cyc)
        for s in range(len(cyc)):
            rot = cyc[s:] + cyc[:s]
            ok = ok and cycle_holonomy(hemi, rot) == h
            ok = ok and cycle_holonomy(hemi, tuple(reversed(rot))) == h

    # byte-identical reruns of every enumeration
    ok = ok and [c.colors for c in
                 enumerate_matching_colorings(hemi.graph,
                                              up_to_color_permutation=True)] == \
                [c.colors for c in
                 enumerate_matching_colorings(hemi.graph,
                                              up_to_color_permutation=True)]
    ok = ok and petrie_polygons(P) == petrie_polygons(P)
    ok = ok and flag_orbits(Q, GQ.group) == flag_orbits(Q, GQ.group)
    a, b = verify_paper(), verify_paper()
    ok = ok and a.to_text() == b.to_text()
    ok = ok and json.dumps(a.to_json()) == json.dumps(b.to_json())

    verdict(10, "involutions, orbit arithmetic, matrix homomorphism, "
                "holonomy invariance, determinism", ok)


def test_report_carries_declared_anchors():
    report = verify_paper()
    have = set(report.anchors())
    missing = [a for a in ANCHORS if a not in have]
    assert missing == [], "report lost anchors: %r" % (missing,)
