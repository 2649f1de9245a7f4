"""Permutation groups acting on vertices, faces and flags.

Groups here are small (a few hundred elements), so they are always fully
materialized: a PermutationGroup carries its complete sorted element
list, built by breadth-first closure from generators.  On top of that
sit the operations that decide regularity versus chirality: inducing a
face permutation from a vertex permutation, computing flag orbits, and
classifying the orbit structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import iter_colored_isomorphisms


class NotAnAutomorphismError(ValueError):
    """A vertex permutation fails to permute the faces of a polytope.

    Carries the id of a witness face whose image is not a face.
    """

    def __init__(self, face_id, message):
        super().__init__(message)
        self.face_id = face_id


# ---------------------------------------------------------------- perms


@dataclass(frozen=True)
class VertexPermutation:
    images: tuple  # images[x] is the image of point x

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("not a bijection: %r" % (self.images,))

    @staticmethod
    def identity(n):
        return VertexPermutation(tuple(range(n)))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        # composition: (p * q)(x) = p(q(x))
        return VertexPermutation(tuple(self.images[y] for y in other.images))

    def inverse(self):
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return VertexPermutation(tuple(inv))

    def is_identity(self):
        return all(self.images[x] == x for x in range(len(self.images)))

    def cycles(self):
        """Disjoint cycles (fixed points included), each starting at its
        least point, sorted by starting point."""
        seen, out = set(), []
        for x in range(len(self.images)):
            if x in seen:
                continue
            cyc, y = [], x
            while y not in seen:
                seen.add(y)
                cyc.append(y)
                y = self.images[y]
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles()))


# --------------------------------------------------------------- groups


class PermutationGroup:
    """A finite permutation group with all elements materialized.

    color_perms, when present, attaches to each element the permutation
    it induces on edge colors (see color_respecting_automorphisms).
    """

    def __init__(self, generators, elements=None, color_perms=None):
        self.generators = tuple(generators)
        if not self.generators:
            raise ValueError("need at least one generator (use the identity)")
        self.degree = self.generators[0].degree
        if any(g.degree != self.degree for g in self.generators):
            raise ValueError("generators act on different point sets")
        if elements is None:
            elements = _close(self.generators)
        self.elements = tuple(sorted(elements, key=lambda p: p.images))
        self.color_perms = dict(color_perms) if color_perms is not None else None

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p):
        return p in set(self.elements)

    def __eq__(self, other):
        return (isinstance(other, PermutationGroup)
                and self.elements == other.elements)

    def __repr__(self):
        return "PermutationGroup(order=%d, degree=%d)" % (self.order, self.degree)

    def color_permutation(self, p):
        """Color permutation attached to element p (KeyError if none)."""
        if self.color_perms is None:
            raise KeyError("group carries no color permutations")
        return self.color_perms[p]

    def is_cyclic(self):
        return any(p.order() == self.order for p in self.elements)

    def subgroup(self, predicate):
        """Elements satisfying `predicate`, verified to form a subgroup."""
        keep = [p for p in self.elements if predicate(p)]
        kset = set(keep)
        ident = VertexPermutation.identity(self.degree)
        if ident not in kset:
            raise ValueError("subset does not contain the identity")
        for a in keep:
            if a.inverse() not in kset:
                raise ValueError("subset not closed under inverse")
            for b in keep:
                if a * b not in kset:
                    raise ValueError("subset not closed under composition")
        cp = None
        if self.color_perms is not None:
            cp = {p: self.color_perms[p] for p in keep}
        return PermutationGroup(reduce_generators(keep), elements=keep,
                                color_perms=cp)

    def to_json(self):
        return {
            "degree": self.degree,
            "order": self.order,
            "generators": [list(g.images) for g in self.generators],
        }


def _close(generators):
    """Breadth-first closure of a generator set."""
    ident = VertexPermutation.identity(generators[0].degree)
    els = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for a in frontier:
            for g in generators:
                b = a * g
                if b not in els:
                    els.add(b)
                    fresh.append(b)
        frontier = fresh
    return els


def closure(generators):
    """Group generated by the given vertex permutations."""
    return PermutationGroup(tuple(generators))


def group_order(G):
    return G.order


def reduce_generators(elements):
    """Small generating set for a materialized group: greedily add
    elements not yet generated.  Always nonempty (identity if trivial)."""
    elements = sorted(elements, key=lambda p: p.images)
    target = set(elements)
    n = elements[0].degree
    ident = VertexPermutation.identity(n)
    gens = []
    span = {ident}
    for p in elements:
        if p in span:
            continue
        gens.append(p)
        span = _close(tuple(gens))
        if len(span) == len(target):
            break
    return tuple(gens) if gens else (ident,)


def color_respecting_automorphisms(g):
    """Automorphism group of a ColoredGraph, colors preserved up to a
    permutation of color names.

    Each element is a vertex permutation; the color permutation it
    induces is attached (PermutationGroup.color_permutation).
    """
    elements, color_perms = [], {}
    for vmap, cmap in iter_colored_isomorphisms(g, g):
        p = VertexPermutation(vmap)
        elements.append(p)
        color_perms[p] = VertexPermutation(cmap)
    return PermutationGroup(reduce_generators(elements), elements=elements,
                            color_perms=color_perms)


# ---------------------------------------------------- action on faces


def _map_edge(e, sigma):
    a, b = sigma(e[0]), sigma(e[1])
    return (a, b) if a < b else (b, a)


def induced_face_action(p, sigma):
    """Permutation of p's face ids induced by vertex permutation sigma.

    Raises NotAnAutomorphismError naming a witness face if some face
    image is not a face of p.
    """
    images = []
    for f in p.faces:
        vs = frozenset(sigma(v) for v in f.vertices)
        es = frozenset(_map_edge(e, sigma) for e in f.edges)
        j = p.face_index(f.rank, vs, es)
        if j is None:
            raise NotAnAutomorphismError(
                f.id, "image of face %d under %r is not a face" % (f.id, sigma.images))
        images.append(j)
    return VertexPermutation(tuple(images))


def flag_orbits(p, G):
    """Orbit partition of p's flags under G.

    Returns a tuple of orbits, each a sorted tuple of flag indices,
    ordered by least index; so orbit ids are deterministic.
    """
    fg = p.flag_graph()
    actions = [induced_face_action(p, g) for g in G.generators]
    orbit_of = {}
    orbits = []
    for i in range(len(fg.flags)):
        if i in orbit_of:
            continue
        comp, stack = set(), [i]
        while stack:
            j = stack.pop()
            if j in comp:
                continue
            comp.add(j)
            flag = fg.flags[j]
            for a in actions:
                img = fg.index[tuple(a(fid) for fid in flag)]
                if img not in comp:
                    stack.append(img)
        for j in comp:
            orbit_of[j] = len(orbits)
        orbits.append(tuple(sorted(comp)))
    return tuple(orbits)


@dataclass(frozen=True)
class SymmetryClassification:
    verdict: str              # "regular" | "chiral" | "neither"
    flag_orbit_count: int
    adjacency_crosses_orbits: bool
    orbit_sizes: tuple


def classify_symmetry(p, G):
    """Classify p's symmetry under G by flag orbit structure.

    One flag orbit is regular.  Two orbits with every i-adjacent pair of
    flags in opposite orbits is chiral (the two orbits are the two
    rotation classes).  Anything else is neither.
    """
    orbits = flag_orbits(p, G)
    fg = p.flag_graph()
    orbit_of = {}
    for oid, orb in enumerate(orbits):
        for j in orb:
            orbit_of[j] = oid
    crosses = all(
        orbit_of[fg.adjacent(j, i)] != orbit_of[j]
        for j in range(len(fg.flags))
        for i in range(p.rank)
    )
    if len(orbits) == 1:
        verdict = "regular"
    elif len(orbits) == 2 and crosses:
        verdict = "chiral"
    else:
        verdict = "neither"
    return SymmetryClassification(
        verdict=verdict,
        flag_orbit_count=len(orbits),
        adjacency_crosses_orbits=crosses,
        orbit_sizes=tuple(len(o) for o in orbits),
    )


def chain_stabilizer(p, G, chain):
    """Subgroup of G fixing each face in `chain` (ids of pairwise
    incident faces).  ValueError if two chain faces are incomparable."""
    chain = tuple(chain)
    for a in chain:
        for b in chain:
            if not (p.leq(a, b) or p.leq(b, a)):
                raise ValueError("faces %d and %d are not incident" % (a, b))
    keep, cp = [], {}
    for g in G.elements:
        act = induced_face_action(p, g)
        if all(act(f) == f for f in chain):
            keep.append(g)
            if G.color_perms is not None:
                cp[g] = G.color_perms[g]
    return PermutationGroup(reduce_generators(keep), elements=keep,
                            color_perms=cp if G.color_perms is not None else None)
