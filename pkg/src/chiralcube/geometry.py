"""Coordinates in R^4 and P^3, signed-permutation isometries, and lifts.

The vertex set {1,-1}^4 with edges along coordinate directions is the
4-cube; identifying antipodes gives its projective quotient, on which
the complete bipartite graph K_{4,4} appears as the union of the edge
graph and the main diagonals.  Symmetries in both settings are signed
permutation matrices (384 of them, or 192 modulo -I).  This module owns
everything that needs coordinates: building the two embedded graphs,
deriving the colorings fixed only by rotations, computing symmetry
groups as matrix-tagged permutation groups, sign holonomy around cycles,
the lift to the double cover, rotation angles, and OFF-style export.

Projective points are stored by their canonical representative, the
sign choice with first coordinate +1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import (ColoredGraph, Coloring, GraphError, components_by_colorset,
                    enumerate_matching_colorings)
from .group import PermutationGroup, VertexPermutation, reduce_generators
from .polytope import canonical_cycle, two_face_cycle

ANGLE_ATOL = 1e-9


# ------------------------------------------------------------ matrices


@dataclass(frozen=True)
class IsometryMatrix:
    """A signed permutation matrix, optionally taken modulo -I.

    rows are tuples of ints with exactly one nonzero entry (+1 or -1)
    per row and per column.  Projective matrices are canonicalized so
    the pivot of row 0 is positive, making equality mean equality in
    the quotient group.
    """

    rows: tuple
    projective: bool = False

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        n = len(rows)
        pivots = []
        for r in rows:
            nz = [j for j, x in enumerate(r) if x != 0]
            if len(r) != n or len(nz) != 1 or r[nz[0]] not in (1, -1):
                raise ValueError("not a signed permutation matrix: %r" % (rows,))
            pivots.append(nz[0])
        if sorted(pivots) != list(range(n)):
            raise ValueError("not a signed permutation matrix: %r" % (rows,))
        if self.projective and rows[0][pivots[0]] < 0:
            rows = tuple(tuple(-x for x in r) for r in rows)
        object.__setattr__(self, "rows", rows)

    @staticmethod
    def identity(n=4, projective=False):
        return IsometryMatrix(
            tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)),
            projective)

    @staticmethod
    def from_perm_signs(perm, signs, projective=False):
        """Matrix sending x to y with y[i] = signs[i] * x[perm[i]]."""
        n = len(perm)
        rows = tuple(tuple(signs[i] if j == perm[i] else 0 for j in range(n))
                     for i in range(n))
        return IsometryMatrix(rows, projective)

    @property
    def dimension(self):
        return len(self.rows)

    def perm_signs(self):
        perm, signs = [], []
        for r in self.rows:
            j = next(j for j, x in enumerate(r) if x != 0)
            perm.append(j)
            signs.append(r[j])
        return tuple(perm), tuple(signs)

    def apply(self, vec):
        return tuple(sum(r[j] * vec[j] for j in range(len(vec))) for r in self.rows)

    def __matmul__(self, other):
        if self.projective != other.projective:
            raise ValueError("cannot mix projective and euclidean matrices")
        n = self.dimension
        rows = tuple(
            tuple(sum(self.rows[i][k] * other.rows[k][j] for k in range(n))
                  for j in range(n))
            for i in range(n))
        return IsometryMatrix(rows, self.projective)

    def inverse(self):
        # orthogonal, so the inverse is the transpose
        return IsometryMatrix(tuple(zip(*self.rows)), self.projective)

    def det(self):
        perm, signs = self.perm_signs()
        sign = 1
        seen = set()
        for i in range(len(perm)):
            if i in seen:
                continue
            length, j = 0, i
            while j not in seen:
                seen.add(j)
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign * math.prod(signs)

    def to_numpy(self):
        return np.array(self.rows, dtype=float)


def all_signed_matrices(n=4, projective=False):
    """Every signed permutation matrix of the given dimension, sorted.

    384 matrices for n=4, or 192 classes modulo -I.
    """
    out = set()
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            out.add(IsometryMatrix.from_perm_signs(perm, signs, projective))
    return tuple(sorted(out, key=lambda m: m.rows))


def orientation(m):
    """Determinant, +1 or -1.  Well defined projectively in even
    dimension (negating an even-dimensional matrix keeps the sign)."""
    if m.projective and m.dimension % 2 != 0:
        raise ValueError("orientation is ambiguous in odd projective dimension")
    return m.det()


@dataclass(frozen=True)
class RotationProfile:
    """Rotation angles of an SO(4) element: two angles in [0, pi],
    sorted ascending, each from a complex-conjugate eigenvalue pair."""

    angles: tuple

    def matches(self, expected, atol=ANGLE_ATOL):
        return (len(self.angles) == len(expected)
                and all(abs(a - b) <= atol
                        for a, b in zip(self.angles, sorted(expected))))


def rotation_profile(m):
    """Angle pair of a rotation matrix (det +1, euclidean).

    Eigenvalues of an orthogonal 4x4 rotation come in conjugate pairs
    e^{+-i a}, e^{+-i b}; the profile is (a, b) sorted.  ValueError for
    projective or orientation-reversing input, where angles are not
    well defined.
    """
    if m.projective:
        raise ValueError("rotation angles are sign-ambiguous projectively")
    if m.det() != 1:
        raise ValueError("rotation profile requires det +1")
    eig = np.linalg.eigvals(m.to_numpy())
    args = np.sort(np.abs(np.angle(eig)))
    if abs(args[0] - args[1]) > ANGLE_ATOL or abs(args[2] - args[3]) > ANGLE_ATOL:
        raise ValueError("eigenvalue arguments do not pair: %r" % (args,))
    return RotationProfile((float(args[0]), float(args[2])))


# ----------------------------------------------------------- embeddings


@dataclass(frozen=True)
class EmbeddedGraph:
    """A colored graph with integer coordinates for its vertices.

    Every edge must join vertices differing in exactly one coordinate,
    with antipodal identification first if projective; the index of that
    coordinate is the edge's direction.  The graph's own colors are
    whatever coloring the construction put there (the direction coloring
    for the plain embeddings, a lifted coloring for double covers).
    """

    graph: ColoredGraph
    coords: tuple  # coords[v] is an integer tuple
    projective: bool

    def __post_init__(self):
        if len(self.coords) != self.graph.n_vertices:
            raise GraphError("coordinate count does not match vertex count")
        if self.projective:
            for x in self.coords:
                nz = next((c for c in x if c != 0), 0)
                if nz < 0:
                    raise GraphError("projective representative %r not canonical" % (x,))
        if len(set(self.coords)) != len(self.coords):
            raise GraphError("coordinates collide")
        for u, v, _ in self.graph.edges:
            self.direction(u, v)  # raises if some edge spans >1 coordinate

    @property
    def dimension(self):
        return len(self.coords[0])

    def direction(self, u, v):
        """Index of the single coordinate in which u and v differ."""
        x, y = self.coords[u], self.coords[v]
        diffs = [j for j in range(len(x)) if x[j] != y[j]]
        if self.projective:
            anti = [j for j in range(len(x)) if x[j] != -y[j]]
            if len(anti) < len(diffs):
                diffs = anti
        if len(diffs) != 1:
            raise GraphError("edge (%d,%d) is not axis-aligned" % (u, v))
        return diffs[0]

    def direction_coloring(self):
        return Coloring(self.graph.edge_pairs,
                        tuple(self.direction(u, v) for u, v in self.graph.edge_pairs),
                        self.dimension)


def _hemicube_rep(i):
    # vertex i of the projective quotient: bits of i choose the signs of
    # coordinates 1..3, coordinate 0 pinned to +1 by canonicality
    return (1,) + tuple(1 - 2 * ((i >> k) & 1) for k in range(3))


def _hemicube_id(x):
    if x[0] == -1:
        x = tuple(-c for c in x)
    return sum(((1 - x[k + 1]) // 2) << k for k in range(3))


def _hypercube_rep(i):
    return tuple(1 - 2 * ((i >> k) & 1) for k in range(4))


def _hypercube_id(x):
    return sum(((1 - x[k]) // 2) << k for k in range(4))


def hemicube_embedding():
    """The antipodal quotient of the 4-cube, with K_{4,4} on top of it.

    8 vertices (sign classes of {1,-1}^4), joined when representatives
    differ in one coordinate (quotient cube edges) or in all four signs
    but one (the main diagonals, direction 0 after re-choosing the
    sign).  Colors are directions; 4-regular, 4 colors, bipartite by
    parity of the number of -1 entries.
    """
    edges = []
    for i, j in itertools.combinations(range(8), 2):
        x, y = _hemicube_rep(i), _hemicube_rep(j)
        diffs = [k for k in range(4) if x[k] != y[k]]
        if len(diffs) == 1:
            edges.append((i, j, diffs[0]))
        elif len(diffs) == 3:
            # x and -y differ in exactly one coordinate
            edges.append((i, j, next(k for k in range(4) if x[k] == y[k])))
    g = ColoredGraph(8, 4, tuple(edges))
    return EmbeddedGraph(g, tuple(_hemicube_rep(i) for i in range(8)), True)


def hypercube_embedding():
    """The 4-cube: 16 vertices {1,-1}^4, 32 axis edges colored by
    direction."""
    edges = []
    for i, j in itertools.combinations(range(16), 2):
        x, y = _hypercube_rep(i), _hypercube_rep(j)
        diffs = [k for k in range(4) if x[k] != y[k]]
        if len(diffs) == 1:
            edges.append((i, j, diffs[0]))
    g = ColoredGraph(16, 4, tuple(edges))
    return EmbeddedGraph(g, tuple(_hypercube_rep(i) for i in range(16)), False)


# ------------------------------------------------------ symmetry groups


def vertex_permutation(e, m):
    """Permutation of e's vertices induced by the matrix m, or None if m
    does not preserve the vertex set."""
    imgs = []
    lookup = {x: i for i, x in enumerate(e.coords)}
    for x in e.coords:
        y = m.apply(x)
        if e.projective:
            nz = next((c for c in y if c != 0), 0)
            if nz < 0:
                y = tuple(-c for c in y)
        if y not in lookup:
            return None
        imgs.append(lookup[y])
    p = VertexPermutation(tuple(imgs))
    return p


@dataclass(frozen=True)
class GeometricGroup:
    """A permutation group whose elements remember their matrices."""

    group: PermutationGroup
    matrices: dict  # VertexPermutation -> IsometryMatrix

    def matrix(self, p):
        return self.matrices[p]

    @property
    def order(self):
        return self.group.order

    def __iter__(self):
        return iter(self.group.elements)

    def orientation_preserving(self):
        keep = [p for p in self.group.elements
                if orientation(self.matrices[p]) == 1]
        sub = PermutationGroup(reduce_generators(keep), elements=keep)
        return GeometricGroup(sub, {p: self.matrices[p] for p in keep})


def _maps_coloring(e, m, src, dst):
    """Does matrix m send coloring src to coloring dst up to renaming
    colors?  src and dst are Colorings over e.graph's edge list."""
    p = vertex_permutation(e, m)
    if p is None:
        return False
    pairs = set(e.graph.edge_pairs)
    cmap = {}
    for (u, v), c in zip(src.edge_pairs, src.colors):
        a, b = p(u), p(v)
        if a > b:
            a, b = b, a
        if (a, b) not in pairs:
            return False
        c2 = dst.color_of(a, b)
        if cmap.setdefault(c, c2) != c2:
            return False
    return len(set(cmap.values())) == len(cmap)


def geometric_symmetry_group(e, coloring=None):
    """Isometries preserving the embedded graph and its coloring (up to
    a color permutation), as vertex permutations tagged with matrices.

    coloring defaults to the one carried by e.graph.  The matrix action
    on vertices must be faithful (it is for full-support coordinate
    sets); GraphError otherwise, since tagging would be ambiguous.
    """
    if coloring is None:
        coloring = Coloring.of(e.graph)
    elements, matrices = [], {}
    for m in all_signed_matrices(e.dimension, e.projective):
        if not _maps_coloring(e, m, coloring, coloring):
            continue
        p = vertex_permutation(e, m)
        if p in matrices:
            raise GraphError("matrix action on vertices is not faithful")
        matrices[p] = m
        elements.append(p)
    group = PermutationGroup(reduce_generators(elements), elements=elements)
    return GeometricGroup(group, matrices)


def exchanging_isometries(e, c1, c2):
    """All isometries taking coloring c1 to coloring c2 (up to color
    renaming), with their orientations: a list of (matrix, det) pairs."""
    out = []
    for m in all_signed_matrices(e.dimension, e.projective):
        if _maps_coloring(e, m, c1, c2):
            out.append((m, orientation(m)))
    return out


# ------------------------------------------------- coloring properties


def classes_hit_all_directions(e, coloring):
    """Property: every color class contains an edge of every direction.

    The direction coloring itself fails this (each class is one
    direction); a class transversal to directions is as far from the
    direction coloring as possible.
    """
    dirs = e.direction_coloring()
    for c, pairs in coloring.classes().items():
        seen = {dirs.color_of(u, v) for u, v in pairs}
        if seen != set(range(e.dimension)):
            return False
    return True


def squares_see_all_colors(e, coloring):
    """Property: on every direction-bicolored square (2-face of the
    direction-colored poset), the coloring shows all its colors."""
    dirs = e.direction_coloring()
    base = e.graph.recolored(dirs)
    for pair in itertools.combinations(range(e.dimension), 2):
        for verts, es in components_by_colorset(base, pair):
            if not es:
                continue
            seen = {coloring.color_of(u, v) for u, v in es}
            if seen != set(range(coloring.n_colors)):
                return False
    return True


def derive_chiral_colorings(e):
    """The matching colorings of e whose classes are transversal to the
    edge directions, one representative per color-permutation class.

    For the projective quotient graph these are exactly the colorings
    fixed by no orientation-reversing isometry; there are two, mirror
    images of each other.  Filtering by squares_see_all_colors instead
    gives the same list.
    """
    found = enumerate_matching_colorings(
        e.graph, e.graph.n_colors,
        predicate=lambda c: classes_hit_all_directions(e, c),
        up_to_color_permutation=True)
    return found


# ------------------------------------------------- holonomy and lifting


def cycle_holonomy(e, cycle):
    """Sign picked up by lifting a closed cycle through the double cover.

    cycle is a sequence of at least 3 distinct vertex ids, consecutively
    adjacent, closing up at the end.  Each projective edge either keeps
    or flips the sign of the representative; the product over the cycle
    is +1 (the cycle lifts to two disjoint copies) or -1 (it lifts to a
    single cycle of twice the length).
    """
    if not e.projective:
        raise ValueError("holonomy needs a projective embedding")
    cycle = tuple(cycle)
    if len(cycle) < 3:
        raise ValueError("cycle must have at least 3 vertices")
    if len(set(cycle)) != len(cycle):
        raise ValueError("cycle revisits a vertex")
    pairs = set(e.graph.edge_pairs)
    sign = 1
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        if ((u, v) if u < v else (v, u)) not in pairs:
            raise ValueError("consecutive vertices %d, %d are not adjacent" % (u, v))
        x, y = e.coords[u], e.coords[v]
        diffs = sum(1 for j in range(len(x)) if x[j] != y[j])
        if diffs != 1:
            sign = -sign  # the step lands on the negated representative
    return sign


def lift_double_cover(e, coloring=None):
    """Lift a projective embedded graph to its double cover in R^4.

    Vertices become the full sign vectors (both preimages of each
    projective point); each edge lifts to the two axis edges joining
    preimages at Hamming distance one.  The coloring (default: the one
    on e.graph) is inherited by both lifts.  Returns the Euclidean
    EmbeddedGraph; the lifted coloring is on its graph.
    """
    if not e.projective:
        raise ValueError("only projective embeddings have a double cover")
    if coloring is None:
        coloring = Coloring.of(e.graph)
    dim = e.dimension
    reps = [tuple(x) for x in e.coords]
    cover_coords = []
    for x in reps:
        cover_coords.append(x)
    for x in reps:
        cover_coords.append(tuple(-c for c in x))
    # re-sort into the standard hypercube order when it matches, so the
    # lift of the quotient cube is the cube with its usual vertex ids
    if sorted(cover_coords) == sorted(_hypercube_rep(i) for i in range(2 ** dim)):
        cover_coords = [_hypercube_rep(i) for i in range(2 ** dim)]
    index = {x: i for i, x in enumerate(cover_coords)}

    lifted = set()
    for (u, v), c in zip(coloring.edge_pairs, coloring.colors):
        for xu in (reps[u], tuple(-t for t in reps[u])):
            for xv in (reps[v], tuple(-t for t in reps[v])):
                if sum(1 for j in range(dim) if xu[j] != xv[j]) == 1:
                    a, b = index[xu], index[xv]
                    lifted.add((min(a, b), max(a, b), c))
    g = ColoredGraph(len(cover_coords), coloring.n_colors, tuple(sorted(lifted)))
    return EmbeddedGraph(g, tuple(cover_coords), False)


def lift_cycle(e, cycle):
    """Lifts of a closed cycle to the double cover, as vertex-id cycles
    over lift_double_cover's vertex order.

    Holonomy +1 gives two disjoint lifted cycles, -1 a single doubled
    one.  Cycles are canonicalized; the list is sorted.
    """
    if not e.projective:
        raise ValueError("only projective embeddings have a double cover")
    cover = lift_double_cover(e)
    index = {x: i for i, x in enumerate(cover.coords)}
    cycle = tuple(cycle)
    out = []
    starts = [e.coords[cycle[0]], tuple(-c for c in e.coords[cycle[0]])]
    done = set()
    for start in starts:
        if index[start] in done:
            continue
        lifted, cur = [], start
        k = 0
        while True:
            lifted.append(index[cur])
            nxt_rep = e.coords[cycle[(k + 1) % len(cycle)]]
            cand = [nxt_rep, tuple(-c for c in nxt_rep)]
            cur = next(y for y in cand
                       if sum(1 for j in range(len(y)) if y[j] != cur[j]) == 1)
            k += 1
            if cur == start and k % len(cycle) == 0:
                break
        done.update(lifted)
        out.append(canonical_cycle(lifted))
    return sorted(out)


# ----------------------------------------------------------- exact rank


def affine_rank(points):
    """Dimension of the affine span of integer points, computed exactly.

    0 for a single point, 1 for a segment, 2 for a planar polygon; a
    genuinely skew polygon in R^4 reaches 3 or 4 (4 means the vertex set
    affinely spans the whole space, a polygon of full rank).
    """
    points = [tuple(p) for p in points]
    if len(points) <= 1:
        return 0
    base = points[0]
    rows = [[Fraction(x - b) for x, b in zip(p, base)] for p in points[1:]]
    rank, col_start = 0, 0
    ncols = len(base)
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / pr[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], pr)]
        rank += 1
    return rank


# ------------------------------------------------------------------ OFF


def off_text(e, p, comment=None):
    """OFF-style text for a polytope's 2-skeleton in its embedding.

    Projective input is exported as its double cover (the only faithful
    way to draw it in R^4), with the antipodal pairing flagged in the
    header comments.  Faces are the 2-faces as vertex index cycles;
    coordinates are the exact integer entries.
    """
    lines = ["nOFF", "4"]
    if comment:
        lines.append("# " + comment)

    if e.projective:
        cover = lift_double_cover(e)
        cycles = []
        for fid in p.faces_of_rank(2):
            cycles.extend(lift_cycle(e, two_face_cycle(p, fid)))
        cycles = sorted(set(cycles))
        index = {x: i for i, x in enumerate(cover.coords)}
        lines.append("# double cover of a projective embedding")
        pairs = sorted((i, index[tuple(-c for c in x)])
                       for i, x in enumerate(cover.coords)
                       if i < index[tuple(-c for c in x)])
        lines.append("# antipodal pairs: "
                     + " ".join("%d:%d" % pr for pr in pairs))
        coords = cover.coords
        n_edges = len(cover.graph.edges)
    else:
        cycles = sorted(two_face_cycle(p, fid) for fid in p.faces_of_rank(2))
        coords = e.coords
        n_edges = len(e.graph.edges)

    lines.append("%d %d %d" % (len(coords), len(cycles), n_edges))
    for x in coords:
        lines.append(" ".join("%d" % c for c in x))
    for cyc in cycles:
        lines.append("%d " % len(cyc) + " ".join("%d" % v for v in cyc))
    return "\n".join(lines) + "\n"
