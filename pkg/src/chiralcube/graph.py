"""Edge-colored graphs whose color classes are perfect matchings.

A connected n-regular graph, properly edge-colored with n colors, encodes
an incidence structure: taking connected components of color-subset
subgraphs as faces yields a polytope-like poset (built in polytope.py).
This module owns the graph side: the colored graph type, structural
validation, color-subset components, exhaustive search over matching
colorings, and isomorphism up to renaming of colors.

Vertices are 0..n_vertices-1.  Edges are stored canonically as
(u, v, color) triples with u < v, sorted lexicographically, so two equal
graphs compare equal and serialize identically.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field


class GraphError(ValueError):
    """A graph violates the structural requirements of an operation."""


# ---------------------------------------------------------------- types


@dataclass(frozen=True)
class ColoredGraph:
    n_vertices: int
    n_colors: int
    edges: tuple  # of (u, v, color), u < v, sorted

    def __post_init__(self):
        norm = []
        for u, v, c in self.edges:
            if u == v:
                raise GraphError("loop at vertex %d" % u)
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise GraphError("edge (%d,%d) out of range" % (u, v))
            if not (0 <= c < self.n_colors):
                raise GraphError("color %d out of range" % c)
            norm.append((u, v, c) if u < v else (v, u, c))
        norm.sort()
        pairs = [e[:2] for e in norm]
        if len(set(pairs)) != len(pairs):
            dup = next(p for p in pairs if pairs.count(p) > 1)
            raise GraphError("duplicate edge (%d,%d)" % dup)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def edge_pairs(self):
        """Endpoint pairs in canonical order, colors stripped."""
        return tuple((u, v) for u, v, _ in self.edges)

    def color_of(self, u, v):
        if u > v:
            u, v = v, u
        for a, b, c in self.edges:
            if (a, b) == (u, v):
                return c
        raise KeyError((u, v))

    def adjacency(self):
        adj = defaultdict(set)
        for u, v, _ in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self):
        deg = [0] * self.n_vertices
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def color_classes(self):
        """Map color -> sorted tuple of endpoint pairs carrying it."""
        cls = defaultdict(list)
        for u, v, c in self.edges:
            cls[c].append((u, v))
        return {c: tuple(sorted(es)) for c, es in cls.items()}

    def recolored(self, coloring):
        """Same skeleton, colors replaced by `coloring` (a Coloring)."""
        if coloring.edge_pairs != self.edge_pairs:
            raise GraphError("coloring is over a different edge list")
        return ColoredGraph(
            self.n_vertices,
            coloring.n_colors,
            tuple((u, v, c) for (u, v), c in zip(self.edge_pairs, coloring.colors)),
        )

    def to_json(self):
        return {
            "n_vertices": self.n_vertices,
            "n_colors": self.n_colors,
            "edges": [[u, v, c] for u, v, c in self.edges],
        }

    @staticmethod
    def from_json(data):
        return ColoredGraph(
            int(data["n_vertices"]),
            int(data["n_colors"]),
            tuple((int(u), int(v), int(c)) for u, v, c in data["edges"]),
        )


@dataclass(frozen=True)
class Coloring:
    """A color assignment over a fixed canonical edge list.

    Kept separate from ColoredGraph so that many colorings of one skeleton
    can be enumerated, filtered and compared without copying the graph.
    """

    edge_pairs: tuple  # of (u, v), u < v, strictly increasing
    colors: tuple      # parallel to edge_pairs
    n_colors: int

    def __post_init__(self):
        if len(self.edge_pairs) != len(self.colors):
            raise GraphError("colors not parallel to edge list")
        if tuple(sorted(set(self.edge_pairs))) != tuple(self.edge_pairs):
            raise GraphError("edge list not canonical")
        if any(u >= v for u, v in self.edge_pairs):
            raise GraphError("edge list not canonical")
        if any(not (0 <= c < self.n_colors) for c in self.colors):
            raise GraphError("color out of range")

    @staticmethod
    def of(g):
        """Extract the coloring carried by a ColoredGraph."""
        return Coloring(g.edge_pairs, tuple(c for _, _, c in g.edges), g.n_colors)

    def color_of(self, u, v):
        if u > v:
            u, v = v, u
        return self.colors[self.edge_pairs.index((u, v))]

    def classes(self):
        cls = defaultdict(list)
        for (u, v), c in zip(self.edge_pairs, self.colors):
            cls[c].append((u, v))
        return {c: tuple(es) for c, es in cls.items()}

    def permuted(self, color_map):
        """Rename colors: color c becomes color_map[c]."""
        return Coloring(self.edge_pairs, tuple(color_map[c] for c in self.colors),
                        self.n_colors)

    def canonical(self):
        """Representative of the color-permutation class: colors relabeled
        in order of first appearance along the canonical edge list."""
        rename, nxt = {}, 0
        out = []
        for c in self.colors:
            if c not in rename:
                rename[c] = nxt
                nxt += 1
            out.append(rename[c])
        return Coloring(self.edge_pairs, tuple(out), self.n_colors)


# ----------------------------------------------------------- validation


def validate(g):
    """Check the matching-coloring requirements; return diagnostics.

    An empty list means g is connected, n_colors-regular, properly
    edge-colored, and every color class is a perfect matching.  Each
    diagnostic names the violated rule and the offending element.
    """
    problems = []
    deg = g.degrees()
    for v in range(g.n_vertices):
        if deg[v] != g.n_colors:
            problems.append("vertex %d has degree %d, expected %d"
                            % (v, deg[v], g.n_colors))
    seen_at = defaultdict(set)  # vertex -> colors seen
    for u, v, c in g.edges:
        for x in (u, v):
            if c in seen_at[x]:
                problems.append("color %d repeated at vertex %d (not a proper coloring)"
                                % (c, x))
            seen_at[x].add(c)
    for c in range(g.n_colors):
        covered = set()
        for u, v, cc in g.edges:
            if cc == c:
                covered.update((u, v))
        if len(covered) != g.n_vertices:
            problems.append("color %d covers %d of %d vertices (not a perfect matching)"
                            % (c, len(covered), g.n_vertices))
    comps = components_by_colorset(g, range(g.n_colors))
    if len(comps) != 1:
        problems.append("graph is disconnected: %d components" % len(comps))
    return problems


def components_by_colorset(g, colors):
    """Connected components of the subgraph with edge colors in `colors`.

    Every vertex of g is kept, so an uncovered vertex forms a singleton
    component (in particular colors=() yields one component per vertex).
    Returns [(vertex tuple, edge-pair tuple), ...] sorted by least vertex.
    """
    want = set(colors)
    bad = sorted(c for c in want if not 0 <= c < g.n_colors)
    if bad:
        raise GraphError("unknown color ids %s (graph has colors 0..%d)"
                         % (bad, g.n_colors - 1))
    sub = [(u, v) for u, v, c in g.edges if c in want]
    adj = defaultdict(set)
    for u, v in sub:
        adj[u].add(v)
        adj[v].add(u)
    comps, seen = [], set()
    for start in range(g.n_vertices):
        if start in seen:
            continue
        comp, stack = set(), [start]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adj[x] - comp)
        seen |= comp
        comp_edges = tuple(e for e in sub if e[0] in comp and e[1] in comp)
        comps.append((tuple(sorted(comp)), tuple(sorted(comp_edges))))
    return comps


# ----------------------------------------------------- coloring search


def enumerate_matching_colorings(g, k=None, predicate=None,
                                 up_to_color_permutation=False):
    """All proper k-edge-colorings of g's skeleton, by backtracking.

    g must be k-regular (its own colors are ignored); then properness
    forces every color class to be a perfect matching.  With
    up_to_color_permutation=True only canonical representatives are
    produced (colors first appear in increasing order along the edge
    list), one per color-permutation class.  `predicate`, if given,
    filters completed colorings.  Output order is lexicographic in the
    color tuple, hence deterministic.
    """
    if k is None:
        k = g.n_colors
    deg = g.degrees()
    bad = [v for v in range(g.n_vertices) if deg[v] != k]
    if bad:
        raise GraphError("graph is not %d-regular at vertices %s" % (k, bad))

    pairs = g.edge_pairs
    m = len(pairs)
    used = [set() for _ in range(g.n_vertices)]  # colors present at vertex
    assign = [0] * m
    out = []

    def extend(i, next_new):
        if i == m:
            col = Coloring(pairs, tuple(assign), k)
            if predicate is None or predicate(col):
                out.append(col)
            return
        u, v = pairs[i]
        limit = min(k, next_new + 1) if up_to_color_permutation else k
        for c in range(limit):
            if c in used[u] or c in used[v]:
                continue
            assign[i] = c
            used[u].add(c)
            used[v].add(c)
            extend(i + 1, max(next_new, c + 1))
            used[u].remove(c)
            used[v].remove(c)

    extend(0, 0)
    return out


# -------------------------------------------------------- isomorphism


def iter_colored_isomorphisms(g1, g2):
    """Yield every isomorphism g1 -> g2 respecting colors up to renaming.

    Witnesses come out as (vertex_map, color_map) tuples (vertex_map[v]
    and color_map[c] are the images), in a deterministic order.
    Backtracks over g1's vertices in BFS order, extending a
    partial color bijection as edges become determined; both constraints
    prune early.  With g1 is g2 this enumerates the color-respecting
    automorphism group.
    """
    if (g1.n_vertices != g2.n_vertices or g1.n_colors != g2.n_colors
            or len(g1.edges) != len(g2.edges)):
        return
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return
    sizes1 = sorted(len(es) for es in g1.color_classes().values())
    sizes2 = sorted(len(es) for es in g2.color_classes().values())
    if sizes1 != sizes2:
        return

    adj1, adj2 = g1.adjacency(), g2.adjacency()
    deg1, deg2 = g1.degrees(), g2.degrees()
    col1 = {(u, v): c for u, v, c in g1.edges}
    col2 = {(u, v): c for u, v, c in g2.edges}

    def color1(x, y):
        return col1[(x, y) if x < y else (y, x)]

    def color2(x, y):
        return col2[(x, y) if x < y else (y, x)]

    # BFS order: each later vertex (after a component root) has an
    # assigned neighbor, so candidate images are constrained immediately.
    order, seen = [], set()
    for s in range(g1.n_vertices):
        if s in seen:
            continue
        queue = [s]
        seen.add(s)
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in sorted(adj1[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)

    vmap = [-1] * g1.n_vertices
    used_img = [False] * g2.n_vertices
    cmap = {}   # partial color bijection
    cinv = {}

    def consistent(x, y):
        """Try extending by x -> y.  Mutates cmap/cinv; returns
        (ok, colors added) so the caller can roll back."""
        added = []
        for n1 in adj1[x]:
            img = vmap[n1]
            if img < 0:
                continue
            if img not in adj2[y]:
                return False, added
            c1 = color1(x, n1)
            c2 = color2(y, img)
            if c1 in cmap:
                if cmap[c1] != c2:
                    return False, added
            elif c2 in cinv:
                return False, added
            else:
                cmap[c1] = c2
                cinv[c2] = c1
                added.append(c1)
        return True, added

    def rollback(added):
        for c1 in added:
            del cinv[cmap[c1]]
            del cmap[c1]

    def finish_witness():
        # colors unused by g1 (impossible when classes are matchings,
        # possible in general) get mapped to the free colors in order
        fill = [cmap.get(c) for c in range(g1.n_colors)]
        spare = sorted(set(range(g1.n_colors)) - set(cinv))
        for i, c in enumerate(fill):
            if c is None:
                fill[i] = spare.pop(0)
        color_map = tuple(fill)
        mapped = set()
        for u, v, c in g1.edges:
            a, b = vmap[u], vmap[v]
            if a > b:
                a, b = b, a
            mapped.add((a, b, color_map[c]))
        assert mapped == set(g2.edges), "isomorphism witness failed verification"
        return tuple(vmap), color_map

    def place(i):
        if i == len(order):
            yield finish_witness()
            return
        x = order[i]
        for y in range(g2.n_vertices):
            if used_img[y] or deg2[y] != deg1[x]:
                continue
            ok, added = consistent(x, y)
            if ok:
                vmap[x] = y
                used_img[y] = True
                yield from place(i + 1)
                used_img[y] = False
                vmap[x] = -1
            rollback(added)

    yield from place(0)


def colored_isomorphism(g1, g2):
    """First color-respecting isomorphism g1 -> g2, or None.

    The witness is (vertex_map, color_map); see iter_colored_isomorphisms.
    """
    return next(iter_colored_isomorphisms(g1, g2), None)
