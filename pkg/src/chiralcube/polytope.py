"""Face posets built from color components, and their flag combinatorics.

Rank-i faces are the connected components of the subgraphs spanned by
i-element color subsets; a component of a smaller color set lying inside
a component of a larger one is the incidence relation.  For a connected
n-regular graph properly colored with n colors so that every class is a
perfect matching, this poset is an abstract polytope of rank n.

The Polytope type does not assume the poset is polytopal: it can hold
any finite set of faces with the structural order (rank, vertex set and
edge set all contained), so near-misses can be represented and
diagnosed.  check_polytopality reports exactly what fails.  The flag
machinery (flag graph, Schlafli symbol, Petrie polygons) requires the
diamond condition and raises where it breaks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import GraphError, components_by_colorset, validate


@dataclass(frozen=True)
class Face:
    id: int
    rank: int
    colors: frozenset
    vertices: frozenset
    edges: frozenset  # endpoint pairs (u, v), u < v


def _face_key(rank, vertices, edges):
    # rank >= 1 faces are determined by their edge set (a component uses
    # every one of its colors at every vertex); vertices key the rest
    return (rank, frozenset(vertices)) if rank <= 0 else (rank, frozenset(edges))


class Polytope:
    """A ranked face poset ordered by containment.

    faces[i].id == i always; face order (and hence ids) is deterministic
    for posets built by colourful_polytope.  Incidence: f <= g iff
    f.rank <= g.rank, f.vertices <= g.vertices and f.edges <= g.edges.
    """

    def __init__(self, rank, faces, source_graph=None):
        self.rank = rank
        self.faces = tuple(faces)
        self.source_graph = source_graph
        for i, f in enumerate(self.faces):
            if f.id != i:
                raise ValueError("face ids must equal positions (face %d)" % i)
        self._by_rank = {}
        for f in self.faces:
            self._by_rank.setdefault(f.rank, []).append(f.id)
        # keys seen twice are ambiguous; only unique keys are indexed
        counts = {}
        for f in self.faces:
            k = _face_key(f.rank, f.vertices, f.edges)
            counts[k] = counts.get(k, 0) + 1
        self._index = {
            _face_key(f.rank, f.vertices, f.edges): f.id
            for f in self.faces
            if counts[_face_key(f.rank, f.vertices, f.edges)] == 1
        }
        self._up = None
        self._fg = None

    # ------------------------------------------------------ structure

    def faces_of_rank(self, r):
        return tuple(self._by_rank.get(r, ()))

    def face_index(self, rank, vertices, edges):
        """Id of the face with this rank and vertex/edge set, or None."""
        return self._index.get(_face_key(rank, vertices, edges))

    def leq(self, i, j):
        f, g = self.faces[i], self.faces[j]
        return (f.rank <= g.rank and f.vertices <= g.vertices
                and f.edges <= g.edges)

    def _ups(self):
        if self._up is None:
            n = len(self.faces)
            self._up = [frozenset(j for j in range(n) if self.leq(i, j))
                        for i in range(n)]
        return self._up

    def between(self, lo, hi, rank):
        """Ids of rank-`rank` faces f with lo <= f <= hi."""
        ups = self._ups()
        return tuple(m for m in self.faces_of_rank(rank)
                     if m in ups[lo] and hi in ups[m])

    def covers(self):
        """All covering pairs (i, j): i < j with no face strictly between."""
        ups = self._ups()
        out = []
        for i, f in enumerate(self.faces):
            for j in ups[i]:
                if j == i:
                    continue
                g = self.faces[j]
                strictly_between = any(
                    k != i and k != j and j in self._ups()[k]
                    for k in ups[i])
                if not strictly_between:
                    out.append((i, j))
        return tuple(sorted(out))

    def section(self, bottom, top):
        """The interval [bottom, top] as a polytope in its own right.

        Face ranks are shifted so the bottom face gets rank -1.
        """
        if not self.leq(bottom, top):
            raise ValueError("bottom %d is not below top %d" % (bottom, top))
        ups = self._ups()
        ids = sorted(i for i in range(len(self.faces))
                     if i in ups[bottom] and top in ups[i])
        shift = self.faces[bottom].rank + 1
        faces = tuple(
            Face(new_id, self.faces[i].rank - shift, self.faces[i].colors,
                 self.faces[i].vertices, self.faces[i].edges)
            for new_id, i in enumerate(ids))
        return Polytope(self.faces[top].rank - shift, faces)

    # ----------------------------------------------------------- flags

    def flag_graph(self):
        if self._fg is None:
            self._fg = _build_flag_graph(self)
        return self._fg


@dataclass(frozen=True)
class FlagGraph:
    """All flags of a polytope with their i-adjacency involutions.

    A flag is a tuple of proper face ids, one per rank 0..n-1 (improper
    faces are in every flag and omitted).  adj[j][i] is the unique flag
    differing from flag j exactly in rank i.
    """

    flags: tuple
    index: dict
    adj: tuple

    def adjacent(self, j, i):
        return self.adj[j][i]

    def __len__(self):
        return len(self.flags)


def _bottom_top(p):
    bots = p.faces_of_rank(-1)
    tops = p.faces_of_rank(p.rank)
    if len(bots) != 1 or len(tops) != 1:
        raise GraphError("poset lacks unique improper faces (%d bottom, %d top)"
                         % (len(bots), len(tops)))
    return bots[0], tops[0]


def _build_flag_graph(p):
    bottom, top = _bottom_top(p)
    ups = p._ups()

    flags = []

    def grow(chain, below):
        r = len(chain)
        if r == p.rank:
            if top in ups[chain[-1]]:
                flags.append(tuple(chain))
            return
        for f in p.faces_of_rank(r):
            if below == bottom or f in ups[below]:
                grow(chain + [f], f)

    grow([], bottom)
    flags.sort()
    index = {fl: i for i, fl in enumerate(flags)}

    adj = []
    for fl in flags:
        row = []
        for i in range(p.rank):
            lo = fl[i - 1] if i > 0 else bottom
            hi = fl[i + 1] if i < p.rank - 1 else top
            mids = [m for m in p.between(lo, hi, i) if m != fl[i]]
            if len(mids) != 1:
                raise GraphError(
                    "diamond fails between faces %d and %d: %d alternatives"
                    % (lo, hi, len(mids) + 1))
            row.append(index[fl[:i] + (mids[0],) + fl[i + 1:]])
        adj.append(tuple(row))
    return FlagGraph(tuple(flags), index, tuple(adj))


# ------------------------------------------------------------- builders


def colourful_polytope(g):
    """The face poset of color-subset components of g.

    g must pass validate() (connected, n-regular, properly n-colored,
    matching classes); GraphError carrying the diagnostics otherwise.
    Face ids are deterministic: by rank, then by color set, then by
    least vertex.
    """
    problems = validate(g)
    if problems:
        raise GraphError("graph is not matching-colored: " + "; ".join(problems))
    n = g.n_colors
    faces = [Face(0, -1, frozenset(), frozenset(), frozenset())]
    for r in range(0, n + 1):
        for cs in itertools.combinations(range(n), r):
            for verts, es in components_by_colorset(g, cs):
                faces.append(Face(len(faces), r, frozenset(cs),
                                  frozenset(verts), frozenset(es)))
    return Polytope(n, tuple(faces), source_graph=g)


# ------------------------------------------------------------ checking


def check_polytopality(p):
    """Diagnostics for the abstract polytope axioms; empty means polytopal.

    Checks, in order: unique improper faces, gradedness (covers step one
    rank), the diamond condition, and strong flag connectivity (every
    section of rank at least 2 is flag-connected).
    """
    problems = []
    bots = p.faces_of_rank(-1)
    tops = p.faces_of_rank(p.rank)
    if len(bots) != 1:
        problems.append("expected one rank -1 face, found %d" % len(bots))
    if len(tops) != 1:
        problems.append("expected one rank %d face, found %d" % (p.rank, len(tops)))
    if problems:
        return problems
    bottom, top = bots[0], tops[0]

    ups = p._ups()
    for i, f in enumerate(p.faces):
        if i == top:
            continue
        above = [j for j in ups[i] if j != i]
        if not above:
            problems.append("face %d (rank %d) has nothing above it" % (i, f.rank))
            continue
        covers = [j for j in above
                  if not any(k in ups[i] and j in ups[k] and k not in (i, j)
                             for k in above)]
        for j in covers:
            if p.faces[j].rank != f.rank + 1:
                problems.append(
                    "cover %d -> %d jumps rank %d -> %d (not graded)"
                    % (i, j, f.rank, p.faces[j].rank))
    if problems:
        return problems

    for i in range(len(p.faces)):
        for j in ups[i]:
            if p.faces[j].rank != p.faces[i].rank + 2:
                continue
            mids = p.between(i, j, p.faces[i].rank + 1)
            if len(mids) != 2:
                problems.append(
                    "diamond fails: faces %d < %d have %d faces between"
                    % (i, j, len(mids)))
    if problems:
        return problems

    for i in range(len(p.faces)):
        for j in ups[i]:
            if p.faces[j].rank - p.faces[i].rank < 3:
                continue
            sec = p.section(i, j)
            fg = sec.flag_graph()
            if not fg.flags:
                problems.append("section [%d, %d] has no flags" % (i, j))
                continue
            seen, stack = set(), [0]
            while stack:
                x = stack.pop()
                if x in seen:
                    continue
                seen.add(x)
                stack.extend(fg.adj[x])
            if len(seen) != len(fg.flags):
                problems.append(
                    "section [%d, %d] is not flag-connected (%d of %d flags reached)"
                    % (i, j, len(seen), len(fg.flags)))
    return problems


# ------------------------------------------------------- flag geometry


def flag_graph(p):
    """All flags of p with their i-adjacency maps (cached on p)."""
    return p.flag_graph()


def f_vector(p):
    return tuple(len(p.faces_of_rank(r)) for r in range(p.rank))


def schlafli_type(p):
    """Schlafli symbol (p_1, ..., p_{n-1}), or None if not equivelar.

    p_i is the length of the orbit of a flag under the rotation
    rho_{i-1} rho_i; it must not depend on the flag.
    """
    fg = p.flag_graph()
    out = []
    for i in range(1, p.rank):
        lengths = set()
        for j in range(len(fg.flags)):
            steps, cur = 0, j
            while True:
                cur = fg.adjacent(fg.adjacent(cur, i - 1), i)
                steps += 1
                if cur == j:
                    break
            lengths.add(steps)
        if len(lengths) != 1:
            return None
        out.append(lengths.pop())
    return tuple(out)


def canonical_cycle(cycle):
    """Least representative of a cyclic sequence under rotation and
    reversal; makes cycles comparable as plain tuples."""
    cycle = tuple(cycle)
    best = None
    for seq in (cycle, cycle[::-1]):
        for s in range(len(seq)):
            cand = seq[s:] + seq[:s]
            if best is None or cand < best:
                best = cand
    return best


def _flag_vertex(p, fg, j):
    return min(p.faces[fg.flags[j][0]].vertices)


def petrie_polygons(p):
    """Canonical vertex cycles of the zigzag walks of p.

    The walk applies rho_0, rho_1, ..., rho_{n-1} in order, repeatedly;
    the vertices visited before each pass, collected until the starting
    flag recurs, form one polygon.  Walks from all flags, deduplicated,
    sorted; so the output is deterministic.  Only rank 4 is supported
    (the walk itself generalizes but nothing here is tested below it).
    """
    if p.rank != 4:
        raise GraphError("petrie walk needs a rank-4 polytope, got rank %d"
                         % p.rank)
    fg = p.flag_graph()
    seen = set()
    for j in range(len(fg.flags)):
        verts, cur = [], j
        while True:
            verts.append(_flag_vertex(p, fg, cur))
            for i in range(p.rank):
                cur = fg.adjacent(cur, i)
            if cur == j:
                break
        seen.add(canonical_cycle(verts))
    return tuple(sorted(seen))


def two_face_cycle(p, fid):
    """Vertex cycle of a rank-2 face, canonicalized."""
    f = p.faces[fid]
    if f.rank != 2:
        raise ValueError("face %d has rank %d, expected 2" % (fid, f.rank))
    adj = {}
    for u, v in f.edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = min(f.vertices)
    cyc, prev = [start], None
    while True:
        nxts = [x for x in adj[cyc[-1]] if x != prev]
        nxt = min(nxts)
        if nxt == start:
            break
        prev = cyc[-1]
        cyc.append(nxt)
    return canonical_cycle(cyc)


def two_face_cycles(p):
    """Canonical cycles of all rank-2 faces, sorted."""
    return tuple(sorted(two_face_cycle(p, fid) for fid in p.faces_of_rank(2)))


# ---------------------------------------------------------------- JSON


def to_json(p):
    """JSON-ready description: faces by rank, cover pairs, flag count,
    Schlafli symbol and f-vector."""
    fg = p.flag_graph()
    return {
        "rank": p.rank,
        "f_vector": list(f_vector(p)),
        "n_flags": len(fg.flags),
        "schlafli": list(schlafli_type(p) or ()) or None,
        "faces": [
            {
                "id": f.id,
                "rank": f.rank,
                "colors": sorted(f.colors),
                "vertices": sorted(f.vertices),
            }
            for f in p.faces
        ],
        "covers": [list(c) for c in p.covers()],
    }
