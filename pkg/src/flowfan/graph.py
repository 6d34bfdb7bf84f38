"""Leg-weighted multigraphs with genera and an integer twist.

The formalism is half-edge based: a graph is a set of half-edges with an
involution and an endpoint map. Edges are the 2-element involution orbits,
legs are the fixed points. A directed edge is represented by its source
half (never a leg); its target is the endpoint of the partner half. Legs
carry prescribed integer weights and the graph carries a single integer
twist. Everything downstream (flows, cones, fans) is built on top of this
module.

Identifiers can be any hashable values; a total order on heterogeneous ids
is provided by :func:`sort_key` so that all derived data is deterministic.
"""

from dataclasses import dataclass

from .errors import UnknownEdge, UnknownVertex


def sort_key(x):
    """Total order on heterogeneous identifiers (ints, strings, tuples)."""
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, int):
        return (0, x, "")
    if isinstance(x, str):
        return (1, 0, x)
    if isinstance(x, tuple):
        return (2, 0, tuple(sort_key(y) for y in x))
    return (3, 0, repr(x))


@dataclass(frozen=True)
class Graph:
    """A connected leg-weighted graph with twist.

    Fields:
        genus_of: vertex id -> non-negative genus
        end: half-edge id -> vertex id
        involution: half-edge id -> half-edge id (legs are fixed points)
        leg_weights: leg half-edge id -> integer weight
        twist: the integer twist k

    Instances are treated as immutable once built; none of the operations
    in this package mutate a graph.
    """

    genus_of: dict
    end: dict
    involution: dict
    leg_weights: dict
    twist: int = 0

    @classmethod
    def build(cls, vertices, edges, legs=(), twist=0):
        """Assemble a graph from edge and leg descriptions.

        ``vertices`` maps vertex id -> genus, ``edges`` is an iterable of
        (edge id, from vertex, to vertex), ``legs`` of (leg id, vertex,
        weight). Half-edge ids become (edge id, 0) / (edge id, 1) for edges
        and (leg id,) for legs, matching the JSON document convention.
        """
        end = {}
        involution = {}
        leg_weights = {}
        for eid, u, v in edges:
            h0, h1 = (eid, 0), (eid, 1)
            end[h0], end[h1] = u, v
            involution[h0], involution[h1] = h1, h0
        for lid, v, w in legs:
            h = (lid,)
            end[h] = v
            involution[h] = h
            leg_weights[h] = int(w)
        return cls(dict(vertices), end, involution, leg_weights, int(twist))

    # -- basic accessors -------------------------------------------------

    def vertices(self):
        return sorted(self.genus_of, key=sort_key)

    def half_edges(self):
        return sorted(self.end, key=sort_key)

    def is_leg(self, h):
        return self.involution[h] == h

    def partner(self, h):
        return self.involution[h]

    def legs(self):
        return sorted((h for h in self.end if self.is_leg(h)), key=sort_key)

    def edge_of(self, h):
        """Canonical key of the edge containing a non-leg half: the smaller half id."""
        p = self.involution[h]
        return h if sort_key(h) <= sort_key(p) else p

    def edges(self):
        """Sorted canonical edge keys (one per 2-element involution orbit)."""
        seen = set()
        for h in self.end:
            if not self.is_leg(h):
                seen.add(self.edge_of(h))
        return sorted(seen, key=sort_key)

    def edge_halves(self, e):
        return e, self.involution[e]

    def source(self, h):
        """Source vertex of the directed edge given by source half ``h``."""
        return self.end[h]

    def target(self, h):
        return self.end[self.involution[h]]

    def is_loop(self, e):
        return self.end[e] == self.end[self.involution[e]]

    def halves_at(self, v):
        return sorted((h for h, w in self.end.items() if w == v), key=sort_key)

    def non_leg_halves_at(self, v):
        return [h for h in self.halves_at(v) if not self.is_leg(h)]

    def valence(self, v):
        return len(self.non_leg_halves_at(v))


# -- cycles ---------------------------------------------------------------


@dataclass(frozen=True)
class Cycle:
    """A directed simple cycle, stored as the ordered tuple of source halves.

    ``halves[i]`` is the half-edge at the start of the i-th directed edge;
    the target of each directed edge is the source of the next, cyclically.
    A single loop half is a valid cycle of length 1.
    """

    halves: tuple

    def edges(self, g):
        return tuple(g.edge_of(h) for h in self.halves)

    def edge_set(self, g):
        return frozenset(self.edges(g))

    def incidence(self, g):
        """Signed incidence: edge key -> +1 if traversed from its canonical
        source half, -1 otherwise."""
        out = {}
        for h in self.halves:
            e = g.edge_of(h)
            out[e] = 1 if h == e else -1
        return out

    def incidence_vector(self, g, edge_order):
        inc = self.incidence(g)
        return tuple(inc.get(e, 0) for e in edge_order)

    def reversed(self, g):
        return Cycle(tuple(g.partner(h) for h in reversed(self.halves)))

    def rotations(self):
        n = len(self.halves)
        return [self.halves[i:] + self.halves[:i] for i in range(n)]

    def canonical(self, g, allow_reversal=True):
        """Lexicographically smallest directed representative."""
        cands = self.rotations()
        if allow_reversal:
            cands += self.reversed(g).rotations()
        best = min(cands, key=lambda t: tuple(sort_key(h) for h in t))
        return Cycle(best)


# -- validation -----------------------------------------------------------


@dataclass(frozen=True)
class GraphReport:
    ok: bool
    problems: tuple = ()

    def codes(self):
        return [code for code, _ in self.problems]


def validate_graph(g: Graph) -> GraphReport:
    """Check the graph invariants on arbitrary candidate data.

    Reported codes: MalformedInvolution, NegativeGenus, Disconnected,
    LegSumMismatch and LegWeightMismatch (weights not matching the fixed
    points of the involution).
    """
    problems = []
    halves = set(g.end)
    for h in halves:
        p = g.involution.get(h)
        if p is None or p not in halves:
            problems.append(("MalformedInvolution",
                             f"half-edge {h!r} has no partner inside the graph"))
        elif g.involution.get(p) != h:
            problems.append(("MalformedInvolution",
                             f"involution is not self-inverse at {h!r}"))
    if set(g.involution) - halves:
        problems.append(("MalformedInvolution",
                         "involution defined on unknown half-edges"))
    for h in halves:
        if g.end[h] not in g.genus_of:
            problems.append(("MalformedInvolution",
                             f"half-edge {h!r} ends at unknown vertex {g.end[h]!r}"))
    if problems:
        return GraphReport(False, tuple(problems))

    for v, gv in g.genus_of.items():
        if gv < 0:
            problems.append(("NegativeGenus", f"vertex {v!r} has genus {gv}"))

    legs = {h for h in halves if g.involution[h] == h}
    if set(g.leg_weights) != legs:
        problems.append(("LegWeightMismatch",
                         "leg_weights domain differs from the involution's fixed points"))
    else:
        total = sum(g.leg_weights.values())
        want = -g.twist * (2 * graph_genus(g) - 2)
        if total != want:
            problems.append(("LegSumMismatch",
                             f"leg weights sum to {total}, expected {want}"))

    verts = set(g.genus_of)
    if verts:
        start = min(verts, key=sort_key)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for h in g.end:
                if g.end[h] == v and g.involution[h] != h:
                    w = g.end[g.involution[h]]
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        if seen != verts:
            problems.append(("Disconnected",
                             f"{len(verts) - len(seen)} vertices unreachable"))
    return GraphReport(not problems, tuple(problems))


# -- numeric invariants ----------------------------------------------------


def graph_genus(g: Graph) -> int:
    """First Betti number plus the sum of the vertex genera."""
    ne = len(g.edges())
    nv = len(g.genus_of)
    return ne - nv + 1 + sum(g.genus_of.values())


def canonical_degree(g: Graph, v) -> int:
    """2 * genus(v) - 2 + valence(v), counting non-leg half-edges."""
    if v not in g.genus_of:
        raise UnknownVertex(v)
    return 2 * g.genus_of[v] - 2 + g.valence(v)


def stability_report(g: Graph):
    """Advisory: vertices violating 2g(v) - 2 + val(v) + #legs(v) > 0.

    Stability of the underlying curve is never required by the fan
    machinery; this is informational only.
    """
    bad = []
    for v in g.vertices():
        nlegs = sum(1 for h in g.halves_at(v) if g.is_leg(h))
        if 2 * g.genus_of[v] - 2 + g.valence(v) + nlegs <= 0:
            bad.append(v)
    return bad


# -- spanning tree and cycle space -----------------------------------------


def _spanning_tree(g: Graph):
    """Deterministic DFS spanning tree from the smallest vertex.

    Returns (root, parent) where parent maps each non-root vertex to the
    half-edge at that vertex pointing toward its tree parent.
    """
    verts = g.vertices()
    if not verts:
        return None, {}
    root = verts[0]
    parent = {}
    seen = {root}
    stack = [root]
    while stack:
        v = stack.pop()
        for h in g.non_leg_halves_at(v):
            w = g.target(h)
            if w not in seen:
                seen.add(w)
                parent[w] = g.partner(h)  # half at w toward v
                stack.append(w)
    return root, parent


def _tree_path_halves(g, parent, u, v):
    """Directed halves along the tree path from u to v."""
    anc_u, anc_v = [u], [v]
    seen_u = {u}
    x = u
    while x in parent:
        x = g.target(parent[x])
        anc_u.append(x)
        seen_u.add(x)
    x = v
    while x not in seen_u:
        x = g.target(parent[x])
        anc_v.append(x)
    meet = x
    up = []
    x = u
    while x != meet:
        h = parent[x]
        up.append(h)
        x = g.target(h)
    down = []
    x = v
    while x != meet:
        h = parent[x]
        down.append(g.partner(h))
        x = g.target(h)
    return up + list(reversed(down))


def cycle_basis(g: Graph):
    """Fundamental cycles of the deterministic spanning tree.

    One cycle per non-tree edge, ordered by edge key. Each cycle traverses
    its non-tree edge from the edge's canonical source half and returns
    through the tree; the representative is rotated to its lexicographic
    minimum without reversal.
    """
    root, parent = _spanning_tree(g)
    tree_edges = {g.edge_of(h) for h in parent.values()}
    out = []
    for e in g.edges():
        if e in tree_edges:
            continue
        u, w = g.source(e), g.target(e)
        halves = (e,) + tuple(_tree_path_halves(g, parent, w, u))
        out.append(Cycle(halves).canonical(g, allow_reversal=False))
    return out


def enumerate_cycles(g: Graph):
    """All undirected simple cycles, one canonical representative each.

    Self-loops count as length-1 cycles; a cycle repeats no vertex and no
    undirected edge. Representatives are the lexicographically smallest
    directed form, sorted by (length, halves).
    """
    found = {}

    def close(path):
        cyc = Cycle(tuple(path)).canonical(g)
        found.setdefault(cyc.halves, cyc)

    def extend(path, used_edges, interior):
        v = g.target(path[-1])
        start = g.source(path[0])
        if v == start:
            close(path)
            return
        if v in interior:
            return
        interior = interior | {v}
        for h in g.non_leg_halves_at(v):
            e = g.edge_of(h)
            if e in used_edges:
                continue
            extend(path + [h], used_edges | {e}, interior)

    for h0 in sorted((h for h in g.end if not g.is_leg(h)), key=sort_key):
        extend([h0], {g.edge_of(h0)}, set())
    return sorted(found.values(),
                  key=lambda c: (len(c.halves), tuple(sort_key(h) for h in c.halves)))


# -- contraction ------------------------------------------------------------


@dataclass(frozen=True)
class ContractionResult:
    contracted: Graph
    vertex_map: dict
    edge_map: dict
    contracted_set: frozenset


def contract(g: Graph, edge_set) -> ContractionResult:
    """Contract a set of edges, merging endpoints with correct genera.

    Each connected component of the contracted subgraph collapses to one
    vertex (named after its smallest member) whose genus is the sum of the
    member genera plus the first Betti number of the component, so total
    genus is preserved and the canonical degree is additive.
    """
    edges = set(g.edges())
    S = set()
    for e in edge_set:
        if e not in edges:
            raise UnknownEdge(e)
        S.add(e)

    root = {v: v for v in g.genus_of}

    def find(v):
        while root[v] != v:
            root[v] = root[root[v]]
            v = root[v]
        return v

    for e in S:
        a, b = find(g.source(e)), find(g.target(e))
        if a != b:
            small, big = sorted((a, b), key=sort_key)
            root[big] = small
    vertex_map = {v: find(v) for v in g.genus_of}

    members = {}
    for v, r in vertex_map.items():
        members.setdefault(r, []).append(v)
    internal = {}
    for e in S:
        internal[vertex_map[g.source(e)]] = internal.get(vertex_map[g.source(e)], 0) + 1

    genus_of = {}
    for r, vs in members.items():
        betti = internal.get(r, 0) - len(vs) + 1
        genus_of[r] = sum(g.genus_of[v] for v in vs) + betti

    dropped = {h for e in S for h in g.edge_halves(e)}
    end = {h: vertex_map[v] for h, v in g.end.items() if h not in dropped}
    involution = {h: p for h, p in g.involution.items() if h not in dropped}
    contracted = Graph(genus_of, end, involution, dict(g.leg_weights), g.twist)
    edge_map = {e: e for e in edges - S}
    return ContractionResult(contracted, vertex_map, edge_map, frozenset(S))
