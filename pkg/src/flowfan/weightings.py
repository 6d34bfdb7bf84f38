"""Integer weightings (flows) on a leg-weighted graph.

A weighting assigns an integer to every half-edge so that opposite halves
cancel and every vertex balances the twist times its canonical degree:

    w(h) + w(h') = 0                 for non-leg pairs {h, h'},
    sum_{end(h)=v} w(h) + k*kappa(v) = 0   at every vertex v,

with prescribed values on legs. The *flow* of an edge is the value carried
by the target half of its canonical orientation; "flow a from u to v"
means the half at v carries +a. For a directed edge the value on its
source half is what enters every cone constraint downstream.
"""

from dataclasses import dataclass

from .errors import MissingHalfEdge
from .graph import Graph, Cycle, canonical_degree, cycle_basis, sort_key


@dataclass(frozen=True)
class Weighting:
    graph: Graph
    values: dict  # half-edge id -> int

    def value(self, h):
        return self.values[h]

    def flow(self, e):
        """Flow along the canonical orientation of edge ``e``."""
        return self.values[self.graph.involution[e]]

    def flows(self):
        return {e: self.flow(e) for e in self.graph.edges()}

    def source_value(self, h):
        """Value on the source half of the directed edge ``h``."""
        return self.values[h]

    def max_abs(self):
        return max((abs(x) for x in self.values.values()), default=0)


def is_weighting(g: Graph, candidate):
    """Check the two weighting conditions and the prescribed leg values.

    ``candidate`` is a Weighting or a dict of half-edge values covering all
    half-edges (raises MissingHalfEdge otherwise). Returns (ok, defects)
    where defects maps each vertex to sum_{h at v} w(h) + k*kappa(v); this
    is the per-component degree the flow leaves uncancelled, so a valid
    weighting has an identically zero defect vector.
    """
    values = candidate.values if isinstance(candidate, Weighting) else candidate
    for h in g.end:
        if h not in values:
            raise MissingHalfEdge(h)
    ok = True
    for h in g.end:
        p = g.involution[h]
        if p != h and values[h] + values[p] != 0:
            ok = False
        if p == h and values[h] != g.leg_weights[h]:
            ok = False
    defects = {}
    for v in g.vertices():
        d = sum(values[h] for h in g.halves_at(v)) + g.twist * canonical_degree(g, v)
        defects[v] = d
        if d != 0:
            ok = False
    return ok, defects


def _complete_values(g: Graph, free_edges, fixed):
    """Extend ``fixed`` half-edge values over ``free_edges`` so every vertex
    balances. Non-tree free edges get zero flow; tree flows are solved
    bottom-up. Existence relies on connectivity of each free component and
    on the fixed part summing to the right demands.
    """
    values = dict(fixed)
    free = set(free_edges)
    for e in free:
        values[e] = 0
        values[g.involution[e]] = 0

    # components of the free subgraph
    comp = {}
    for e in free:
        for v in (g.source(e), g.target(e)):
            comp.setdefault(v, v)

    def find(v):
        while comp[v] != v:
            comp[v] = comp[comp[v]]
            v = comp[v]
        return v

    for e in free:
        a, b = find(g.source(e)), find(g.target(e))
        if a != b:
            small, big = sorted((a, b), key=sort_key)
            comp[big] = small

    groups = {}
    for v in comp:
        groups.setdefault(find(v), []).append(v)

    for rep, verts in sorted(groups.items(), key=lambda kv: sort_key(kv[0])):
        vset = set(verts)
        # DFS tree inside the component over free edges
        parent = {}
        order = []
        seen = {min(vset, key=sort_key)}
        stack = [min(vset, key=sort_key)]
        while stack:
            v = stack.pop()
            order.append(v)
            for h in g.non_leg_halves_at(v):
                if g.edge_of(h) in free:
                    w = g.target(h)
                    if w not in seen:
                        seen.add(w)
                        parent[w] = g.partner(h)
                        stack.append(w)
        # solve leaf-first: the half toward the parent carries whatever makes
        # the vertex balance (children and non-tree halves are already set)
        for v in reversed(order):
            if v not in parent:
                continue
            h = parent[v]
            residue = -g.twist * canonical_degree(g, v) - sum(
                values[x] for x in g.halves_at(v) if x != h)
            values[h] = residue
            values[g.involution[h]] = -residue
    return values


def base_weighting(g: Graph) -> Weighting:
    """Deterministic valid weighting: zero flow off the spanning tree,
    tree flows solved from the per-vertex demands."""
    fixed = {h: g.leg_weights[h] for h in g.end if g.is_leg(h)}
    values = _complete_values(g, g.edges(), fixed)
    w = Weighting(g, values)
    ok, defects = is_weighting(g, w)
    assert ok, f"base weighting failed to balance: {defects}"
    return w


def shift_by_cycles(g: Graph, w: Weighting, coeffs) -> Weighting:
    """Act by the cycle space: add ``coeffs[i]`` units of circulation along
    the i-th basis cycle. The flow difference equals the integer combination
    of the basis incidence vectors."""
    basis = cycle_basis(g)
    if len(coeffs) != len(basis):
        raise ValueError(f"expected {len(basis)} coefficients, got {len(coeffs)}")
    values = dict(w.values)
    for c, cyc in zip(coeffs, basis):
        if c == 0:
            continue
        for h in cyc.halves:
            values[h] -= c
            values[g.involution[h]] += c
    return Weighting(g, values)


def shift_along_cycle(g: Graph, w: Weighting, cyc: Cycle, amount: int) -> Weighting:
    """Add ``amount`` units of circulation along one explicit directed cycle."""
    values = dict(w.values)
    for h in cyc.halves:
        values[h] -= amount
        values[g.involution[h]] += amount
    return Weighting(g, values)


def restrict_weighting(g: Graph, w: Weighting, contraction) -> Weighting:
    """Carry a weighting over to a contracted graph (values on surviving
    half-edges are kept; balance follows from additivity of the canonical
    degree)."""
    gc = contraction.contracted
    values = {h: w.values[h] for h in gc.end}
    return Weighting(gc, values)


def lift_weighting(g: Graph, contraction, w_small: Weighting) -> Weighting:
    """Right inverse of :func:`restrict_weighting`: extend a weighting of the
    contracted graph over the contracted edges (zero flow off a spanning
    tree of each contracted component)."""
    fixed = dict(w_small.values)
    values = _complete_values(g, contraction.contracted_set, fixed)
    return Weighting(g, values)


def _positive_cycle_halves(g: Graph, values):
    """Directed cycle whose source halves all carry positive values, or None.

    DFS over the digraph with one arc per positively valued non-leg half.
    """
    arcs = {}
    for v in g.vertices():
        arcs[v] = [h for h in g.non_leg_halves_at(v) if values[h] > 0]
    state = {v: 0 for v in arcs}  # 0 new, 1 on stack, 2 done
    for v0 in g.vertices():
        if state[v0] != 0:
            continue
        path = []  # halves
        stack = [(v0, iter(arcs[v0]))]
        state[v0] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for h in it:
                t = g.target(h)
                if state[t] == 1:
                    # back arc closes a cycle: the path segment from t, then h
                    if t == v:
                        return (h,)
                    for i, ph in enumerate(path):
                        if g.source(ph) == t:
                            return tuple(path[i:] + [h])
                    raise AssertionError("gray vertex missing from the path")
                if state[t] == 0:
                    path.append(h)
                    state[t] = 1
                    stack.append((t, iter(arcs[t])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                state[v] = 2
                if path:
                    path.pop()
    return None


def find_positive_cycle(g: Graph, w: Weighting):
    """A directed cycle along which the weighting is strictly positive on
    every source half, or None. Such a cycle forces its edge coordinates to
    vanish on the whole compatibility cone."""
    halves = _positive_cycle_halves(g, w.values)
    if halves is None:
        return None
    return Cycle(halves).canonical(g, allow_reversal=False)


def has_positive_cycle(g: Graph, values) -> bool:
    return _positive_cycle_halves(g, values) is not None


def enumeration_bound(g: Graph, w: Weighting) -> int:
    """The proved box bound N = m * phi(h): every weighting differing from
    ``w`` by a cycle-space vector of sup norm above N admits a positive
    cycle. Here m is the largest absolute half-edge value, h the first
    Betti number, and phi(0) = 1, phi(n) = sum_{j<n} phi(j)."""
    h = len(g.edges()) - len(g.genus_of) + 1
    phi = [1]
    for n in range(1, h + 1):
        phi.append(sum(phi))
    return w.max_abs() * phi[h]
