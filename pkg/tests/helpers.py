"""Shared graph constructors and the randomized test corpus."""

import random

from flowfan import Graph, graph_genus, validate_graph


def two_gon(n, twist=0):
    """Two vertices joined by two edges, legs +n at u and -n at v."""
    return Graph.build(
        {"u": 0, "v": 0},
        [("e1", "u", "v"), ("e2", "u", "v")],
        [("p", "u", n), ("q", "v", -n)],
        twist,
    )


def banana(num_edges, n, twist=0):
    """Two vertices joined by ``num_edges`` parallel edges, legs +n / -n."""
    edges = [(f"e{i}", "u", "v") for i in range(1, num_edges + 1)]
    return Graph.build({"u": 0, "v": 0}, edges,
                       [("p", "u", n), ("q", "v", -n)], twist)


def loop_graph(genus=1, legs=(), twist=0):
    """One vertex with a single self-loop."""
    return Graph.build({"u": genus}, [("e1", "u", "u")],
                       [(f"l{i}", "u", w) for i, w in enumerate(legs)], twist)


def one_edge_genus1(twist=1):
    """Two genus-1 vertices joined by one edge, leg -2 at u (twist 1)."""
    return Graph.build({"u": 1, "v": 1}, [("e1", "u", "v")],
                       [("p", "u", -2)], twist)


def path_graph(num_edges, leg_weights=(), twist=0):
    """A path tree on ``num_edges`` edges, legs attached to the first vertex."""
    verts = {f"v{i}": 0 for i in range(num_edges + 1)}
    edges = [(f"e{i}", f"v{i}", f"v{i+1}") for i in range(num_edges)]
    legs = [(f"l{i}", "v0", w) for i, w in enumerate(leg_weights)]
    return Graph.build(verts, edges, legs, twist)


def star_tree(leg_weights, twist=0):
    """Single vertex carrying only legs."""
    return Graph.build({"u": 0}, [],
                       [(f"l{i}", "u", w) for i, w in enumerate(leg_weights)], twist)


def random_graph(rng):
    """One random corpus graph: |V| <= 4, |E| <= 5, h1 <= 2, leg weights
    in [-4, 4], twist in {0, 1}, connected and valid."""
    while True:
        nv = rng.randint(1, 4)
        names = [f"v{i}" for i in range(nv)]
        genus_of = {v: rng.randint(0, 1) for v in names}
        edges = []
        for i in range(1, nv):
            edges.append((f"e{len(edges)}", names[rng.randrange(i)], names[i]))
        for _ in range(rng.randint(0, 2)):
            if len(edges) >= 5:
                break
            u = names[rng.randrange(nv)]
            v = names[rng.randrange(nv)]
            edges.append((f"e{len(edges)}", u, v))
        skeleton = Graph.build(genus_of, edges, [], 0)
        twist = rng.randint(0, 1)
        target = -twist * (2 * graph_genus(skeleton) - 2)
        nlegs = rng.randint(0, 3)
        if target != 0:
            nlegs = max(nlegs, 1, (abs(target) + 3) // 4)
        if nlegs > 3 or abs(target) > 4 * max(nlegs, 1):
            continue
        weights = None
        for _ in range(60):
            head = [rng.randint(-4, 4) for _ in range(nlegs - 1)] if nlegs else []
            tail = target - sum(head)
            if nlegs == 0:
                if target == 0:
                    weights = []
                    break
            elif abs(tail) <= 4:
                weights = head + [tail]
                break
        if weights is None:
            continue
        legs = [(f"l{i}", names[rng.randrange(nv)], w)
                for i, w in enumerate(weights)]
        g = Graph.build(genus_of, edges, legs, twist)
        report = validate_graph(g)
        assert report.ok, report.problems
        return g


def corpus(count=200, seed=20260809):
    rng = random.Random(seed)
    return [random_graph(rng) for _ in range(count)]
