import random
from fractions import Fraction
from math import gcd

import pytest

from flowfan import (Fan, UnknownEdge, UnsupportedDimension, base_weighting,
                     build_fan, canonical_key, check_contraction_compat,
                     cone_catalog, cone_of_weighting, find_positive_cycle,
                     slice_fan, verify_fan)
from flowfan.cones import Cone
from flowfan.fan import _embed_cone

from helpers import banana, corpus, loop_graph, path_graph, two_gon
from test_weightings import flows_weighting


def test_two_gon_catalog():
    for n in (1, 2, 3, 5):
        g = two_gon(n)
        cat = cone_catalog(g)
        keys = {canonical_key(c) for c, _ in cat}
        expected = {((), ())}
        for a in range(n + 1):
            r = (n - a, a)
            d = gcd(*r)
            expected.add(((), ((r[0] // max(d, 1), r[1] // max(d, 1)),)))
        assert keys == expected


def test_banana_catalog_structure():
    g = banana(3, 10)
    cat = cone_catalog(g)
    assert len(cat) == 43
    by_dim = {}
    for c, w in cat:
        by_dim.setdefault(c.dim(), []).append((c, w))
    assert len(by_dim[0]) == 1
    assert len(by_dim[1]) == 39
    assert len(by_dim[2]) == 3
    interior = [c for c, _ in by_dim[1]
                if all(x > 0 for r in c.rays() for x in r)]
    assert len(interior) == 36
    expected_interior = set()
    for a in range(1, 9):
        for b in range(1, 10 - a):
            c3 = 10 - a - b
            v = (b * c3, a * c3, a * b)
            d = gcd(gcd(v[0], v[1]), v[2])
            expected_interior.add(tuple(x // d for x in v))
    assert {c.rays()[0] for c in interior} == expected_interior


def test_tree_catalog_is_orthant():
    g = path_graph(3, leg_weights=(2, -2))
    cat = cone_catalog(g)
    assert len(cat) == 1
    c, w = cat[0]
    assert c.rays() == ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def test_witness_soundness():
    for g in [two_gon(4), banana(3, 6), loop_graph()]:
        for c, w in cone_catalog(g):
            assert canonical_key(cone_of_weighting(g, w)) == canonical_key(c)


def test_pruned_matches_unpruned():
    for g in [two_gon(3), banana(3, 4), loop_graph(),
              path_graph(2, leg_weights=(1, -1))]:
        pruned = {canonical_key(c) for c, _ in cone_catalog(g, prune=True)}
        full = {canonical_key(c) for c, _ in cone_catalog(g, prune=False)}
        assert pruned == full


def test_build_fan_counts():
    fan = build_fan(two_gon(3))
    assert len(fan.cones) == 5
    assert len(fan.maximal_keys) == 4
    fan2 = build_fan(path_graph(2, leg_weights=(3, -3)))
    assert len(fan2.cones) == 4
    assert len(fan2.maximal_keys) == 1
    fan3 = build_fan(banana(3, 10))
    assert len(fan3.maximal_keys) == 39
    assert len(fan3.cones) == 43


def test_verify_fan_passes():
    for g in [two_gon(3), banana(3, 10), loop_graph(),
              path_graph(2, leg_weights=(1, -1))]:
        report = verify_fan(build_fan(g))
        assert report.ok, report.violations


def test_verify_fan_rejects_bad_collection():
    from flowfan import faces
    orthant = Cone.orthant_section(2)
    interior = Cone.orthant_section(2, [(1, -1)])
    cones = list(faces(orthant)) + list(faces(interior))
    bad = Fan(None, ((0,), (1,)), cones, {}, frozenset(), {})
    report = verify_fan(bad)
    assert not report.ok
    assert "not a common face" in report.violations[0]


def test_fan_relabel_invariance():
    g = banana(3, 6)
    # reversed edge naming permutes the ambient coordinates; vertex names
    # do not enter the coordinates at all
    relabeled = {"e1": "z3", "e2": "z2", "e3": "z1"}
    import flowfan
    g2 = flowfan.Graph.build(
        {"a": 0, "b": 0},
        [(relabeled[f"e{i}"], "a", "b") for i in (1, 2, 3)],
        [("p", "a", 6), ("q", "b", -6)], 0)
    fan1 = build_fan(g)
    fan2 = build_fan(g2)
    # coordinate permutation: edge ei of g matches z(4-i) of g2; g2's sorted
    # edge order is (z1, z2, z3) = (e3, e2, e1)
    perm = (2, 1, 0)
    rays1 = {tuple(r[p] for p in perm) for r in fan1.ray_list()}
    assert rays1 == set(fan2.ray_list())
    assert len(fan1.cones) == len(fan2.cones)


def test_check_contraction_compat_examples():
    g = banana(3, 10)
    report = check_contraction_compat(g, [("e1", 0), ("e2", 0)])
    assert report.ok and report.checked > 0
    g2 = two_gon(3)
    report2 = check_contraction_compat(g2, g2.edges())
    assert report2.ok
    gt = path_graph(2, leg_weights=(1, -1))
    report3 = check_contraction_compat(gt, [("e0", 0)])
    assert report3.ok
    with pytest.raises(UnknownEdge):
        check_contraction_compat(g, [("nope", 0)])


def test_decomposition_on_positive_cycle():
    g = two_gon(3)
    w = flows_weighting(g, {("e1", 0): 4, ("e2", 0): -1})
    cyc = find_positive_cycle(g, w)
    assert cyc is not None
    c_w = cone_of_weighting(g, w)
    assert canonical_key(c_w) == ((), ())  # both sides are the origin


def test_embed_cone_inclusion_for_any_contraction():
    from flowfan import contract, restrict_weighting
    rng = random.Random(91)
    for g in corpus(15, seed=97):
        edges = g.edges()
        if not edges:
            continue
        S = frozenset(rng.sample(edges, rng.randint(1, len(edges))))
        res = contract(g, S)
        w = base_weighting(g)
        emb = _embed_cone(cone_of_weighting(res.contracted,
                                            restrict_weighting(g, w, res)),
                          res.contracted.edges(), edges, S)
        assert cone_of_weighting(g, w).contains_cone(emb)


def test_slice_two_gon():
    fan = build_fan(two_gon(3))
    sl = slice_fan(fan)
    assert sl.ambient_dim == 2
    points = [c for c in sl.cells if c.dim == 0]
    assert len(points) == 4
    coords = sorted(v[1] for c in points for v in c.vertices)
    assert coords == [Fraction(0), Fraction(1, 3), Fraction(2, 3), Fraction(1)]


def test_slice_banana():
    fan = build_fan(banana(3, 10))
    sl = slice_fan(fan)
    points = [c for c in sl.cells if c.dim == 0]
    segments = [c for c in sl.cells if c.dim == 1]
    assert len(points) == 36
    assert len(segments) == 3
    for c in sl.cells:
        for v in c.vertices:
            assert sum(v) == 1
        assert c.flows


def test_slice_polygon_cell():
    fan = build_fan(path_graph(3, leg_weights=(1, -1)))
    sl = slice_fan(fan)
    assert [c.dim for c in sl.cells] == [2]
    assert len(sl.cells[0].vertices) == 3


def test_slice_unsupported_dimension():
    with pytest.raises(UnsupportedDimension):
        slice_fan(build_fan(loop_graph()))
    with pytest.raises(UnsupportedDimension):
        slice_fan(build_fan(banana(4, 2)))


def test_four_edge_banana_catalog():
    # first Betti number 3 exercises a two-level contraction recursion:
    # 4 facet cones {t_i = 0}, 6 coordinate planes, 4 axes and the origin
    g = banana(4, 2)
    cat = cone_catalog(g)
    assert len(cat) == 15
    by_dim = {}
    for c, w in cat:
        by_dim.setdefault(c.dim(), []).append(c)
        assert canonical_key(cone_of_weighting(g, w)) == canonical_key(c)
    assert {d: len(cs) for d, cs in by_dim.items()} == {0: 1, 1: 4, 2: 6, 3: 4}
    fan = build_fan(g)
    assert len(fan.cones) == 15
    assert len(fan.maximal_keys) == 4
    assert verify_fan(fan).ok


def test_twisted_double_loop_fan():
    # twist 1 forces the legs to balance 2g(v) - 2 + val(v) = 2; the loop
    # flows are unconstrained, so the fan is the face lattice of the orthant
    import flowfan
    g = flowfan.Graph.build({"u": 0},
                            [("e1", "u", "u"), ("e2", "u", "u")],
                            [("p", "u", -1), ("q", "u", -1)], 1)
    fan = build_fan(g)
    assert len(fan.cones) == 4
    assert len(fan.maximal_keys) == 1
    top = fan.maximal_cones()[0]
    assert top.rays() == ((0, 1), (1, 0))
    assert verify_fan(fan).ok


def test_distinct_maximal_cones_share_no_interior_vector():
    for g in [two_gon(4), banana(3, 6)]:
        fan = build_fan(g)
        maxima = fan.maximal_cones()
        for c in maxima:
            rays = c.rays()
            if not rays:
                continue
            interior = tuple(sum(col) for col in zip(*rays))
            if any(x == 0 for x in interior):
                continue  # not positive on all edges
            for other in maxima:
                if canonical_key(other) != canonical_key(c):
                    assert not other.contains(interior)
