"""Enumeration and verification of the fan of weighting cones.

The catalog of all cones attached to weightings of a graph is finite: a
box of cycle-space shifts around the base weighting (radius the proved
enumeration bound) yields every cone of a weighting without a positive
cycle, and each weighting with a positive cycle delegates to the
contracted graph, whose catalog embeds with zeros on the contracted
edges. Closing the catalog under faces gives the fan.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import product

from .errors import UnknownEdge, UnsupportedDimension
from .cones import (Cone, canonical_key, cone_of_weighting,
                    cycle_constraint_rows, faces, intersect_cones, is_face_of)
from .graph import contract, cycle_basis, enumerate_cycles
from .linalg import sign_normalized, is_zero
from .weightings import (base_weighting, enumeration_bound,
                         has_positive_cycle, lift_weighting, restrict_weighting,
                         shift_along_cycle, shift_by_cycles)


def _box_vectors(h, radius):
    """Integer vectors of sup norm <= radius in graded lexicographic order."""
    if h == 0:
        return [()]
    vs = product(range(-radius, radius + 1), repeat=h)
    return sorted(vs, key=lambda v: (sum(abs(x) for x in v), v))


def _embed_cone(c_small, small_edges, big_edges, contracted_set):
    """Pad a cone on the surviving edges with zero coordinates on the
    contracted edges (the product with the origin)."""
    pos = {e: i for i, e in enumerate(big_edges)}
    n = len(big_edges)
    rows = []
    for a in c_small.equalities:
        row = [0] * n
        for val, e in zip(a, small_edges):
            row[pos[e]] = val
        rows.append(tuple(row))
    for e in sorted(contracted_set, key=lambda e: pos[e]):
        row = [0] * n
        row[pos[e]] = 1
        rows.append(tuple(row))
    return Cone.orthant_section(n, rows, labels=big_edges)


def cone_catalog(g, prune=True):
    """The exact set of weighting cones with one exact witness each.

    Returns a list of (cone, weighting) pairs sorted by canonical key; for
    every pair the cone of the weighting equals the stored cone. With
    ``prune`` the box enumeration skips weightings admitting a positive
    cycle (their cones are supplied by the contraction recursion); the
    output set is unchanged.
    """
    memo = {}
    out = _catalog(g, frozenset(), memo, prune)
    return [pair for _, pair in sorted(out.items(), key=lambda kv: kv[0])]


def _catalog(g, contracted_sofar, memo, prune):
    if contracted_sofar in memo:
        return memo[contracted_sofar]
    edges = g.edges()
    base = base_weighting(g)
    basis = cycle_basis(g)
    radius = enumeration_bound(g, base)
    out = {}
    seen_systems = set()
    for coeffs in _box_vectors(len(basis), radius):
        w = shift_by_cycles(g, base, coeffs)
        if prune and has_positive_cycle(g, w.values):
            continue
        _, rows = cycle_constraint_rows(g, w, basis)
        syskey = tuple(sorted(sign_normalized(r) for r in rows if not is_zero(r)))
        if syskey in seen_systems:
            continue
        seen_systems.add(syskey)
        c = Cone.orthant_section(len(edges), rows, labels=edges)
        out.setdefault(canonical_key(c), (c, w))

    for cyc in enumerate_cycles(g):
        cyc_edges = frozenset(cyc.edges(g))
        res = contract(g, cyc_edges)
        sub = _catalog(res.contracted, contracted_sofar | cyc_edges, memo, prune)
        small_edges = res.contracted.edges()
        for c_small, w_small in sub.values():
            w0 = lift_weighting(g, res, w_small)
            bump = w0.max_abs() + 1
            # negative circulation raises all source halves along the cycle,
            # making it positive, so the lifted cone splits off exactly
            w_lift = shift_along_cycle(g, w0, cyc, -bump)
            c_big = _embed_cone(c_small, small_edges, edges, cyc_edges)
            out.setdefault(canonical_key(c_big), (c_big, w_lift))

    memo[contracted_sofar] = out
    return out


@dataclass
class Fan:
    """Face-closed collection of cones in the edge space of a graph.

    ``witnesses`` maps each cone key to a weighting whose cone contains it
    (equality for maximal cones); ``face_index`` maps each cone key to the
    keys of all its faces; ``maximal_keys`` flags the maximal cones.
    """

    graph: object
    edge_order: tuple
    cones: list
    witnesses: dict
    maximal_keys: frozenset
    face_index: dict

    def cone_by_key(self, key):
        for c in self.cones:
            if canonical_key(c) == key:
                return c
        raise KeyError(key)

    def ray_list(self):
        rays = set()
        for c in self.cones:
            rays.update(c.rays())
        return sorted(rays)

    def maximal_cones(self):
        return [c for c in self.cones if canonical_key(c) in self.maximal_keys]


def build_fan(g) -> Fan:
    """Close the cone catalog under faces and flag the maximal cones."""
    catalog = cone_catalog(g)
    cones = {}
    witnesses = {}
    for c, w in catalog:
        k = canonical_key(c)
        cones[k] = c
        witnesses[k] = w
    for k, c in list(cones.items()):
        w = witnesses[k]
        for f in faces(c):
            fk = canonical_key(f)
            cones.setdefault(fk, f)
            witnesses.setdefault(fk, w)
    face_index = {}
    for k, c in cones.items():
        face_index[k] = frozenset(canonical_key(f) for f in faces(c))
    raysets = {k: frozenset(c.rays()) for k, c in cones.items()}
    maximal = frozenset(
        k for k, rs in raysets.items()
        if not any(k2 != k and rs < rs2 for k2, rs2 in raysets.items()))
    ordered = sorted(cones.values(), key=lambda c: (c.dim(), c.rays()))
    edge_order = tuple(g.edges())
    return Fan(g, edge_order, ordered, witnesses, maximal, face_index)


@dataclass(frozen=True)
class FanReport:
    ok: bool
    violations: tuple = ()


def verify_fan(fan: Fan) -> FanReport:
    """Check the fan axioms: cones sit in the non-negative orthant, every
    face of every cone belongs to the fan, and any two cones intersect in a
    common face. Reports the first violation found."""
    keys = {canonical_key(c) for c in fan.cones}
    for c in fan.cones:
        if not c.is_pointed():
            return FanReport(False, ((f"cone {canonical_key(c)} not pointed"),))
        if any(x < 0 for r in c.rays() for x in r):
            return FanReport(False, ((f"cone {canonical_key(c)} leaves the orthant"),))
    for c in fan.cones:
        for f in faces(c):
            if canonical_key(f) not in keys:
                return FanReport(
                    False, ((f"face {canonical_key(f)} of {canonical_key(c)} missing"),))
    cones = fan.cones
    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            c1, c2 = cones[i], cones[j]
            inter = intersect_cones(c1, c2)
            if not is_face_of(inter, c1) or not is_face_of(inter, c2):
                return FanReport(
                    False,
                    ((f"intersection of {canonical_key(c1)} and {canonical_key(c2)} "
                      f"is not a common face"),))
    return FanReport(True)


@dataclass(frozen=True)
class CompatReport:
    ok: bool
    checked: int
    violations: tuple = ()


def check_contraction_compat(g, edge_set) -> CompatReport:
    """For every witness weighting w of the catalog: the cone of the
    restricted weighting, padded with zeros on the contracted edges, is
    contained in the cone of w; when the contracted set is a positive cycle
    for w the two agree exactly."""
    edges = g.edges()
    S = frozenset(edge_set)
    for e in S:
        if e not in edges:
            raise UnknownEdge(e)
    res = contract(g, S)
    small_edges = res.contracted.edges()
    cycles_on_S = [cyc for cyc in enumerate_cycles(g) if cyc.edge_set(g) == S]
    violations = []
    checked = 0
    for c, w in cone_catalog(g):
        checked += 1
        w_res = restrict_weighting(g, w, res)
        c_res = cone_of_weighting(res.contracted, w_res)
        emb = _embed_cone(c_res, small_edges, edges, S)
        if not c.contains_cone(emb):
            violations.append(f"inclusion fails for witness {w.flows()}")
            continue
        positive = any(
            all(w.values[h] > 0 for h in orient.halves)
            for cyc in cycles_on_S
            for orient in (cyc, cyc.reversed(g)))
        if positive and canonical_key(emb) != canonical_key(c):
            violations.append(f"equality fails for witness {w.flows()}")
    return CompatReport(not violations, checked, tuple(violations))


# -- slice geometry ----------------------------------------------------------


@dataclass(frozen=True)
class SliceCell:
    dim: int
    vertices: tuple  # barycentric coordinate tuples (Fractions, sum 1)
    flows: tuple     # sorted (edge key, flow) pairs of the witness


@dataclass(frozen=True)
class SliceDescription:
    ambient_dim: int
    edge_order: tuple
    cells: tuple


def _bary(ray):
    s = sum(ray)
    return tuple(Fraction(x, s) for x in ray)


def _sort_polygon(vertices):
    """Order barycentric points around their centroid, exactly."""
    pts = [(v[1], v[2]) for v in vertices]  # affine chart is order-faithful
    n = len(pts)
    cx = sum(p[0] for p in pts) / n
    cy = sum(p[1] for p in pts) / n

    def half(p):
        dx, dy = p[0] - cx, p[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(a, b):
        pa, pb = pts[a], pts[b]
        ha, hb = half(pa), half(pb)
        if ha != hb:
            return -1 if ha < hb else 1
        cross = ((pa[0] - cx) * (pb[1] - cy) - (pa[1] - cy) * (pb[0] - cx))
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    order = sorted(range(n), key=cmp_to_key(cmp))
    ordered = [vertices[i] for i in order]
    start = min(range(n), key=lambda i: ordered[i])
    return tuple(ordered[start:] + ordered[:start])


def slice_fan(fan: Fan) -> SliceDescription:
    """Cut the maximal cones with the hyperplane where the coordinates sum
    to one. Each maximal cone of dimension d >= 1 becomes a cell of
    dimension d - 1 with exact rational vertices, tagged with its witness
    flows. Only ambient dimensions 2 and 3 are supported."""
    d = len(fan.edge_order)
    if d not in (2, 3):
        raise UnsupportedDimension(f"slice requires 2 or 3 edges, got {d}")
    cells = []
    for c in fan.maximal_cones():
        cdim = c.dim()
        if cdim < 1:
            continue
        verts = [_bary(r) for r in c.rays()]
        if cdim == 3:
            verts = list(_sort_polygon(verts))
        w = fan.witnesses[canonical_key(c)]
        flows = tuple(sorted(w.flows().items()))
        cells.append(SliceCell(cdim - 1, tuple(verts), flows))
    cells.sort(key=lambda cell: (cell.dim, cell.vertices))
    return SliceDescription(d, fan.edge_order, tuple(cells))
