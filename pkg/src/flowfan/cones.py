"""Exact rational polyhedral cones in the edge space of a graph.

A cone is held by its H-representation: integer equality rows a (a.t = 0)
and inequality rows b (b.t >= 0). The V-representation (extreme rays of
the pointed part plus a lineality basis) is computed lazily by a
deterministic double description pass: constraints are inserted in sorted
order, candidate rays from crossing pairs are kept only when an exact rank
test certifies extremality, and rays are canonicalised by reduction
modulo the lineality span. All arithmetic is arbitrary-precision integer.

The cone attached to a weighting w lives in the non-negative orthant of
Q^E and is cut out by one equality per basis cycle, with entries the
source-half values of w along the cycle; linearity of the constraint in
the cycle class makes basis cycles sufficient.
"""

from dataclasses import dataclass

from .errors import AmbientMismatch, NotPointed
from .graph import cycle_basis
from . import linalg
from .linalg import dot, int_rank, is_zero, primitive, reduce_mod, rref_int, sign_normalized


def _unit_rows(dim):
    return tuple(tuple(1 if i == j else 0 for i in range(dim)) for j in range(dim))


def _normalize_rows(rows, equalities):
    seen = []
    for r in rows:
        r = sign_normalized(r) if equalities else primitive(r)
        if not is_zero(r) and r not in seen:
            seen.append(r)
    return tuple(sorted(seen))


def _extreme(dim, lin_count, tight_rows):
    return int_rank(tight_rows) == dim - lin_count - 1


def _double_description(dim, equalities, inequalities):
    """Return (lineality rref rows, sorted extreme rays of the pointed part)."""
    lin = [list(r) for r in _unit_rows(dim)]
    rays = []
    eq_rows = []
    ineq_rows = []

    def cleanup(candidates, check_new):
        lin_rref = rref_int(lin)
        out = []
        seen = set()
        for r, is_new in candidates:
            rr = primitive(reduce_mod(r, lin_rref))
            if is_zero(rr) or rr in seen:
                continue
            if check_new and is_new:
                tight = list(eq_rows) + [q for q in ineq_rows if dot(q, rr) == 0]
                if not _extreme(dim, len(lin), tight):
                    continue
            seen.add(rr)
            out.append(rr)
        return sorted(out)

    def insert(a, is_eq):
        nonlocal lin, rays
        ds = [dot(a, b) for b in lin]
        hit = next((i for i, d in enumerate(ds) if d != 0), None)
        if hit is not None:
            b0, d0 = lin[hit], ds[hit]
            if d0 < 0:
                b0, d0 = [-x for x in b0], -d0
            lin = [primitive(tuple(d0 * x - ds[i] * y for x, y in zip(b, b0)))
                   for i, b in enumerate(lin) if i != hit]
            lin = [list(b) for b in lin]
            moved = [(tuple(d0 * x - dot(a, r) * y for x, y in zip(r, b0)), False)
                     for r in rays]
            if not is_eq:
                moved.append((tuple(b0), False))
            (eq_rows if is_eq else ineq_rows).append(a)
            rays = cleanup(moved, check_new=False)
            return
        plus, zero, minus = [], [], []
        for r in rays:
            d = dot(a, r)
            (plus if d > 0 else zero if d == 0 else minus).append((r, d))
        kept = [(r, False) for r, _ in zero]
        if not is_eq:
            kept += [(r, False) for r, _ in plus]
        combos = [(tuple(dp * x - dm * y for x, y in zip(rm, rp)), True)
                  for rp, dp in plus for rm, dm in minus]
        (eq_rows if is_eq else ineq_rows).append(a)
        rays = cleanup(kept + combos, check_new=True)

    for a in equalities:
        insert(a, True)
    for a in inequalities:
        insert(a, False)
    return rref_int(lin), tuple(rays)


class Cone:
    """Rational polyhedral cone given by equality and inequality rows.

    ``labels``, when present, name the ambient coordinates (edge keys for
    cones in the edge space). Rays and lineality are computed on demand and
    cached; instances are immutable afterwards.
    """

    __slots__ = ("ambient_dim", "labels", "equalities", "inequalities",
                 "_lineality", "_rays")

    def __init__(self, ambient_dim, equalities=(), inequalities=(), labels=None,
                 _rays=None, _lineality=None):
        self.ambient_dim = ambient_dim
        self.labels = tuple(labels) if labels is not None else None
        self.equalities = _normalize_rows(equalities, equalities=True)
        self.inequalities = _normalize_rows(inequalities, equalities=False)
        self._rays = tuple(_rays) if _rays is not None else None
        self._lineality = tuple(_lineality) if _lineality is not None else None

    @classmethod
    def orthant_section(cls, ambient_dim, equalities=(), labels=None):
        """The cone {t >= 0 : equalities . t = 0} inside the orthant."""
        return cls(ambient_dim, equalities, _unit_rows(ambient_dim), labels)

    @classmethod
    def from_generators(cls, ambient_dim, vectors, labels=None):
        """Cone spanned by integer vectors, via the dual H-representation."""
        lin, rays = _double_description(
            ambient_dim, (), _normalize_rows(vectors, equalities=False))
        return cls(ambient_dim, equalities=lin, inequalities=rays, labels=labels)

    def _compute(self):
        if self._rays is None:
            lin, rays = _double_description(
                self.ambient_dim, self.equalities, self.inequalities)
            self._lineality = lin
            self._rays = rays

    def rays(self):
        """Extreme rays of the pointed part, primitive, reduced modulo the
        lineality span, sorted."""
        self._compute()
        return self._rays

    def lineality(self):
        self._compute()
        return self._lineality

    def is_pointed(self):
        return not self.lineality()

    def dim(self):
        self._compute()
        return int_rank(list(self._lineality) + list(self._rays))

    def contains(self, v):
        return (all(dot(a, v) == 0 for a in self.equalities)
                and all(dot(b, v) >= 0 for b in self.inequalities))

    def contains_cone(self, other):
        gens = list(other.rays())
        for b in other.lineality():
            gens += [b, tuple(-x for x in b)]
        return all(self.contains(g) for g in gens)

    def key(self):
        return canonical_key(self)

    def intersect(self, other):
        if self.ambient_dim != other.ambient_dim or self.labels != other.labels:
            raise AmbientMismatch("cones live in different ambient spaces")
        return Cone(self.ambient_dim,
                    self.equalities + other.equalities,
                    self.inequalities + other.inequalities,
                    self.labels)

    def polar(self):
        """Polar dual {u : u.x >= 0 on the cone}, in the dual coordinates."""
        return Cone(self.ambient_dim,
                    equalities=self.lineality(),
                    inequalities=self.rays(),
                    labels=self.labels)

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self.labels == other.labels
                and self.key() == other.key())

    def __hash__(self):
        return hash((self.ambient_dim, self.labels, self.key()))

    def __repr__(self):
        return (f"Cone(dim={self.ambient_dim}, eq={len(self.equalities)}, "
                f"ineq={len(self.inequalities)})")


# -- spec operations --------------------------------------------------------


def cycle_constraint_rows(g, w, cycles=None):
    """One integer row per cycle: entry at edge e is the value of w on the
    source half of e as the cycle traverses it, zero off the cycle."""
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    rows = []
    for cyc in (cycles if cycles is not None else cycle_basis(g)):
        row = [0] * len(edges)
        for h in cyc.halves:
            row[index[g.edge_of(h)]] = w.values[h]
        rows.append(tuple(row))
    return edges, rows


def cone_of_weighting(g, w) -> Cone:
    """The cone of all non-negative edge vectors compatible with w (sum of
    source-half value times coordinate vanishes around every cycle)."""
    edges, rows = cycle_constraint_rows(g, w)
    return Cone.orthant_section(len(edges), rows, labels=edges)


def extreme_rays(c: Cone):
    """Extreme rays of a pointed cone (raises NotPointed otherwise)."""
    if not c.is_pointed():
        raise NotPointed("cone has a nonzero lineality space")
    return c.rays()


def _face_ray_sets(c: Cone):
    """All tight-set closures of the ray set: the faces of the pointed part,
    each given by the frozenset of rays it contains."""
    rays = c.rays()
    full = frozenset(rays)
    facet_sets = [frozenset(r for r in rays if dot(q, r) == 0)
                  for q in c.inequalities]
    seen = {full}
    queue = [full]
    while queue:
        s = queue.pop()
        for f in facet_sets:
            t = s & f
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def _face_cone(c: Cone, ray_subset):
    rays = sorted(ray_subset)
    tight = [q for q in c.inequalities
             if all(dot(q, r) == 0 for r in rays)]
    return Cone(c.ambient_dim,
                equalities=c.equalities + tuple(tight),
                inequalities=c.inequalities,
                labels=c.labels,
                _rays=rays,
                _lineality=())


def faces(c: Cone):
    """All faces of a pointed cone, including the origin and the cone
    itself, sorted by (dimension, rays)."""
    if not c.is_pointed():
        raise NotPointed("face enumeration requires a pointed cone")
    out = [_face_cone(c, s) for s in _face_ray_sets(c)]
    return sorted(out, key=lambda f: (len(f.rays()), f.rays()))


def intersect_cones(c1: Cone, c2: Cone) -> Cone:
    return c1.intersect(c2)


def is_face_of(f: Cone, c: Cone) -> bool:
    """Exact face test: f's rays are rays of c and form a tight-set closure
    (f equals c cut by a supporting hyperplane)."""
    if f.ambient_dim != c.ambient_dim or f.labels != c.labels:
        raise AmbientMismatch("cones live in different ambient spaces")
    fr = set(f.rays())
    cr = set(c.rays())
    if not f.is_pointed() or not fr <= cr:
        return False
    tight = [q for q in c.inequalities if all(dot(q, r) == 0 for r in fr)]
    closure = {r for r in cr if all(dot(q, r) == 0 for q in tight)}
    return fr == closure


@dataclass(frozen=True)
class DualGenerators:
    """Integer generators of the polar dual of a weighting cone: the unit
    vector of every edge plus both orientations of the cycle vector of each
    basis cycle (entries the source-half values along the cycle)."""

    labels: tuple
    vectors: tuple

    def spanned_cone(self) -> Cone:
        return Cone.from_generators(len(self.labels), self.vectors, self.labels)


def dual_cone_generators(g, w) -> DualGenerators:
    edges, rows = cycle_constraint_rows(g, w)
    gens = list(_unit_rows(len(edges)))
    for row in rows:
        if not is_zero(row):
            gens.append(tuple(row))
            gens.append(tuple(-x for x in row))
    seen = []
    for v in gens:
        if v not in seen:
            seen.append(v)
    return DualGenerators(tuple(edges), tuple(seen))


def polar_dual(c: Cone) -> Cone:
    return c.polar()


def canonical_key(c: Cone):
    """Canonical identifier: (lineality rref rows, sorted primitive rays).

    For pointed cones the first component is empty and the key is just the
    sorted ray tuple; equal keys mean equal cones.
    """
    return (c.lineality(), c.rays())


# -- lattice monoid generators ----------------------------------------------


def _facets_within(face_sets, dims, s):
    subs = [t for t in face_sets if t < s]
    return [t for t in subs if dims[t] == dims[s] - 1]


def _triangulate_rays(c: Cone):
    """Pulling triangulation of the pointed part into simplicial ray lists."""
    rays = c.rays()
    if not rays:
        return []
    face_sets = _face_ray_sets(c)
    dims = {s: int_rank(sorted(s)) for s in face_sets}

    def pull(s):
        rlist = sorted(s)
        if len(rlist) == dims[s]:
            return [rlist]
        r0 = rlist[0]
        out = []
        for t in _facets_within(face_sets, dims, s):
            if r0 not in t and t:
                for tri in pull(t):
                    out.append([r0] + tri)
        return out

    return pull(frozenset(rays))


def _parallelepiped_points(basis_rows, lattice_rows):
    """Integer points of the half-open parallelepiped spanned by
    ``basis_rows``, all lying in the saturated lattice ``lattice_rows``.

    Enumerates one representative per coset of the basis sublattice (their
    count is the determinant in lattice coordinates) and folds it into the
    parallelepiped.
    """
    k = len(lattice_rows)
    coords = []
    for b in basis_rows:
        sol = linalg.solve_left(lattice_rows, b)
        assert sol is not None and all(x.denominator == 1 for x in sol)
        coords.append(tuple(int(x) for x in sol))
    H = linalg.row_hnf(coords)
    assert len(H) == k, "basis does not span the lattice rationally"

    reps = [[]]
    for i in range(k):
        reps = [r + [x] for r in reps for x in range(H[i][i])]
    points = []
    for x in reps:
        lam = linalg.solve_left(coords, tuple(x))
        z = list(x)
        for li, brow in zip(lam, coords):
            f = li.numerator // li.denominator  # floor
            if f:
                z = [a - f * b for a, b in zip(z, brow)]
        pt = tuple(sum(z[j] * lattice_rows[j][i] for j in range(k))
                   for i in range(len(lattice_rows[0])))
        if not is_zero(pt):
            points.append(pt)
    return points


def monoid_generators(c: Cone):
    """A finite generating set of the monoid of lattice points of ``c``.

    Both signs of a saturated lattice basis of the lineality space, the
    primitive extreme rays, and every lattice point of the fundamental
    parallelepiped of each simplicial piece of a pulling triangulation
    (padded with the lineality basis). Generates all lattice points by the
    standard rounding argument; not guaranteed minimal.
    """
    d = c.ambient_dim
    lin_lattice = linalg.row_hnf(
        linalg.integer_kernel(c.equalities + c.inequalities, d))
    rays = c.rays()
    gens = set()
    for b in lin_lattice:
        gens.add(b)
        gens.add(tuple(-x for x in b))
    gens.update(rays)
    if rays:
        span_rows = list(lin_lattice) + list(rays)
        normals = linalg.integer_kernel(span_rows, d)
        lattice = linalg.integer_kernel(normals, d)
        for simplex in _triangulate_rays(c):
            basis = list(lin_lattice) + list(simplex)
            for pt in _parallelepiped_points(basis, lattice):
                gens.add(pt)
    return sorted(gens)
