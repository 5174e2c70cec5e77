"""Rational polyhedra of the form conv(V) + cone(C), and the convex hull of a
highest weight module.

Membership is decided exactly from an inequality description that is built
once per polyhedron: every facet of a pointed polyhedron contains a vertex
and is spanned (inside the affine hull) by edges to other vertices and cone
directions, so trying all such spans finds every facet.  The exact simplex
in ``lp`` is kept separate and is used for certificates and as the oracle.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import TYPE_CHECKING, Iterable, Sequence

from .linalg import nullspace, primitive, rank
from .lp import solve_lp
from .rootsys import WeylElement
from .weightlat import Weight

if TYPE_CHECKING:
    from .hwmodule import HWModuleDesc


class UnboundedError(ValueError):
    pass


class NotAVertex(ValueError):
    pass


def _scale(vectors: Sequence[Sequence[Fraction]]) -> int:
    den = 1
    for v in vectors:
        for x in v:
            den = lcm(den, Fraction(x).denominator)
    return den


class Polyhedron:
    def __init__(self, rs, vertices: Iterable[Weight], cone: Iterable[Weight] = ()):
        self.rs = rs
        self.vertices = list(dict.fromkeys(vertices))
        self.cone = list(dict.fromkeys(c for c in cone if any(c.fw)))
        if not self.vertices:
            raise ValueError("a polyhedron needs at least one vertex")
        self.anchor = self.vertices[0]
        self._hrep = None

    def __repr__(self):
        return f"Polyhedron({self.rs.name}, {len(self.vertices)} vertices, {len(self.cone)} cone generators)"

    # ----------------------------------------------------------- H-description
    def _build(self):
        n = self.rs.rank
        r0 = self.anchor.root_coords()
        pts = [tuple(a - b for a, b in zip(v.root_coords(), r0)) for v in self.vertices]
        dirs = [c.root_coords() for c in self.cone]
        scale = _scale(pts + dirs)
        P = [tuple(int(x * scale) for x in p) for p in pts]
        C = [tuple(int(x * scale) for x in c) for c in dirs]
        spanning = [p for p in P if any(p)] + C
        perp = [primitive(v) for v in nullspace(spanning, n)] if spanning else [
            tuple(int(i == j) for j in range(n)) for i in range(n)]
        k = n - len(perp)
        facets: dict[tuple[int, ...], int] = {}
        if k > 0:
            tried: set = set()
            for v0 in P:
                edges = [tuple(a - b for a, b in zip(p, v0)) for p in P if p != v0]
                cand = list(dict.fromkeys(edges + C))
                for combo in combinations(cand, k - 1):
                    a = self._normal(list(combo), perp, n)
                    if a is None or a in tried:
                        continue
                    tried.add(a)
                    neg = tuple(-x for x in a)
                    tried.add(neg)
                    # a may come from a span not tight here; any valid
                    # supporting inequality is harmless, so keep both sides
                    for nv in (a, neg):
                        if all(_dot(nv, c) <= 0 for c in C):
                            facets[nv] = max(_dot(nv, p) for p in P)
        self._hrep = (scale, r0, perp, [_dot(q, P[0]) for q in perp], list(facets.items()), k)

    @staticmethod
    def _normal(combo, perp, n):
        rows = combo + perp
        if n == 2 and len(rows) == 1:
            r = rows[0]
            a = (-r[1], r[0])
        elif n == 3 and len(rows) == 2:
            u, v = rows
            a = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
        else:
            ns = nullspace(rows, n)
            if len(ns) != 1:
                return None
            a = primitive(ns[0])
        if not any(a):
            return None
        return primitive(a)

    @property
    def hrep(self):
        if self._hrep is None:
            self._build()
        return self._hrep

    def dimension(self) -> int:
        return self.hrep[5]

    def inequalities(self) -> list[tuple[tuple[int, ...], int]]:
        """Facets as (a, b) meaning a . scale*(x - anchor) <= b in root coordinates."""
        return list(self.hrep[4])

    def _rel(self, mu: Weight):
        scale, r0, *_ = self.hrep
        return tuple((a - b) * scale for a, b in zip(mu.root_coords(), r0))

    def contains(self, mu: Weight) -> bool:
        if mu.rs != self.rs:
            raise ValueError("weight from another root system")
        x = self._rel(mu)
        _, _, perp, perp_vals, facets, _ = self.hrep
        if any(_dot(q, x) != v for q, v in zip(perp, perp_vals)):
            return False
        return all(_dot(a, x) <= b for a, b in facets)

    def contains_offset(self, beta: Sequence[int]) -> bool:
        """Membership of anchor - beta, with beta in simple-root coordinates."""
        scale, _, perp, perp_vals, facets, _ = self.hrep
        x = [-scale * b for b in beta]
        if any(_dot(q, x) != v for q, v in zip(perp, perp_vals)):
            return False
        return all(_dot(a, x) <= b for a, b in facets)

    # ----------------------------------------------------------------- LP side
    def contains_lp(self, mu: Weight) -> bool:
        """Independent membership test by exact LP feasibility on V and C."""
        return lp_membership(mu, self.vertices, self.cone)

    def is_vertex_lp(self, v: Weight) -> bool:
        others = [u for u in self.vertices if u != v]
        if not others and not self.cone:
            return True
        # v is a vertex iff it is not a combination of the other points + cone
        # (cone directions alone cannot create a vertex at v when C is pointed)
        return not lp_membership(v, others, self.cone) if others else True

    def to_json(self, stabilizer=None) -> dict:
        out = {
            "vertices": [v.to_json() for v in sorted(self.vertices)],
            "cone": [c.to_json() for c in sorted(self.cone)],
        }
        if stabilizer is not None:
            out["stabilizer"] = sorted(stabilizer)
        return out


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def lp_membership(mu: Weight, points: Sequence[Weight], rays: Sequence[Weight] = ()) -> bool:
    n = mu.rs.rank
    cols = [list(p.fw) + [1] for p in points] + [list(r.fw) + [0] for r in rays]
    if not cols:
        return False
    A = [[col[k] for col in cols] for k in range(n + 1)]
    return solve_lp(A, list(mu.fw) + [1]).feasible


# ------------------------------------------------------------------ module hull

def hull_of_module(desc: "HWModuleDesc") -> Polyhedron:
    """conv(W_J lam) + cone(negative roots outside Phi_J), J = J(V)."""
    cached = getattr(desc, "_hull", None)
    if cached is not None:
        return cached
    rs, lam, J = desc.rs, desc.lam, desc.J_V
    orbit = rs.weyl_orbit(J, lam)
    orbit.remove(lam)
    verts = [lam] + orbit
    inside = set(rs.positive_roots_J(J))
    cone = [-rs.root_weight(b) for b in rs.positive_roots if b not in inside]
    poly = Polyhedron(rs, verts, cone)
    object.__setattr__(desc, "_hull", poly)
    return poly


# ------------------------------------------------------------------ operations

def maximizer(X, phi: Weight):
    """Points of X where (phi, -) is largest.

    For a finite weight collection the result is the list of maximising
    weights; for a ``Polyhedron`` it is the maximising face, again a
    ``Polyhedron``.  Raises ``UnboundedError`` if the functional is unbounded.
    """
    rs = phi.rs
    if isinstance(X, Polyhedron):
        for c in X.cone:
            if rs.form(phi, c) > 0:
                raise UnboundedError(f"functional grows along cone direction {c}")
        vals = {v: rs.form(phi, v) for v in X.vertices}
        top = max(vals.values())
        face_pts = [v for v in X.vertices if vals[v] == top]
        face_cone = [c for c in X.cone if rs.form(phi, c) == 0]
        return Polyhedron(rs, face_pts, face_cone)
    pts = list(X)
    if not pts:
        return []
    vals = {p: rs.form(phi, p) for p in pts}
    top = max(vals.values())
    return sorted(p for p in pts if vals[p] == top)


def _ray_key(c: Weight):
    return primitive(c.root_coords())


def extremal_rays_at_vertex(poly: Polyhedron, v: Weight) -> list[Weight]:
    """Cone directions r such that v + R_+ r is an (unbounded) edge of poly."""
    if v not in poly.vertices:
        raise NotAVertex(f"{v} is not a listed vertex")
    scale, r0, perp, _, facets, k = poly.hrep
    x = poly._rel(v)
    tight = [a for a, b in facets if _dot(a, x) == b]
    by_ray: dict = {}
    for c in poly.cone:
        key = _ray_key(c)
        prev = by_ray.get(key)
        if prev is None or sum(c.root_coords()) > sum(prev.root_coords()):
            by_ray[key] = c  # keep the generator closest to the origin
    out = []
    for key, c in by_ray.items():
        rows = [a for a in tight if _dot(a, key) == 0]
        face_dim = k - (rank(rows, poly.rs.rank) if rows else 0)
        if face_dim == 1:
            out.append(c)
    return sorted(out)


def ray_is_face_lp(poly: Polyhedron, v: Weight, r: Weight) -> bool:
    """LP certificate that v + R_+ r is a face: the point v + r admits no
    representation putting weight on anything off that ray."""
    rs = poly.rs
    n = rs.rank
    key = _ray_key(r)
    target = v + r
    cols, off = [], []
    for p in poly.vertices:
        cols.append(list(p.fw) + [1])
        off.append(0 if p == v else 1)
    for c in poly.cone:
        cols.append(list(c.fw) + [0])
        off.append(0 if _ray_key(c) == key else 1)
    A = [[col[k] for col in cols] for k in range(n + 1)]
    res = solve_lp(A, list(target.fw) + [1], off)
    if res.status == "infeasible":
        return False
    return res.status == "optimal" and res.value == 0


def stabilizer_parabolic(desc: "HWModuleDesc"):
    """Return (J, certificate) with W_J the stabilizer parabolic of the hull.

    The certificate records, for every node, why it is in or out: nodes in
    J permute the vertex set; for each node i outside J a point of the
    module is exhibited whose s_i-image is not a weight.
    """
    from .hwmodule import module_contains

    rs, lam = desc.rs, desc.lam
    poly = hull_of_module(desc)
    verts = set(poly.vertices)
    found = set()
    cert = {}
    for i in rs.I:
        if all(rs.reflect(u, i) in verts for u in verts) and _cone_stable(poly, i):
            found.add(i)
            cert[i] = "reflection permutes vertices and cone"
            continue
        alpha = rs.simple_root(i)
        for n in range(0, 64):
            mu = lam - alpha * n
            if not module_contains(desc, mu):
                continue
            img = rs.reflect(mu, i)
            if not module_contains(desc, img):
                cert[i] = {"point": mu.to_json(), "image": img.to_json()}
                break
        else:
            raise RuntimeError(f"no certificate found for node {i}")
    J = frozenset(found)
    if J != desc.J_V:
        raise AssertionError(f"stabilizer {sorted(J)} differs from J(V) {sorted(desc.J_V)}")
    return J, cert


def _cone_stable(poly: Polyhedron, i: int) -> bool:
    cone = set(poly.cone)
    return all(poly.rs.reflect(c, i) in cone for c in cone)


# ------------------------------------------------------------------ faces

def face_key(desc: "HWModuleDesc", w: WeylElement, J: frozenset):
    """Vertices and cone generators lying in the face w(wt_J V)."""
    rs, lam = desc.rs, desc.lam
    poly = hull_of_module(desc)
    verts = frozenset(w.act(v) for v in poly.vertices if _in_span(rs, lam - v, J))
    cone = frozenset(w.act(c) for c in poly.cone if _in_span(rs, c, J))
    return verts, cone


def _in_span(rs, mu: Weight, J) -> bool:
    return all(c == 0 or i in J for i, c in enumerate(mu.root_coords(), 1))


def enumerate_faces(desc: "HWModuleDesc") -> list[tuple[WeylElement, frozenset]]:
    """Every nonempty face of the hull as a canonical pair (w, J).

    w is the shortlex-least element of W_J(V) giving the face and J is the
    largest index set in its equivalence class; the whole hull is (1, I).
    """
    from .faces import canonical_J

    rs = desc.rs
    classes = sorted({canonical_J(desc, frozenset(J)) for J in _subsets(rs.I)},
                     key=lambda J: (len(J), sorted(J)))
    group = rs.parabolic_elements(desc.J_V)
    seen = set()
    out = []
    for J in classes:
        for w in group:
            key = face_key(desc, w, J)
            if key in seen:
                continue
            seen.add(key)
            out.append((w, J))
    return out


def _subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        for c in combinations(items, r):
            yield frozenset(c)


__all__ = [
    "Polyhedron", "UnboundedError", "NotAVertex", "hull_of_module", "maximizer",
    "extremal_rays_at_vertex", "ray_is_face_lp", "stabilizer_parabolic",
    "enumerate_faces", "face_key", "lp_membership",
]
