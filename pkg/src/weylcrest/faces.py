"""Weak faces of finite weight sets and the faces wt_J V of a module.

The bounded searches look for a pair of finitely supported functions
f on X and g on Y with equal mass and equal weighted sum, where f puts
weight outside Y.  For coefficient groups Z, aZ and Q the conditions are
homogeneous, so a violating pair can always be rescaled to nonnegative
integers; the search therefore runs over integer multisets of total size at
most ``bound`` and reports witnesses in the requested group.  Over R the
question is a linear feasibility problem and is answered exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import lcm
from typing import Iterable, Sequence

from .hwmodule import (
    HWModuleDesc, PreconditionError, _Offsets, fd_simple_weights, module_contains,
    module_offsets, wt_J,
)
from .lp import solve_lp
from .polyhedron import maximizer
from .rootsys import RootSystem, WeylElement
from .weightlat import Weight, components_meeting, dominant_conjugate, rho_of, support

DEFAULT_BOUND = 6


# ------------------------------------------------------------------ coefficients

@dataclass(frozen=True)
class CoeffGroup:
    kind: str  # "int", "scaled", "rat", "real"
    scale: Fraction = Fraction(1)

    @classmethod
    def parse(cls, text: str) -> "CoeffGroup":
        t = (text or "int").strip().lower()
        if t in ("int", "z"):
            return INT
        if t in ("rat", "q"):
            return RAT
        if t in ("real", "r"):
            return REAL
        if t.startswith("scaled:"):
            a = Fraction(t.split(":", 1)[1])
            if a <= 0:
                raise ValueError("scaled coefficient group needs a positive scale")
            return cls("scaled", a)
        raise ValueError(f"unknown coefficient group {text!r}")

    def __str__(self):
        return f"scaled:{self.scale}" if self.kind == "scaled" else self.kind


INT = CoeffGroup("int")
RAT = CoeffGroup("rat")
REAL = CoeffGroup("real")


@dataclass
class FaceVerdict:
    result: bool
    bound: int | None
    group: CoeffGroup
    witness: dict | None = None

    def __bool__(self):
        return self.result

    def to_json(self) -> dict:
        out = {"result": self.result, "bound": self.bound, "coeff": str(self.group)}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


# ------------------------------------------------------------------ encoding

class _Encoder:
    """Pack integer vectors into single ints so that sums of equally many
    vectors can be compared by integer addition."""

    def __init__(self, vectors: Sequence[Sequence[int]], bound: int):
        self.offset = max((abs(c) for v in vectors for c in v), default=0) + 1
        self.base = 2 * bound * self.offset + 1
        self.codes = [self.encode(v) for v in vectors]

    def encode(self, v) -> int:
        code = 0
        mult = 1
        for c in v:
            code += (c + self.offset) * mult
            mult *= self.base
        return code


def _integer_vectors(points: Sequence[Weight]) -> list[tuple[int, ...]]:
    den = 1
    for p in points:
        for c in p.fw:
            den = lcm(den, c.denominator)
    return [tuple(int(c * den) for c in p.fw) for p in points]


class _LevelTable:
    """For each size L <= bound and each reachable sum, the set (bitmask) of
    points used by some multiset of that size with that sum."""

    def __init__(self, codes: Sequence[int], bound: int):
        self.levels: list[dict[int, int]] = [{0: 0}]
        for _ in range(bound):
            prev = self.levels[-1]
            cur: dict[int, int] = {}
            for s, mask in prev.items():
                for k, c in enumerate(codes):
                    t = s + c
                    cur[t] = cur.get(t, 0) | mask | (1 << k)
            self.levels.append(cur)


def _find_multiset(codes, allowed: Sequence[int], size: int, target: int, must_use: int | None):
    for combo in combinations_with_replacement(allowed, size):
        if sum(codes[k] for k in combo) == target and (must_use is None or any(
                k not in must_use for k in combo)):
            return combo
    return None


def _as_function(points, combo, unit: Fraction):
    counts: dict[int, int] = {}
    for k in combo:
        counts[k] = counts.get(k, 0) + 1
    return [{"weight": points[k].to_json(), "coeff": _fmt(unit * m)} for k, m in sorted(counts.items())]


def _fmt(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class WeakFaceSearcher:
    """Bounded weak-face test against one ambient set, reusable across Y."""

    def __init__(self, X: Sequence[Weight], bound: int = DEFAULT_BOUND):
        self.points = list(dict.fromkeys(X))
        self.index = {p: k for k, p in enumerate(self.points)}
        self.bound = bound
        vecs = _integer_vectors(self.points)
        self.enc = _Encoder(vecs, bound)
        self.table = _LevelTable(self.enc.codes, bound)

    def violation(self, Y: Iterable[Weight]):
        """(level, g-combo, f-combo) for a violating pair, or None."""
        ys = sorted({self.index[y] for y in Y})
        ymask = 0
        for k in ys:
            ymask |= 1 << k
        codes = self.enc.codes
        outside = ~ymask
        sums = {0}
        for L in range(1, self.bound + 1):
            sums = {s + codes[k] for s in sums for k in ys}
            table = self.table.levels[L]
            for s in sums:
                if table[s] & outside:
                    g = _find_multiset(codes, ys, L, s, None)
                    f = _find_multiset(codes, range(len(codes)), L, s, set(ys))
                    return L, g, f
        return None


def _check_subset(X, Y):
    Xs = set(X)
    missing = [y for y in Y if y not in Xs]
    if missing:
        raise ValueError(f"{missing[0]} is in Y but not in X")


def is_weak_face(X: Iterable[Weight], Y: Iterable[Weight], group: CoeffGroup = INT,
                 bound: int = DEFAULT_BOUND, searcher: WeakFaceSearcher | None = None) -> FaceVerdict:
    """Bounded test that Y is a weak face of X for the given coefficients.

    For Z, aZ and Q the answer is exact for all pairs of total size at most
    ``bound`` (counted in units of the group generator).  Over R the test is
    an exact linear program and ``bound`` is ignored.
    """
    X = list(X)
    Y = list(dict.fromkeys(Y))
    _check_subset(X, Y)
    if group.kind == "real":
        return _weak_face_real(X, Y)
    search = searcher or WeakFaceSearcher(X, bound)
    hit = search.violation(Y)
    if hit is None:
        return FaceVerdict(True, bound, group)
    L, g, f = hit
    unit = group.scale if group.kind == "scaled" else Fraction(1)
    witness = {"size": L, "f": _as_function(search.points, f, unit), "g": _as_function(search.points, g, unit)}
    return FaceVerdict(False, bound, group, witness)


def _weak_face_real(X, Y) -> FaceVerdict:
    ys = set(Y)
    n = X[0].rs.rank if X else 0
    outside = [x for x in X if x not in ys]
    for x in outside:
        # variables: f on X, then g on Y
        cols = [list(p.fw) + [1, int(p == x)] for p in X] + [[-c for c in y.fw] + [-1, 0] for y in Y]
        A = [[col[r] for col in cols] for r in range(n + 2)]
        res = solve_lp(A, [0] * (n + 1) + [1])
        if res.feasible:
            f = [{"weight": p.to_json(), "coeff": _fmt(v)} for p, v in zip(X, res.x[:len(X)]) if v]
            g = [{"weight": p.to_json(), "coeff": _fmt(v)} for p, v in zip(Y, res.x[len(X):]) if v]
            return FaceVerdict(False, None, REAL, {"f": f, "g": g})
    return FaceVerdict(True, None, REAL)


def is_positive_weak_face(X: Iterable[Weight], Y: Iterable[Weight], group: CoeffGroup = INT,
                          bound: int = DEFAULT_BOUND) -> FaceVerdict:
    """Equal weighted sums force the mass on Y to be no larger than on X.

    Decided as: 0 is not in Y and Y is a weak face of X with 0 adjoined.
    """
    X = list(X)
    Y = list(Y)
    _check_subset(X, Y)
    if not X:
        return FaceVerdict(True, bound, group)
    zero = X[0].rs.zero()
    if zero in set(Y):
        return FaceVerdict(False, bound, group, {"reason": "zero weight lies in Y"})
    X0 = X + ([zero] if zero not in set(X) else [])
    return is_weak_face(X0, Y, group, bound)


def is_closed(X: Iterable[Weight], Y: Iterable[Weight], R_prime: Iterable, R: Iterable,
              bound: int = DEFAULT_BOUND) -> FaceVerdict:
    """(R', R)-closedness: f on X and g on Y with values in R, equal mass in
    R' minus 0 and equal weighted sums force supp f into Y.

    Supports are limited to ``bound`` points, which is complete whenever R
    is made of positive numbers and R' is bounded.
    """
    X = list(dict.fromkeys(X))
    Y = list(dict.fromkeys(Y))
    _check_subset(X, Y)
    Rp = {Fraction(r) for r in R_prime} - {0}
    vals = sorted({Fraction(r) for r in R} - {0})
    ys = set(Y)

    def functions(points):
        for size in range(1, bound + 1):
            for supp in combinations(range(len(points)), size):
                for coeffs in product(vals, repeat=size):
                    total = sum(coeffs)
                    if total in Rp:
                        vec = tuple(sum(c * points[k].fw[i] for c, k in zip(coeffs, supp))
                                    for i in range(len(points[0].fw)))
                        yield total, vec, supp, coeffs

    reach = {}
    for total, vec, supp, coeffs in functions(Y):
        reach.setdefault((total, vec), (supp, coeffs))
    for total, vec, supp, coeffs in functions(X):
        if any(X[k] not in ys for k in supp) and (total, vec) in reach:
            gs, gc = reach[(total, vec)]
            witness = {
                "f": [{"weight": X[k].to_json(), "coeff": _fmt(c)} for k, c in zip(supp, coeffs)],
                "g": [{"weight": Y[k].to_json(), "coeff": _fmt(c)} for k, c in zip(gs, gc)],
            }
            return FaceVerdict(False, bound, RAT, witness)
    return FaceVerdict(True, bound, RAT)


# ------------------------------------------------------------------ wt_J classes

RULES = ("stated", "adjacent")


def _support_for(desc: HWModuleDesc, J: frozenset, rule: str) -> frozenset:
    supp = support(desc.lam)
    if rule == "stated":
        return supp
    if rule != "adjacent":
        raise ValueError(f"rule must be one of {RULES}, got {rule!r}")
    # moving down along nodes of J outside J(V) switches on their neighbours
    outside = J - desc.J_V
    cartan = desc.rs.cartan
    near = {j for j in desc.rs.I for k in outside if j != k and cartan[j - 1][k - 1] != 0}
    return supp | frozenset(near)


def faces_equal(desc: HWModuleDesc, J: Iterable[int], J2: Iterable[int], rule: str = "stated") -> bool:
    """Combinatorial test for wt_J V = wt_J2 V.

    rule="stated": J and J2 agree off J(V), and J & J2 & J(V) contains every
    component of J & J(V) and of J2 & J(V) that meets supp(lambda).
    rule="adjacent": the same with supp(lambda) enlarged by the neighbours
    of the nodes of J outside J(V); this is the version that agrees with
    comparing the weight sets directly (see tests).
    """
    J, J2 = frozenset(J), frozenset(J2)
    JV = desc.J_V
    if J - JV != J2 - JV:
        return False
    S = _support_for(desc, J, rule)
    need = components_meeting(desc.rs, J & JV, S) | components_meeting(desc.rs, J2 & JV, S)
    return need <= (J & J2 & JV)


def _subsets(items):
    items = sorted(items)
    for r in range(len(items) + 1):
        for c in combinations(items, r):
            yield frozenset(c)


def face_interval(desc: HWModuleDesc, J: Iterable[int], rule: str = "stated") -> tuple[frozenset, frozenset]:
    """(J_min, J_max) inside J(V): under the chosen rule, wt_J V = wt_J2 V
    exactly when J2 agrees with J off J(V) and J_min <= J2 & J(V) <= J_max."""
    J = frozenset(J)
    outside = J - desc.J_V
    equal = [S for S in _subsets(desc.J_V) if faces_equal(desc, J, outside | S, rule)]
    j_min = frozenset.intersection(*equal)
    j_max = frozenset.union(*equal)
    return j_min, j_max


def canonical_J(desc: HWModuleDesc, J: Iterable[int]) -> frozenset:
    """Largest index set with the same face wt_J V."""
    J = frozenset(J)
    return (J - desc.J_V) | face_interval(desc, J, "adjacent")[1]


@dataclass(frozen=True)
class FaceClass:
    w: WeylElement
    J: frozenset

    def to_json(self) -> dict:
        return {"w": list(self.w.word), "J": sorted(self.J)}


def _face_offsets(desc, offsets, w: WeylElement, J) -> set:
    """Truncated weights of w(wt_J V) given the truncated weights of V."""
    off = _Offsets(desc.lam)
    winv = w.inverse()
    outside = [i - 1 for i in desc.rs.I if i not in J]
    keep = set()
    for beta in offsets:
        mu = off.weight(beta)
        b2 = off.offset_of(winv.act(mu))
        if b2 is not None and all(b2[i] == 0 for i in outside):
            keep.add(beta)
    return keep


def classify_weak_face(desc: HWModuleDesc, Y: Iterable[Weight], depth: int = 8) -> FaceClass | None:
    """Write Y (cut at height ``depth``) as w(wt_J V), canonically, or None.

    w is the shortlex-least element of W_J(V) that works and J is the
    largest index set describing the same face.
    """
    off = _Offsets(desc.lam)
    offsets = module_offsets(desc, depth)
    target = set()
    for y in Y:
        b = off.offset_of(y)
        if b is None or b not in offsets:
            return None
        target.add(b)
    rs = desc.rs
    for w in rs.parabolic_elements(desc.J_V):
        if off.offset_of(w.act(desc.lam)) not in target:
            continue
        for J in sorted(_subsets(rs.I), key=lambda s: (len(s), sorted(s))):
            if _face_offsets(desc, offsets, w, J) == target:
                return FaceClass(w, canonical_J(desc, J))
    return None


# ------------------------------------------------------------------ rho checks

def verify_rho_maximizer(desc: HWModuleDesc, J: Iterable[int]) -> dict:
    """Check that wt_J V is cut out by rho_{I \\ J} on wt V, by the
    projected sum of its own weights on wt_{J(V)} V, and that this sum is
    fixed by W_J.  Returns the individual verdicts."""
    rs = desc.rs
    J = frozenset(J)
    if not J <= desc.J_V:
        raise PreconditionError(f"J = {sorted(J)} is not inside J(V) = {sorted(desc.J_V)}")
    face = wt_J(desc, J)
    rho_S = rho_of(face)
    phi = rs.rho_J(frozenset(rs.I) - J)
    w0 = rs.longest_element(J)
    reach = int(sum((desc.lam - w0.act(desc.lam)).root_coords())) + 1
    off = _Offsets(desc.lam)
    around = [off.weight(b) for b in module_offsets(desc, reach)]
    by_rho_complement = set(maximizer(around, phi)) == set(face)
    levi = wt_J(desc, desc.J_V)
    from .weightlat import project
    by_own_sum = set(maximizer(list(levi), project(rho_S, desc.J_V))) == set(face)
    fixed = all(rho_S.h(j) == 0 for j in J)
    top = max(rs.form(rho_S, mu) for mu in face)
    return {
        "maximizer_of_rho_complement": by_rho_complement,
        "maximizer_of_own_sum": by_own_sum,
        "sum_fixed_by_W_J": fixed,
        "all_weights_maximal": all(rs.form(rho_S, mu) == top for mu in face),
    }


# ------------------------------------------------------------------ ascent

def walk_to_vertex(lam: Weight, Y: Iterable[Weight], bound: int = 2) -> WeylElement:
    """For a ({2},{1,2})-closed Y inside wt L(lam), an element w with w(lam) in Y.

    Starting from a dominant point of a Weyl translate of Y, repeatedly step
    up by a simple root that stays a weight and move back to the dominant
    chamber, until lam is reached.
    """
    rs = lam.rs
    if any(c.denominator != 1 or c < 0 for c in lam.fw) or not any(lam.fw):
        raise PreconditionError("lambda must be a nonzero dominant integral weight")
    X = fd_simple_weights(rs, rs.I, lam)
    Y = list(dict.fromkeys(Y))
    if not Y:
        raise PreconditionError("Y is empty")
    _check_subset(X, Y)
    verdict = is_closed(list(X), Y, [2], [1, 2], bound)
    if not verdict:
        raise PreconditionError(f"Y is not ({{2}},{{1,2}})-closed: {verdict.witness}")
    Xs = X.weights
    ys = set(Y)
    start = sorted(Y, key=lambda m: (-sum(m.root_coords()), tuple(-c for c in m.fw)))[0]
    mu, word = dominant_conjugate(start)
    T = rs.weyl_element(word)  # T(start) = mu, so T(Y) contains mu
    while mu != lam:
        step = next((i for i in rs.I if mu + rs.simple_root(i) in Xs), None)
        if step is None:
            raise AssertionError(f"no raising step from {mu}")
        nu = mu + rs.simple_root(step)
        if T.inverse().act(nu) not in ys:
            raise AssertionError("closedness did not carry the ascent")
        mu, word = dominant_conjugate(nu)
        T = rs.weyl_element(word) * T
    return T.inverse().reduced()


# ------------------------------------------------------------------ ideals

def is_abelian_ideal(rs: RootSystem, Psi: Iterable[Sequence[int]]) -> bool:
    """Psi inside the positive roots with (Psi+Psi) and Phi disjoint and
    (Psi + Phi_+) meeting Phi only inside Psi."""
    psi = {tuple(b) for b in Psi}
    if not all(rs.is_positive_root(b) for b in psi):
        return False
    for a in psi:
        for b in psi:
            if rs.is_root(tuple(x + y for x, y in zip(a, b))):
                return False
        for b in rs.positive_roots:
            s = tuple(x + y for x, y in zip(a, b))
            if rs.is_root(s) and s not in psi:
                return False
    return True


__all__ = [
    "CoeffGroup", "INT", "RAT", "REAL", "FaceVerdict", "WeakFaceSearcher", "is_weak_face",
    "is_positive_weak_face", "is_closed", "faces_equal", "face_interval", "canonical_J",
    "FaceClass", "classify_weak_face", "verify_rho_maximizer", "walk_to_vertex",
    "is_abelian_ideal", "rho_of", "module_contains",
]
