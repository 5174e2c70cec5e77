"""Slow, independent reference computations used to cross-check the main
code paths.  Nothing here shares a shortcut with the module it checks:
hull points come from an LP on the vertex description, multiplicities from
Freudenthal's recursion, Verma characters from an unmemoised enumeration.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .faces import INT, CoeffGroup, WeakFaceSearcher
from .hwmodule import HWModuleDesc, _Offsets, compositions
from .polyhedron import lp_membership
from .rootsys import RootSystem
from .weightlat import Weight

MAX_BRUTE = 16


def brute_weak_faces(X: Sequence[Weight], bound: int = 6, must_contain: Iterable[Weight] = (),
                     group: CoeffGroup = INT) -> list[frozenset]:
    """All nonempty weak faces of X by scanning every subset (bounded test)."""
    X = list(dict.fromkeys(X))
    if len(X) > MAX_BRUTE:
        raise ValueError(f"|X| = {len(X)} is over the brute-force limit {MAX_BRUTE}")
    need = frozenset(must_contain)
    searcher = WeakFaceSearcher(X, bound)
    out = []
    for r in range(1, len(X) + 1):
        for Y in combinations(X, r):
            Ys = frozenset(Y)
            if need <= Ys and searcher.violation(Ys) is None:
                out.append(Ys)
    return out


def naive_weak_face(X: Sequence[Weight], Y: Sequence[Weight], bound: int) -> bool:
    """Direct double loop over multisets; only for tiny inputs."""
    from itertools import combinations_with_replacement

    X = list(X)
    ys = set(Y)
    for L in range(1, bound + 1):
        gsums = {}
        for g in combinations_with_replacement(sorted(ys), L):
            gsums[_total(g)] = g
        for f in combinations_with_replacement(X, L):
            if any(x not in ys for x in f) and _total(f) in gsums:
                return False
    return True


def _total(ws):
    n = len(ws[0].fw)
    return tuple(sum(w.fw[i] for w in ws) for i in range(n))


def lattice_hull_points(desc: HWModuleDesc, depth: int) -> set[Weight]:
    """(lam - Z_+ Delta) within the hull, cut at height ``depth``, by LP."""
    rs, lam = desc.rs, desc.lam
    verts = rs.weyl_orbit(desc.J_V, lam)
    inside = set(rs.positive_roots_J(desc.J_V))
    rays = [-rs.root_weight(b) for b in rs.positive_roots if b not in inside]
    off = _Offsets(lam)
    out = set()
    for beta in compositions(rs.rank, range(rs.rank), depth):
        mu = off.weight(beta)
        if lp_membership(mu, verts, rays):
            out.add(mu)
    return out


def weyl_dim(lam: Weight) -> int:
    rs = lam.rs
    shifted = lam + rs.rho
    num = Fraction(1)
    for b in rs.positive_roots:
        alpha = rs.root_weight(b)
        num *= rs.form(shifted, alpha) / rs.form(rs.rho, alpha)
    if num.denominator != 1:
        raise AssertionError(f"non-integral dimension {num}")
    return int(num)


def freudenthal_character(lam: Weight) -> dict[Weight, int]:
    """All multiplicities of L(lam), lam dominant integral, by Freudenthal's formula."""
    rs = lam.rs
    if any(c.denominator != 1 or c < 0 for c in lam.fw):
        raise ValueError("Freudenthal's formula needs a dominant integral weight")
    rho = rs.rho
    lowest = rs.longest_element().act(lam)
    span = [int(c) for c in (lam - lowest).root_coords()]
    top_norm = rs.form(lam + rho, lam + rho)
    roots = [(b, rs.root_weight(b)) for b in rs.positive_roots]
    mult: dict[tuple, int] = {}
    order = sorted(_box(span), key=sum)
    for beta in order:
        if not any(beta):
            mult[beta] = 1
            continue
        mu = lam - rs.root_weight(beta)
        denom = top_norm - rs.form(mu + rho, mu + rho)
        if denom <= 0:
            mult[beta] = 0
            continue
        acc = Fraction(0)
        for b, alpha in roots:
            k = 1
            while True:
                up = tuple(x - k * y for x, y in zip(beta, b))
                if any(x < 0 for x in up):
                    break
                m = mult.get(up, 0)
                if m:
                    acc += m * rs.form(mu + alpha * k, alpha)
                k += 1
        value = 2 * acc / denom
        if value.denominator != 1:
            raise AssertionError(f"non-integral multiplicity {value}")
        mult[beta] = int(value)
    return {lam - rs.root_weight(b): m for b, m in mult.items() if m}


def _box(span):
    def rec(i):
        if i == len(span):
            yield ()
            return
        for v in range(span[i] + 1):
            for rest in rec(i + 1):
                yield (v,) + rest
    return rec(0)


def freudenthal_mult(lam: Weight, mu: Weight) -> int:
    return freudenthal_character(lam).get(mu, 0)


def _partitions_raw(roots: Sequence[tuple], beta: tuple) -> int:
    if not any(beta):
        return 1
    if not roots:
        return 0
    first, rest = roots[0], roots[1:]
    total = 0
    cur = beta
    while all(c >= 0 for c in cur):
        total += _partitions_raw(rest, cur)
        cur = tuple(a - b for a, b in zip(cur, first))
    return total


def verma_character_raw(lam: Weight, depth: int) -> dict[Weight, int]:
    """ch M(lam) cut at height ``depth``, counting partitions afresh each time
    with the positive roots taken from the highest down."""
    rs = lam.rs
    roots = list(reversed(rs.positive_roots))
    out = {}
    for beta in compositions(rs.rank, range(rs.rank), depth):
        out[lam - rs.root_weight(beta)] = _partitions_raw(roots, beta)
    return out
