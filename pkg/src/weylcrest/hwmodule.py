"""Highest weight modules described by (lambda, family), their weight sets
and truncated characters.

Internally a weight of a module with highest weight ``lam`` is handled as
an offset ``beta`` (a tuple of ints in simple-root coordinates) standing for
``lam - beta``.  On nodes j in J_lam the value ``(lam - beta)(h_j)`` is an
integer, so everything that only reflects along such nodes stays in
integer arithmetic.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .rootsys import RootSystem, WeylElement
from .weightlat import Weight, dot_action, j_lambda, leq

DEFAULT_DEPTH = 8


class Family(enum.Enum):
    VERMA = "verma"
    PARABOLIC = "parabolic"
    SIMPLE = "simple"
    GENERIC = "generic"


class InvalidDescriptor(ValueError):
    pass


class UnsupportedModule(ValueError):
    """The requested quantity is not determined by (lambda, J(V)) for this module."""


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True, eq=True)
class HWModuleDesc:
    lam: Weight
    family: Family
    J_input: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        rs = self.lam.rs
        J = frozenset(self.J_input)
        object.__setattr__(self, "J_input", J)
        for j in sorted(J):
            if j not in rs.I:
                raise InvalidDescriptor(f"index {j} is not a node of {rs.name}")
        if self.family in (Family.PARABOLIC, Family.GENERIC):
            jl = j_lambda(self.lam)
            for j in sorted(J):
                if j not in jl:
                    raise InvalidDescriptor(
                        f"index {j} is not in J_lambda = {sorted(jl)}: "
                        f"lambda(h_{j}) = {self.lam.h(j)} is not a nonnegative integer")
        elif J:
            raise InvalidDescriptor(f"{self.family.value} modules take no index set")

    # constructors
    @classmethod
    def verma(cls, lam: Weight) -> "HWModuleDesc":
        return cls(lam, Family.VERMA)

    @classmethod
    def parabolic(cls, lam: Weight, J: Iterable[int]) -> "HWModuleDesc":
        return cls(lam, Family.PARABOLIC, frozenset(J))

    @classmethod
    def simple(cls, lam: Weight) -> "HWModuleDesc":
        return cls(lam, Family.SIMPLE)

    @classmethod
    def generic(cls, lam: Weight, J: Iterable[int]) -> "HWModuleDesc":
        return cls(lam, Family.GENERIC, frozenset(J))

    @property
    def rs(self) -> RootSystem:
        return self.lam.rs

    @property
    def J_V(self) -> frozenset:
        if self.family is Family.VERMA:
            return frozenset()
        if self.family is Family.SIMPLE:
            return j_lambda(self.lam)
        return self.J_input

    @property
    def weight_formula_valid(self) -> bool:
        if self.family is not Family.GENERIC:
            return True
        return len(j_lambda(self.lam) - self.J_V) <= 1

    def __hash__(self):
        return hash((self.lam, self.family, self.J_input))

    def __repr__(self):
        extra = f", J={sorted(self.J_input)}" if self.family in (Family.PARABOLIC, Family.GENERIC) else ""
        return f"HWModuleDesc({self.lam!r}, {self.family.value}{extra})"

    def to_json(self) -> dict:
        return {
            "type": self.rs.name,
            "lambda": self.lam.to_json(),
            "family": self.family.value,
            "J_lambda": sorted(j_lambda(self.lam)),
            "J": sorted(self.J_input),
            "J_V": sorted(self.J_V),
            "weight_formula_valid": self.weight_formula_valid,
        }


def parse_family(lam: Weight, text: str) -> HWModuleDesc:
    """'verma', 'simple', 'parabolic:1,2', 'generic:2'."""
    name, _, rest = (text or "").partition(":")
    name = name.strip().lower()
    J = frozenset(int(x) for x in rest.replace(" ", "").split(",") if x) if rest else frozenset()
    try:
        fam = Family(name)
    except ValueError:
        raise InvalidDescriptor(f"unknown family {text!r}") from None
    return HWModuleDesc(lam, fam, J)


class WeightSet:
    """A finite set of weights, possibly the truncation of an infinite one.

    ``depth`` is the height bound used (None when the set is complete) and
    ``exact`` says whether the set is the whole answer.  Equality compares
    the underlying weights only.
    """

    def __init__(self, weights: Iterable[Weight], depth: int | None = None, exact: bool = False):
        self.weights = frozenset(weights)
        self.depth = depth
        self.exact = exact

    def __iter__(self) -> Iterator[Weight]:
        return iter(sorted(self.weights, key=weight_sort_key))

    def __len__(self):
        return len(self.weights)

    def __contains__(self, mu):
        return mu in self.weights

    def __eq__(self, other):
        if isinstance(other, WeightSet):
            return self.weights == other.weights
        if isinstance(other, (set, frozenset)):
            return self.weights == other
        return NotImplemented

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        tag = "exact" if self.exact else f"depth<={self.depth}"
        return f"WeightSet({len(self.weights)} weights, {tag})"

    def to_json(self) -> list:
        return [mu.to_json() for mu in self]


def weight_sort_key(mu: Weight):
    return (-sum(mu.root_coords()), tuple(-x for x in mu.fw))


# ------------------------------------------------------------------ offsets

def compositions(n: int, allowed: Sequence[int], max_height: int) -> Iterator[tuple[int, ...]]:
    """All beta in Z_+^n supported on ``allowed`` (0-based) with sum <= max_height."""
    allowed = list(allowed)

    def rec(pos, remaining, cur):
        if pos == len(allowed):
            yield tuple(cur)
            return
        k = allowed[pos]
        for v in range(remaining + 1):
            cur[k] = v
            yield from rec(pos + 1, remaining - v, cur)
        cur[k] = 0

    yield from rec(0, max_height, [0] * n)


class _Offsets:
    def __init__(self, lam: Weight):
        self.rs = lam.rs
        self.lam = lam
        self.n = lam.rs.rank
        self.cartan = lam.rs.cartan

    def value(self, beta, j: int):
        """(lam - beta)(h_j), j 0-based."""
        row = self.cartan[j]
        return self.lam.fw[j] - sum(row[k] * beta[k] for k in range(self.n))

    def weight(self, beta) -> Weight:
        lam, c, n = self.lam.fw, self.cartan, self.n
        return Weight(self.rs, (lam[i] - sum(c[i][k] * beta[k] for k in range(n)) for i in range(n)))

    def offset_of(self, mu: Weight):
        """lam - mu in root coordinates, as ints when integral, else None."""
        coords = (self.lam - mu).root_coords()
        if any(c.denominator != 1 for c in coords):
            return None
        return tuple(int(c) for c in coords)

    def fd_block(self, J0: Sequence[int], base, max_height: int | None):
        """Offsets of wt L_J(lam - base), optionally cut at total height."""
        J0 = list(J0)
        for j in J0:
            v = self.value(base, j)
            if v.denominator != 1 or v < 0:
                raise PreconditionError(
                    f"top weight is not dominant integral on node {j + 1} (value {v})")
        seen = {tuple(base)}
        queue = deque([tuple(base)])
        while queue:
            beta = queue.popleft()
            for j in J0:
                cand = list(beta)
                cand[j] += 1
                if max_height is not None and sum(cand) > max_height:
                    continue
                cand = tuple(cand)
                if cand in seen:
                    continue
                if self._in_block(cand, J0, base):
                    seen.add(cand)
                    queue.append(cand)
        return seen

    def _in_block(self, beta, J0, base) -> bool:
        """lam - beta is a weight of L_J(lam - base) iff its J-dominant
        conjugate lies below lam - base."""
        cur = list(beta)
        while True:
            for j in J0:
                v = self.value(cur, j)
                if v < 0:
                    cur[j] += int(v)
                    break
            else:
                break
        return all(cur[j] >= base[j] for j in J0)


def _zero(n):
    return (0,) * n


# ------------------------------------------------------------------ weight sets

def fd_simple_weights(rs: RootSystem, J: Iterable[int], mu: Weight, depth: int | None = None) -> WeightSet:
    """wt L_J(mu) for mu dominant integral on J, as weights of the full algebra."""
    J = frozenset(J)
    off = _Offsets(mu)
    block = off.fd_block([j - 1 for j in sorted(J)], _zero(rs.rank), depth)
    return WeightSet((off.weight(b) for b in block), depth, exact=depth is None)


def _require_valid(desc: HWModuleDesc):
    if not desc.weight_formula_valid:
        raise UnsupportedModule(
            f"weights of a generic module with |J_lambda \\ J(V)| = "
            f"{len(j_lambda(desc.lam) - desc.J_V)} are not determined by (lambda, J(V))")


def _formula_a(desc: HWModuleDesc, depth: int) -> set:
    from .polyhedron import hull_of_module

    poly = hull_of_module(desc)
    n = desc.rs.rank
    return {b for b in compositions(n, range(n), depth) if poly.contains_offset(b)}


def _formula_b(desc: HWModuleDesc, depth: int) -> set:
    rs = desc.rs
    off = _Offsets(desc.lam)
    J = desc.J_V
    top = off.fd_block([j - 1 for j in sorted(J)], _zero(rs.rank), depth)
    inside = set(rs.positive_roots_J(J))
    steps = [b for b in rs.positive_roots if b not in inside]
    seen = set(top)
    queue = deque(top)
    while queue:
        beta = queue.popleft()
        for g in steps:
            cand = tuple(a + b for a, b in zip(beta, g))
            if sum(cand) <= depth and cand not in seen:
                seen.add(cand)
                queue.append(cand)
    return seen


def _formula_c(desc: HWModuleDesc, depth: int) -> set:
    rs = desc.rs
    off = _Offsets(desc.lam)
    J = desc.J_V
    J0 = [j - 1 for j in sorted(J)]
    outside = [i - 1 for i in rs.I if i not in J]
    out: set = set()
    for base in compositions(rs.rank, outside, depth):
        block = off.fd_block(J0, base, depth)
        if out & block:
            raise AssertionError(f"blocks overlap at base {base}")
        out |= block
    return out


_FORMULAS = {"a": _formula_a, "b": _formula_b, "c": _formula_c}


def module_offsets(desc: HWModuleDesc, depth: int, formula: str = "b") -> set:
    _require_valid(desc)
    try:
        return _FORMULAS[formula](desc, depth)
    except KeyError:
        raise ValueError(f"formula must be one of a, b, c; got {formula!r}") from None


def module_weights(desc: HWModuleDesc, depth: int = DEFAULT_DEPTH, formula: str = "b") -> WeightSet:
    """Weights of V with lam - mu of height <= depth.

    formula 'a': lattice points of the hull; 'b': finite part minus the
    monoid on roots outside Phi_J; 'c': union of Levi blocks.
    """
    off = _Offsets(desc.lam)
    offsets = module_offsets(desc, depth, formula)
    exact = _finite_height(desc) is not None and _finite_height(desc) <= depth
    return WeightSet((off.weight(b) for b in offsets), depth, exact)


def _finite_height(desc: HWModuleDesc):
    """Height of lam - w_J lam when the module is finite dimensional, else None."""
    if desc.J_V != frozenset(desc.rs.I):
        return None
    w0 = desc.rs.longest_element(desc.J_V)
    return int(sum((desc.lam - w0.act(desc.lam)).root_coords()))


def module_contains(desc: HWModuleDesc, mu: Weight) -> bool:
    """Exact membership mu in wt V (lattice condition plus hull)."""
    from .polyhedron import hull_of_module

    _require_valid(desc)
    beta = _Offsets(desc.lam).offset_of(mu)
    if beta is None or any(b < 0 for b in beta):
        return False
    return hull_of_module(desc).contains_offset(beta)


def wt_J(desc: HWModuleDesc, J: Iterable[int], depth: int = DEFAULT_DEPTH) -> WeightSet:
    """wt V intersected with lam - Z_+ Delta_J.

    When J lies inside J(V) this is the finite weight set of the Levi module
    L_J(lam) and is returned exactly, whatever ``depth`` says.
    """
    rs = desc.rs
    J = rs._check_J(J)
    off = _Offsets(desc.lam)
    if J <= desc.J_V:
        block = off.fd_block([j - 1 for j in sorted(J)], _zero(rs.rank), None)
        return WeightSet((off.weight(b) for b in block), None, exact=True)
    _require_valid(desc)
    outside = [i - 1 for i in rs.I if i not in J]
    offs = [b for b in module_offsets(desc, depth) if all(b[i] == 0 for i in outside)]
    return WeightSet((off.weight(b) for b in offs), depth, exact=False)


def offsets_height(beta) -> int:
    return sum(beta)


# ------------------------------------------------------------------ characters

@lru_cache(maxsize=None)
def _kostant(rs: RootSystem, beta: tuple, k: int) -> int:
    if k == len(rs.positive_roots):
        return int(not any(beta))
    gamma = rs.positive_roots[k]
    total = 0
    cur = beta
    while all(c >= 0 for c in cur):
        total += _kostant(rs, cur, k + 1)
        cur = tuple(a - b for a, b in zip(cur, gamma))
    return total


def kostant_partition(rs: RootSystem, beta: Sequence) -> int:
    """Number of ways to write beta as a sum of positive roots (memoised)."""
    if isinstance(beta, Weight):
        beta = beta.root_coords()
    if any(Fraction(b).denominator != 1 for b in beta):
        raise PreconditionError(f"{tuple(map(str, beta))} is not in the root lattice")
    beta = tuple(int(b) for b in beta)
    if any(b < 0 for b in beta):
        return 0
    return _kostant(rs, beta, 0)


class FormalCharacter:
    """Finitely many (weight, multiplicity) pairs, cut at a height bound."""

    def __init__(self, mults: dict, depth: int | None):
        self.mults = {mu: m for mu, m in mults.items() if m != 0}
        self.depth = depth

    def __getitem__(self, mu):
        return self.mults.get(mu, 0)

    def __len__(self):
        return len(self.mults)

    def __iter__(self):
        return iter(sorted(self.mults, key=weight_sort_key))

    def items(self):
        return [(mu, self.mults[mu]) for mu in self]

    def total(self) -> int:
        return sum(self.mults.values())

    def support(self) -> frozenset:
        return frozenset(self.mults)

    def __eq__(self, other):
        return isinstance(other, FormalCharacter) and self.mults == other.mults

    def __repr__(self):
        return f"FormalCharacter({len(self.mults)} weights, depth={self.depth})"

    def to_json(self) -> list:
        return [{"weight": mu.to_json(), "multiplicity": m} for mu, m in self.items()]


def dot_orbit(rs: RootSystem, lam: Weight, J: Iterable[int] | None = None) -> dict:
    """w . lam for w in W_J, keyed by weight, with one word per point."""
    shifted = rs.orbit_with_words(rs.I if J is None else J, lam + rs.rho)
    return {mu - rs.rho: word for mu, word in shifted.items()}


def check_wcf_hypothesis(lam: Weight) -> bool:
    """Whether the linked weights below lam are exactly the W_{J_lam} dot-orbit."""
    rs = lam.rs
    below = {mu for mu in dot_orbit(rs, lam) if leq(mu, lam)}
    levi = set(dot_orbit(rs, lam, j_lambda(lam)))
    return below == levi


def _alternating_terms(desc: HWModuleDesc, J: frozenset):
    rs = desc.rs
    off = _Offsets(desc.lam)
    terms = []
    for w in rs.parabolic_elements(J):
        shifted = off.offset_of(dot_action(w, desc.lam))
        terms.append((w.sign(), shifted))
    return terms


def truncated_character(desc: HWModuleDesc, depth: int = DEFAULT_DEPTH) -> FormalCharacter:
    """Character of V cut at height ``depth`` below lam.

    Verma: Kostant partition function.  Parabolic Verma: alternating sum over
    W_J of shifted Verma characters.  Simple: the same sum over W_{J_lam},
    allowed only when ``check_wcf_hypothesis`` holds.
    """
    rs = desc.rs
    if desc.family is Family.GENERIC:
        raise UnsupportedModule("characters of generic modules are not determined by (lambda, J(V))")
    if desc.family is Family.SIMPLE and not check_wcf_hypothesis(desc.lam):
        raise UnsupportedModule(
            "simple module outside the range where the parabolic Verma formula applies")
    off = _Offsets(desc.lam)
    terms = _alternating_terms(desc, desc.J_V)
    mults = {}
    for beta in compositions(rs.rank, range(rs.rank), depth):
        m = 0
        for sign, shift in terms:
            m += sign * kostant_partition(rs, tuple(a - b for a, b in zip(beta, shift)))
        if m < 0:
            raise AssertionError(f"negative multiplicity {m} at offset {beta}")
        if m:
            mults[off.weight(beta)] = m
    return FormalCharacter(mults, depth)


# ------------------------------------------------------------------ structure

@dataclass(frozen=True)
class WitnessRecord:
    lam: Weight
    i: int
    j: int
    mu_star: Weight
    kostant_value: int
    in_lattice: bool
    in_verma_hull: bool
    below_reflected: bool

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "nodes": [self.i, self.j],
            "mu_star": self.mu_star.to_json(),
            "kostant_value": self.kostant_value,
            "in_lattice": self.in_lattice,
            "in_verma_hull": self.in_verma_hull,
            "below_reflected": self.below_reflected,
        }


def counterexample_witness(lam: Weight, i: int, j: int) -> WitnessRecord:
    """The weight s_i s_j . lam for two commuting nodes of J_lam.

    It has multiplicity one in M(lam) and lies in the hull of M(lam) and in
    lam - Z Delta.  It also lies below both s_i . lam and s_j . lam, so the
    quotient of M(lam) by those two Verma submodules has J(V) empty but misses
    this weight.
    """
    rs = lam.rs
    jl = j_lambda(lam)
    if i == j:
        raise PreconditionError("the two nodes must differ")
    for k in (i, j):
        if k not in rs.I:
            raise PreconditionError(f"index {k} is not a node of {rs.name}")
        if k not in jl:
            raise PreconditionError(f"node {k} is not in J_lambda = {sorted(jl)}")
    if rs.cartan[i - 1][j - 1] != 0:
        raise PreconditionError(f"nodes {i} and {j} are joined in the Dynkin diagram")
    w = rs.weyl_element((i, j))
    mu = dot_action(w, lam)
    beta = (lam - mu).root_coords()
    in_lattice = all(c.denominator == 1 for c in beta)
    in_hull = all(c >= 0 for c in beta)
    below = leq(mu, dot_action(rs.weyl_element((i,)), lam)) and leq(mu, dot_action(rs.weyl_element((j,)), lam))
    return WitnessRecord(
        lam=lam, i=i, j=j, mu_star=mu,
        kostant_value=kostant_partition(rs, lam - mu),
        in_lattice=in_lattice, in_verma_hull=in_hull,
        below_reflected=below,
    )


def fernando_parabolic(desc: HWModuleDesc) -> frozenset:
    """Roots acting locally finitely: all positive roots and the negatives of Phi_J(V)."""
    rs = desc.rs
    pos = set(rs.positive_roots)
    neg = {tuple(-c for c in b) for b in rs.positive_roots_J(desc.J_V)}
    return frozenset(pos | neg)


def negative_simple_nodes(roots: Iterable[Sequence[int]], rank: int) -> frozenset:
    """Nodes i with -alpha_i in the given root set."""
    roots = set(map(tuple, roots))
    return frozenset(i for i in range(1, rank + 1)
                     if tuple(-int(k == i - 1) for k in range(rank)) in roots)
