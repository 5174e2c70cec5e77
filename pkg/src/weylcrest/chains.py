"""Saturated chains of weights: mu' = mu_0 > mu_1 > ... > mu_N = mu with
every step a simple root and every mu_k a weight of the module."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .hwmodule import Family, HWModuleDesc, PreconditionError, module_contains
from .rootsys import RootSystem
from .weightlat import Weight, j_lambda, leq


@dataclass
class WeightChain:
    weights: list[Weight]
    steps: list[int]  # node i with weights[k] - weights[k+1] = alpha_i

    def __len__(self):
        return len(self.steps)

    def to_json(self) -> dict:
        return {"weights": [w.to_json() for w in self.weights], "steps": self.steps}


@dataclass
class ChainResult:
    chain: WeightChain | None
    covered: bool
    reasons: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.chain is not None

    def to_json(self) -> dict:
        return {
            "result": self.found,
            "covered": self.covered,
            "reasons": self.reasons,
            "chain": self.chain.to_json() if self.chain else None,
        }


def chain_guarantees(desc: HWModuleDesc, mu: Weight, mu_prime: Weight) -> list[str]:
    """Conditions under which a chain from mu' down to mu is known to exist
    (given both are weights with mu <= mu')."""
    rs = desc.rs
    out = []
    diff = (mu_prime - mu).root_coords()
    if not any(diff):
        out.append("equal")
    JV = desc.J_V
    is_simple = sum(diff) == 1 and all(c in (0, 1) for c in diff)
    in_levi = all(c.denominator == 1 and c >= 0 and (c == 0 or i in JV) for i, c in enumerate(diff, 1))
    if is_simple or in_levi:
        out.append("simple root or Levi step")
    if len(j_lambda(desc.lam) - JV) <= 1:
        out.append("at most one integral node outside J(V)")
    if desc.family in (Family.PARABOLIC, Family.VERMA):
        # a Verma module is the parabolic Verma module with empty J
        out.append("parabolic Verma module")
    return out


def _walk(members, mu: Weight, mu_prime: Weight, rs: RootSystem):
    """Lexicographically least chain of simple-root steps staying in ``members``."""
    simple = [rs.simple_root(i) for i in rs.I]

    @lru_cache(maxsize=None)
    def reach(nu: Weight) -> bool:
        if nu == mu:
            return True
        for a in simple:
            nxt = nu - a
            if leq(mu, nxt) and members(nxt) and reach(nxt):
                return True
        return False

    if not (leq(mu, mu_prime) and members(mu) and members(mu_prime)):
        return None
    if not reach(mu_prime):
        return None
    weights = [mu_prime]
    steps = []
    nu = mu_prime
    while nu != mu:
        for i, a in zip(rs.I, simple):
            nxt = nu - a
            if leq(mu, nxt) and members(nxt) and reach(nxt):
                weights.append(nxt)
                steps.append(i)
                nu = nxt
                break
    return WeightChain(weights, steps)


def find_chain(desc: HWModuleDesc, mu: Weight, mu_prime: Weight) -> ChainResult:
    """Chain from mu' down to mu inside wt V, lexicographically least in the
    sequence of nodes.  ``covered`` says whether existence is guaranteed."""
    if not leq(mu, mu_prime):
        raise PreconditionError("mu is not below mu'")
    for m in (mu, mu_prime):
        if not module_contains(desc, m):
            raise PreconditionError(f"{m} is not a weight of the module")
    reasons = chain_guarantees(desc, mu, mu_prime)
    chain = _walk(lambda nu: module_contains(desc, nu), mu, mu_prime, desc.rs)
    return ChainResult(chain, bool(reasons), reasons)


def root_chain(rs: RootSystem, mu: Weight, mu_prime: Weight) -> WeightChain:
    """Chain of positive roots from mu' down to the simple root mu."""
    root_of = _root_tuple
    b, bp = root_of(mu), root_of(mu_prime)
    if b is None or sum(b) != 1 or not rs.is_positive_root(b):
        raise PreconditionError(f"{mu} is not a simple root")
    if bp is None or not rs.is_positive_root(bp):
        raise PreconditionError(f"{mu_prime} is not a positive root")
    chain = _walk(lambda nu: (t := root_of(nu)) is not None and rs.is_positive_root(t), mu, mu_prime, rs)
    if chain is None:
        raise PreconditionError(f"{mu} is not below {mu_prime}")
    return chain


def _root_tuple(mu: Weight):
    coords = mu.root_coords()
    if any(c.denominator != 1 for c in coords):
        return None
    return tuple(int(c) for c in coords)


def is_chain(desc_or_members, chain: WeightChain) -> bool:
    """Check steps are simple roots and every weight passes the membership test."""
    members = desc_or_members
    if isinstance(desc_or_members, HWModuleDesc):
        members = lambda nu: module_contains(desc_or_members, nu)  # noqa: E731
    ws = chain.weights
    rs = ws[0].rs
    for k, i in enumerate(chain.steps):
        if ws[k] - ws[k + 1] != rs.simple_root(i):
            return False
    return all(members(w) for w in ws)
