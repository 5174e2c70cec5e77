"""Finite root systems, their Cartan data, and Weyl group elements as words.

Cartan convention: ``cartan[i][j] = alpha_j(h_i)``, so column ``j`` holds the
simple root ``alpha_j`` written in fundamental-weight coordinates.  The
invariant form is scaled so that long roots have squared length 2.
"""
from __future__ import annotations

import re
from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .linalg import inverse
from .weightlat import Weight, WeightError

ORBIT_CAP = 10**6

VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 3,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class RootSystemError(ValueError):
    pass


class OrbitTooLarge(RuntimeError):
    pass


def _edges(kind: str, n: int) -> list[tuple[int, int]]:
    """Dynkin edges (1-based) before multiplicities are applied."""
    if kind in "ABCFG":
        return [(i, i + 1) for i in range(1, n)]
    if kind == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if kind == "E":
        return [(1, 3), (3, 4), (2, 4)] + [(i, i + 1) for i in range(4, n)]
    raise RootSystemError(kind)


def cartan_matrix(kind: str, n: int) -> tuple[tuple[int, ...], ...]:
    kind = kind.upper()
    if kind not in VALID_RANKS or not VALID_RANKS[kind](n):
        raise RootSystemError(f"invalid root system type ({kind}, {n})")
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(kind, n):
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    # a[i][j] = alpha_j(h_i); the short root's row carries the big entry
    if kind == "B":
        a[n - 1][n - 2] = -2
    elif kind == "C":
        a[n - 2][n - 1] = -2
    elif kind == "F":
        a[2][1] = -2
    elif kind == "G":
        a[0][1] = -3
    return tuple(tuple(r) for r in a)


class RootSystem:
    def __init__(self, kind: str, rank: int):
        self.kind = kind.upper()
        self.rank = rank
        self.cartan = cartan_matrix(self.kind, rank)
        self.cartan_inv = tuple(tuple(r) for r in inverse(self.cartan))
        self.I = tuple(range(1, rank + 1))
        self.root_norms = self._root_norms()
        self.positive_roots = self._positive_roots()
        self._root_set = frozenset(self.positive_roots)
        self.highest_root = max(self.positive_roots, key=lambda b: (sum(b), b))

    # identity -----------------------------------------------------------
    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    def __repr__(self):
        return f"RootSystem({self.name})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.kind, self.rank) == (other.kind, other.rank)

    def __hash__(self):
        return hash((self.kind, self.rank))

    def __reduce__(self):
        return (root_system, (self.kind, self.rank))

    # construction ----------------------------------------------------------
    def _root_norms(self) -> tuple[Fraction, ...]:
        n = self.rank
        norms: list[Fraction | None] = [None] * n
        norms[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if norms[j] is None and self.cartan[i][j] != 0:
                    # a_ij |a_i|^2 = a_ji |a_j|^2
                    norms[j] = norms[i] * self.cartan[i][j] / self.cartan[j][i]
                    stack.append(j)
        top = max(norms)
        return tuple(Fraction(2) * x / top for x in norms)

    def _positive_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        roots = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(n):
                    if beta == simple[i]:
                        continue
                    p = 0
                    probe = list(beta)
                    while True:
                        probe[i] -= 1
                        if tuple(probe) in roots:
                            p += 1
                        else:
                            break
                    pair = sum(beta[j] * self.cartan[i][j] for j in range(n))
                    if p - pair > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in roots:
                            roots.add(up)
                            nxt.append(up)
            layer = nxt
        return tuple(sorted(roots, key=lambda b: (sum(b), b)))

    # coordinates ---------------------------------------------------------
    def weight(self, coords: Iterable) -> Weight:
        return Weight(self, coords)

    def zero(self) -> Weight:
        return Weight(self, [0] * self.rank)

    def root_to_fw(self, beta: Sequence) -> tuple:
        return tuple(sum(self.cartan[i][j] * beta[j] for j in range(self.rank)) for i in range(self.rank))

    def root_weight(self, beta: Sequence) -> Weight:
        """Weight with the given simple-root coordinates."""
        return Weight(self, self.root_to_fw(beta))

    def to_root_coords(self, fw: Sequence) -> tuple[Fraction, ...]:
        return tuple(sum(self.cartan_inv[i][j] * fw[j] for j in range(self.rank)) for i in range(self.rank))

    def simple_root(self, i: int) -> Weight:
        return Weight(self, (self.cartan[k][i - 1] for k in range(self.rank)))

    def fundamental_weight(self, i: int) -> Weight:
        return Weight(self, (int(k == i - 1) for k in range(self.rank)))

    @property
    def rho(self) -> Weight:
        return Weight(self, [1] * self.rank)

    def rho_J(self, J: Iterable[int]) -> Weight:
        J = frozenset(J)
        return Weight(self, (int(i in J) for i in self.I))

    @property
    def theta(self) -> Weight:
        return self.root_weight(self.highest_root)

    # roots -------------------------------------------------------------------
    def is_root(self, beta: Sequence) -> bool:
        beta = tuple(beta)
        return beta in self._root_set or tuple(-b for b in beta) in self._root_set

    def is_positive_root(self, beta: Sequence) -> bool:
        return tuple(beta) in self._root_set

    def positive_roots_J(self, J: Iterable[int]) -> tuple[tuple[int, ...], ...]:
        J = frozenset(J)
        return tuple(b for b in self.positive_roots if all(c == 0 or i in J for i, c in enumerate(b, 1)))

    def positive_root_weights(self) -> list[Weight]:
        return [self.root_weight(b) for b in self.positive_roots]

    # form --------------------------------------------------------------------
    def form(self, mu: Weight, nu: Weight) -> Fraction:
        """Invariant form; (omega_i, alpha_j) = delta_ij |alpha_j|^2 / 2."""
        nu_root = nu.root_coords()
        return sum((nu_root[j] * mu.fw[j] * self.root_norms[j] / 2 for j in range(self.rank)), Fraction(0))

    def reflect(self, mu: Weight, i: int) -> Weight:
        c = mu.fw[i - 1]
        if c == 0:
            return mu
        col = i - 1
        return Weight(self, (mu.fw[k] - c * self.cartan[k][col] for k in range(self.rank)))

    # Weyl group ----------------------------------------------------------------
    def weyl_element(self, word: Iterable[int] = ()) -> "WeylElement":
        return WeylElement(self, tuple(word))

    def identity(self) -> "WeylElement":
        return WeylElement(self, ())

    def _check_J(self, J: Iterable[int]) -> frozenset:
        J = frozenset(J)
        bad = [j for j in J if j not in self.I]
        if bad:
            raise RootSystemError(f"index {bad[0]} is not a node of {self.name}")
        return J

    def weyl_orbit(self, J: Iterable[int], lam: Weight) -> list[Weight]:
        """W_J(lam) by breadth-first closure under simple reflections, sorted."""
        return sorted(self.orbit_with_words(J, lam))

    def orbit_with_words(self, J: Iterable[int], lam: Weight) -> dict[Weight, tuple[int, ...]]:
        """Each orbit point with the shortlex-least word carrying lam to it."""
        J = sorted(self._check_J(J))
        seen = {lam: ()}
        queue = deque([lam])
        while queue:
            mu = queue.popleft()
            word = seen[mu]
            for j in J:
                nu = self.reflect(mu, j)
                if nu not in seen:
                    seen[nu] = (j,) + word
                    if len(seen) > ORBIT_CAP:
                        raise OrbitTooLarge(f"orbit exceeds {ORBIT_CAP} points")
                    queue.append(nu)
        return seen

    def parabolic_elements(self, J: Iterable[int]) -> list["WeylElement"]:
        """All of W_J, in shortlex order of their least reduced words."""
        J = sorted(self._check_J(J))
        probe = self.rho
        seen = {probe: ()}
        order = [()]
        queue = deque([()])
        while queue:
            word = queue.popleft()
            for j in J:
                cand = word + (j,)
                img = WeylElement(self, cand).act(probe)
                if img not in seen:
                    seen[img] = cand
                    order.append(cand)
                    if len(order) > ORBIT_CAP:
                        raise OrbitTooLarge(f"W_J exceeds {ORBIT_CAP} elements")
                    queue.append(cand)
        return [WeylElement(self, w) for w in order]

    def longest_element(self, J: Iterable[int] | None = None) -> "WeylElement":
        J = sorted(self._check_J(self.I if J is None else J))
        nu = self.rho_J(J)
        applied = []
        while True:
            j = next((k for k in J if nu.fw[k - 1] > 0), None)
            if j is None:
                break
            nu = self.reflect(nu, j)
            applied.append(j)
        return WeylElement(self, tuple(reversed(applied)))

    # serialisation -------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [list(b) for b in self.positive_roots],
        }


@lru_cache(maxsize=None)
def root_system(kind: str, rank: int) -> RootSystem:
    return RootSystem(kind.upper(), int(rank))


def parse_type(text: str) -> RootSystem:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text or "")
    if not m:
        raise RootSystemError(f"cannot parse root system type {text!r}")
    return root_system(m.group(1).upper(), int(m.group(2)))


class WeylElement:
    """An element of W stored as a word; word (i1,...,ik) means s_i1 ... s_ik."""

    __slots__ = ("rs", "word")

    def __init__(self, rs: RootSystem, word: tuple[int, ...]):
        for i in word:
            if i not in rs.I:
                raise RootSystemError(f"reflection index {i} is not a node of {rs.name}")
        self.rs = rs
        self.word = tuple(word)

    def act(self, mu: Weight) -> Weight:
        if mu.rs != self.rs:
            raise WeightError(f"weight of {mu.rs.name} acted on by W({self.rs.name})")
        for i in reversed(self.word):
            mu = self.rs.reflect(mu, i)
        return mu

    def act_root(self, beta: Sequence) -> tuple:
        return tuple(int(x) for x in self.act(self.rs.root_weight(beta)).root_coords())

    def __call__(self, mu: Weight) -> Weight:
        return self.act(mu)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.rs, self.word + other.word)

    def inverse(self) -> "WeylElement":
        return WeylElement(self.rs, tuple(reversed(self.word)))

    def _signature(self) -> Weight:
        return self.act(self.rs.rho)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.rs == other.rs and self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())

    def reduced(self) -> "WeylElement":
        """Reduced word obtained by walking w(rho) back to the dominant chamber."""
        nu = self._signature()
        steps = []
        while True:
            i = next((k for k in self.rs.I if nu.fw[k - 1] < 0), None)
            if i is None:
                break
            nu = self.rs.reflect(nu, i)
            steps.append(i)
        return WeylElement(self.rs, tuple(steps))

    def length(self) -> int:
        return len(self.reduced().word)

    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    def inversion_count(self) -> int:
        """#{alpha > 0 : w alpha < 0}, computed directly on roots."""
        count = 0
        for beta in self.rs.positive_roots:
            img = self.act(self.rs.root_weight(beta)).root_coords()
            if any(c < 0 for c in img):
                count += 1
        return count

    def __repr__(self):
        return f"WeylElement({self.rs.name}, {list(self.word)})"

    def to_json(self) -> list[int]:
        return list(self.reduced().word)
