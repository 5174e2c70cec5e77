"""Weights in fundamental-weight coordinates, with exact rational entries.

A weight ``mu`` is stored as the tuple ``(mu(h_1), ..., mu(h_n))``.  Index
sets are ``frozenset``s of 1-based node labels (Bourbaki numbering).
"""
from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Sequence

if TYPE_CHECKING:
    from .rootsys import RootSystem, WeylElement

SubsetJ = frozenset


class WeightError(ValueError):
    pass


def parse_rational(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise WeightError(f"refusing float coordinate {text!r}; pass 'p/q' strings")
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise WeightError(f"not a rational number: {text!r}") from exc


def fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Weight:
    __slots__ = ("rs", "fw", "_hash")

    def __init__(self, rs: "RootSystem", fw: Iterable):
        coords = tuple(parse_rational(x) for x in fw)
        if len(coords) != rs.rank:
            raise WeightError(f"{rs.name} needs {rs.rank} coordinates, got {len(coords)}")
        object.__setattr__(self, "rs", rs)
        object.__setattr__(self, "fw", coords)
        object.__setattr__(self, "_hash", hash((rs.kind, rs.rank, coords)))

    def __setattr__(self, key, value):
        raise AttributeError("Weight is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.fw == other.fw and self.rs == other.rs

    def __lt__(self, other: "Weight"):
        # lexicographic on coordinates; only used for deterministic output
        return self.fw < other.fw

    def __repr__(self):
        return f"Weight({self.rs.name}, [{', '.join(fmt_rational(x) for x in self.fw)}])"

    def _check(self, other: "Weight"):
        if other.rs != self.rs:
            raise WeightError(f"cannot combine weights of {self.rs.name} and {other.rs.name}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.rs, (a + b for a, b in zip(self.fw, other.fw)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.rs, (a - b for a, b in zip(self.fw, other.fw)))

    def __neg__(self) -> "Weight":
        return Weight(self.rs, (-a for a in self.fw))

    def __mul__(self, k) -> "Weight":
        k = parse_rational(k)
        return Weight(self.rs, (k * a for a in self.fw))

    __rmul__ = __mul__

    def h(self, i: int) -> Fraction:
        """Value on the simple coroot h_i (1-based)."""
        return self.fw[i - 1]

    def root_coords(self) -> tuple[Fraction, ...]:
        return self.rs.to_root_coords(self.fw)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.fw)

    def in_root_lattice(self) -> bool:
        return all(x.denominator == 1 for x in self.root_coords())

    def to_json(self) -> dict:
        return {"fw": [fmt_rational(x) for x in self.fw]}

    @classmethod
    def from_json(cls, rs: "RootSystem", data) -> "Weight":
        if isinstance(data, dict):
            data = data.get("fw")
        if not isinstance(data, (list, tuple)):
            raise WeightError("weight JSON must look like {\"fw\": [\"p/q\", ...]}")
        return cls(rs, data)


def parse_weight(rs: "RootSystem", text: str) -> Weight:
    """'1,1/2,0' -> Weight."""
    parts = [p for p in text.replace(" ", "").split(",") if p != ""]
    return Weight(rs, parts)


# ---------------------------------------------------------------- operations

def height(beta: Weight | Sequence) -> Fraction:
    """Sum of root-basis coordinates."""
    coords = beta.root_coords() if isinstance(beta, Weight) else beta
    return sum(coords, Fraction(0))


def leq(mu: Weight, lam: Weight) -> bool:
    """mu <= lam, i.e. lam - mu is a nonnegative integer combination of simple roots."""
    return all(c.denominator == 1 and c >= 0 for c in (lam - mu).root_coords())


def j_lambda(lam: Weight) -> frozenset:
    """Nodes where lam takes a nonnegative integer value."""
    return frozenset(i for i, c in enumerate(lam.fw, 1) if c.denominator == 1 and c >= 0)


def support(lam: Weight) -> frozenset:
    return frozenset(i for i, c in enumerate(lam.fw, 1) if c != 0)


def is_simply_regular(lam: Weight) -> bool:
    return len(support(lam)) == lam.rs.rank


def project(lam: Weight, J: Iterable[int]) -> Weight:
    """Zero the coordinates outside J."""
    J = frozenset(J)
    return Weight(lam.rs, (c if i in J else 0 for i, c in enumerate(lam.fw, 1)))


def dot_action(w: "WeylElement", lam: Weight) -> Weight:
    rho = lam.rs.rho
    return w.act(lam + rho) - rho


def reflect(lam: Weight, i: int) -> Weight:
    return lam.rs.reflect(lam, i)


def dominant_conjugate(lam: Weight, J: Iterable[int] | None = None):
    """Return (nu, word) with nu J-dominant and nu = s_word(lam).

    Picks the smallest index with a negative value at each step, so the
    word is deterministic; ``word`` is written left-to-right as applied last
    to first, matching ``WeylElement`` conventions.
    """
    rs = lam.rs
    J = sorted(rs.I if J is None else J)
    nu = lam
    applied: list[int] = []
    while True:
        i = next((j for j in J if nu.fw[j - 1] < 0), None)
        if i is None:
            break
        nu = rs.reflect(nu, i)
        applied.append(i)
    return nu, tuple(reversed(applied))


def components_meeting(rs: "RootSystem", J: Iterable[int], S: Iterable[int]) -> frozenset:
    """Union of connected components of the Dynkin subgraph on J that meet S.

    With S = supp(lam) this is the set written C(lam, J).
    """
    J = frozenset(J)
    S = frozenset(S)
    seen: set[int] = set()
    out: set[int] = set()
    for start in sorted(J):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            a = stack.pop()
            for b in J:
                if b not in comp and rs.cartan[a - 1][b - 1] != 0:
                    comp.add(b)
                    stack.append(b)
        seen |= comp
        if comp & S:
            out |= comp
    return frozenset(out)


def rho_of(weights: Iterable[Weight]) -> Weight:
    it = iter(weights)
    first = next(it)
    total = first
    for w in it:
        total = total + w
    return total
