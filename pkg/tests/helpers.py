"""Shared grids of weights and module descriptors for the tests."""
from __future__ import annotations

import itertools
from fractions import Fraction as Q

from weylcrest.hwmodule import HWModuleDesc
from weylcrest.rootsys import root_system
from weylcrest.weightlat import j_lambda


def subsets(items):
    items = sorted(items)
    return [frozenset(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r)]


def covered_descs(lam):
    """Verma, every parabolic Verma with nonempty J inside J_lam, and simple."""
    out = [HWModuleDesc.verma(lam)]
    out += [HWModuleDesc.parabolic(lam, J) for J in subsets(j_lambda(lam)) if J]
    out.append(HWModuleDesc.simple(lam))
    return out


def lambda_grid(name: str, limit: int | None = None):
    rs = root_system(name[0], int(name[1:]))
    if rs.rank == 1:
        vals = [Q(k) for k in range(-3, 6)] + [Q(k, 2) for k in (-3, -1, 1, 3, 5)] + \
               [Q(k, 3) for k in (-2, -1, 1, 2, 4)] + [Q(7, 4)]
        grid = [rs.weight([v]) for v in vals]
    else:
        vals = [Q(0), Q(1), Q(2), Q(-1), Q(1, 2), Q(-3, 2)] if rs.rank == 2 else [Q(0), Q(1), Q(-1), Q(1, 2)]
        grid = [rs.weight(c) for c in itertools.product(vals, repeat=rs.rank)]
    if limit is not None and len(grid) > limit:
        step = len(grid) / limit
        grid = [grid[int(k * step)] for k in range(limit)]
    return rs, grid
