"""Characters three ways: alternating Kostant sums, Freudenthal, Weyl dimension."""
from __future__ import annotations

import itertools

from weylcrest import HWModuleDesc, parse_type, truncated_character
from weylcrest.oracle import freudenthal_character, weyl_dim

for name in ("A2", "B2", "G2"):
    rs = parse_type(name)
    w0 = rs.longest_element()
    for c in itertools.product(range(3), repeat=2):
        lam = rs.weight(c)
        depth = int(sum((lam - w0.act(lam)).root_coords()))
        ch = truncated_character(HWModuleDesc.simple(lam), depth)
        same = dict(ch.items()) == freudenthal_character(lam)
        print(f"{name} lambda={c}: dim {ch.total():4d} (Weyl {weyl_dim(lam):4d}), matches Freudenthal: {same}")
