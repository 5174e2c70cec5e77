"""A quotient of a Verma module whose weights are not cut out by its hull.

For sl4 and lambda = rho, nodes 1 and 3 commute.  Divide M(rho) by the
Verma submodules at s_1 . rho and s_3 . rho.  No simple root acts locally
finitely on the quotient, so its hull is the whole Verma cone.  But
mu* = s_1 s_3 . rho lies under both submodules and has multiplicity one in
M(rho), so it drops out of the quotient while staying in the hull.
"""
from __future__ import annotations

from weylcrest import counterexample_witness, parse_type

rs = parse_type("A3")
rec = counterexample_witness(rs.rho, 1, 3)
for key, value in rec.to_json().items():
    print(f"{key:>16}: {value}")
