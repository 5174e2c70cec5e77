"""When do two index sets J, J' cut out the same slice wt_J V?

The support rule compares components of J inside J(V) with the support of
lambda.  For the parabolic Verma module M(omega_1, {2}) over sl3 it says
wt_{1} = wt_{1,2}, but moving down along alpha_1 switches node 2 on:
lambda - alpha_1 - alpha_2 is a weight of the second slice only.  Adding the
neighbours of J outside J(V) to the support repairs the rule.
"""
from __future__ import annotations

from weylcrest import HWModuleDesc, parse_type, wt_J
from weylcrest.faces import face_interval, faces_equal

rs = parse_type("A2")
lam = rs.fundamental_weight(1)
desc = HWModuleDesc.parabolic(lam, {2})
print(desc, "J(V) =", sorted(desc.J_V))

one = set(wt_J(desc, {1}, 4))
both = set(wt_J(desc, {1, 2}, 4))
extra = lam - rs.simple_root(1) - rs.simple_root(2)
print("support rule says equal:   ", faces_equal(desc, {1}, {1, 2}, "stated"))
print("adjacent rule says equal:  ", faces_equal(desc, {1}, {1, 2}, "adjacent"))
print("slices equal (depth 4):    ", one == both)
print("lambda - a1 - a2 in wt_{1}:", extra in one, " in wt_{1,2}:", extra in both)
print("interval for J={1}:", [sorted(s) for s in face_interval(desc, {1}, "adjacent")])

# the strict chain for m * omega_1
for m in (1, 2, 3):
    d = HWModuleDesc.simple(rs.weight([m, 0]))
    sizes = [len(wt_J(d, J)) for J in ({2}, {1}, {1, 2})]
    print(f"m={m}: |wt_2|, |wt_1|, |wt_12| = {sizes}")
