"""Walk through the adjoint representation of sl3.

Its weights are the six roots and zero; the hull is a hexagon.  We list the
faces as (w, J) pairs and compare with a brute-force scan over all 2^7
subsets of the weights.
"""
from __future__ import annotations

from weylcrest import HWModuleDesc, enumerate_faces, hull_of_module, module_weights, parse_type, wt_J
from weylcrest.oracle import brute_weak_faces


def show(mu):
    return "(" + ", ".join(str(c) for c in mu.fw) + ")"


rs = parse_type("A2")
desc = HWModuleDesc.simple(rs.theta)
X = list(module_weights(desc, 4))
print(f"{len(X)} weights:", " ".join(show(mu) for mu in X))

hull = hull_of_module(desc)
print(f"hull vertices: {len(hull.vertices)}, cone generators: {len(hull.cone)}")

faces = enumerate_faces(desc)
print(f"\n{len(faces)} faces:")
as_sets = set()
for w, J in faces:
    pts = frozenset(w.act(mu) for mu in wt_J(desc, J))
    as_sets.add(pts)
    print(f"  w={list(w.word)!s:<10} J={sorted(J)!s:<7} {' '.join(show(p) for p in sorted(pts))}")

brute = set(brute_weak_faces(X, bound=6))
print(f"\nbrute force finds {len(brute)} weak faces; same sets: {brute == as_sets}")
