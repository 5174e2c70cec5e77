from __future__ import annotations

from fractions import Fraction as Q

import pytest

from helpers import covered_descs
from weylcrest.hwmodule import HWModuleDesc, kostant_partition, module_weights
from weylcrest.oracle import (
    brute_weak_faces, freudenthal_character, freudenthal_mult, lattice_hull_points, naive_weak_face,
    verma_character_raw, weyl_dim,
)
from weylcrest.rootsys import parse_type


@pytest.fixture
def A2():
    return parse_type("A2")


def test_brute_faces_small():
    A1 = parse_type("A1")
    a = A1.simple_root(1)
    faces = set(brute_weak_faces([a, A1.zero(), -a]))
    assert faces == {frozenset([a]), frozenset([-a]), frozenset([a, A1.zero(), -a])}
    assert brute_weak_faces([a]) == [frozenset([a])]


def test_brute_faces_hexagon(A2):
    X = list(module_weights(HWModuleDesc.simple(A2.theta), 4))
    faces = brute_weak_faces(X)
    sizes = sorted(len(f) for f in faces)
    assert sizes == [1] * 6 + [2] * 6 + [7]


def test_brute_force_cap(A2):
    X = list(module_weights(HWModuleDesc.verma(A2.rho), 6))
    with pytest.raises(ValueError, match="limit"):
        brute_weak_faces(X)


def test_naive_weak_face(A2):
    X = list(module_weights(HWModuleDesc.verma(A2.rho), 2))
    mid = A2.rho - A2.simple_root(1) - A2.simple_root(2)
    assert not naive_weak_face(X, [mid], 2)
    assert naive_weak_face(X, [A2.rho], 3)


def test_lattice_points(A2):
    for d in range(5):
        assert len(lattice_hull_points(HWModuleDesc.verma(A2.weight([Q(1, 2), 3])), d)) == (d + 1) * (d + 2) // 2
    # -theta sits at height 4 below theta
    assert len(lattice_hull_points(HWModuleDesc.simple(A2.theta), 2)) == 4
    assert len(lattice_hull_points(HWModuleDesc.simple(A2.theta), 4)) == 7
    anti = A2.weight([-2, -1])
    assert lattice_hull_points(HWModuleDesc.simple(anti), 4) == lattice_hull_points(HWModuleDesc.verma(anti), 4)


@pytest.mark.parametrize("name", ["A2", "B2", "A3"])
def test_lattice_points_equal_weights(name):
    rs = parse_type(name)
    for lam in (rs.rho, rs.weight([-1] + [Q(1, 2)] * (rs.rank - 1))):
        for desc in covered_descs(lam):
            assert lattice_hull_points(desc, 6) == set(module_weights(desc, 6))


def test_weyl_dimensions(A2):
    assert weyl_dim(A2.theta) == 8
    assert weyl_dim(A2.zero()) == 1
    assert weyl_dim(parse_type("G2").weight([1, 0])) == 7
    assert weyl_dim(parse_type("E8").theta) == 248


def test_freudenthal(A2):
    assert freudenthal_mult(A2.theta, A2.zero()) == 2
    assert freudenthal_mult(A2.theta, A2.theta) == 1
    for lam in (A2.weight([2, 1]), A2.weight([3, 0])):
        assert sum(freudenthal_character(lam).values()) == weyl_dim(lam)
    with pytest.raises(ValueError):
        freudenthal_character(A2.weight([Q(1, 2), 0]))


def test_raw_verma_character(A2):
    lam = A2.weight([Q(1, 3), -1])
    assert verma_character_raw(lam, 0) == {lam: 1}
    ch = verma_character_raw(lam, 2)
    assert ch[lam - A2.simple_root(1) - A2.simple_root(2)] == 2
    A1 = parse_type("A1")
    assert set(verma_character_raw(A1.rho, 7).values()) == {1}
    for mu, m in verma_character_raw(parse_type("B2").rho, 6).items():
        assert m == kostant_partition(mu.rs, parse_type("B2").rho - mu)
