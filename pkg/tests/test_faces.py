from __future__ import annotations

import itertools
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from helpers import covered_descs, subsets
from weylcrest.faces import (
    INT, RAT, REAL, CoeffGroup, WeakFaceSearcher, classify_weak_face, face_interval, faces_equal, is_abelian_ideal,
    is_closed, is_positive_weak_face, is_weak_face, verify_rho_maximizer, walk_to_vertex,
)
from weylcrest.hwmodule import HWModuleDesc, PreconditionError, module_offsets, module_weights, wt_J
from weylcrest.oracle import naive_weak_face
from weylcrest.polyhedron import maximizer
from weylcrest.rootsys import parse_type
from weylcrest.weightlat import rho_of


@pytest.fixture
def A2():
    return parse_type("A2")


@pytest.fixture
def verma_slice(A2):
    desc = HWModuleDesc.verma(A2.rho)
    return desc, list(module_weights(desc, 4))


def test_coeff_group_parse():
    assert CoeffGroup.parse("int") == INT
    assert CoeffGroup.parse("rat") == RAT
    assert CoeffGroup.parse("scaled:3").scale == 3
    assert CoeffGroup.parse("real") == REAL
    with pytest.raises(ValueError):
        CoeffGroup.parse("scaled:0")
    with pytest.raises(ValueError):
        CoeffGroup.parse("complex")


def test_weak_face_examples(A2, verma_slice):
    desc, X = verma_slice
    lam = desc.lam
    assert is_weak_face(X, [lam])
    mid = lam - A2.simple_root(1) - A2.simple_root(2)
    v = is_weak_face(X, [mid], INT, 2)
    assert not v and v.bound == 2 and v.witness["size"] == 2
    assert not is_weak_face(X, [mid], REAL)
    for J in subsets(A2.I):
        Y = [mu for mu in wt_J(desc, J, 4) if mu in set(X)]
        for g in (INT, RAT, CoeffGroup.parse("scaled:3"), REAL):
            assert is_weak_face(X, Y, g, 6), (J, g)


def test_verdict_json(verma_slice):
    desc, X = verma_slice
    data = is_weak_face(X, [desc.lam]).to_json()
    assert data["result"] is True and data["bound"] == 6 and data["coeff"] == "int"


def test_subset_check(verma_slice):
    desc, X = verma_slice
    with pytest.raises(ValueError):
        is_weak_face(X, [desc.lam * 5])


def test_searcher_matches_naive(A2):
    desc = HWModuleDesc.simple(A2.theta)
    X = list(module_weights(desc, 4))
    search = WeakFaceSearcher(X, 3)
    for r in range(1, 4):
        for Y in itertools.combinations(X, r):
            assert (search.violation(Y) is None) == naive_weak_face(X, Y, 3), Y


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(0, 9), min_size=1, max_size=4))
def test_searcher_matches_naive_on_verma(idx):
    rs = parse_type("B2")
    X = list(module_weights(HWModuleDesc.verma(rs.rho), 3))
    Y = [X[i] for i in sorted(idx)]
    assert bool(is_weak_face(X, Y, INT, 3)) == naive_weak_face(X, Y, 3)


def test_group_independence(A2, verma_slice):
    desc, X = verma_slice
    groups = [INT, RAT, CoeffGroup.parse("scaled:3"), CoeffGroup.parse("scaled:1/2")]
    for r in (1, 2):
        for Y in itertools.combinations(X, r):
            assert len({bool(is_weak_face(X, Y, g, 4)) for g in groups}) == 1


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_implication_chain_on_slices(name):
    # maximizer => weak face => ({2},{1,2})-closed, and back again for simply-regular lam
    rs = parse_type(name)
    desc = HWModuleDesc.simple(rs.rho)
    X = list(module_weights(desc, 3))
    Xs = set(X)
    for J in subsets(rs.I):
        Y = [mu for mu in wt_J(desc, J, 3) if mu in Xs]
        assert set(maximizer(X, rs.rho_J(set(rs.I) - J))) == set(Y)
        assert is_weak_face(X, Y, INT, 4)
        assert is_closed(X, Y, [2], [1, 2], 2)
    for Y in itertools.combinations(X, 2):
        if rs.rho in Y and is_closed(X, Y, [2], [1, 2], 2):
            assert classify_weak_face(desc, Y, 3) is not None


def test_closedness_examples(A2, verma_slice):
    desc, X = verma_slice
    mid = desc.lam - A2.simple_root(1) - A2.simple_root(2)
    assert not is_closed(X, [mid], [2], [1, 2], 2)
    assert is_closed(X, X, [2], [1, 2], 2)
    top = maximizer(X, A2.rho_J({1}))
    assert is_closed(X, top, [1, 2, 3], [1, 2], 3)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "C3"])
def test_positive_weak_faces_in_root_lattice(name):
    # lam in the root lattice: positive weak face iff some j0 outside J has (lam, omega_j0) > 0
    rs = parse_type(name)
    for lam in (rs.theta, rs.theta * 2):
        desc = HWModuleDesc.simple(lam)
        X = list(module_weights(desc, 40))
        for J in subsets(rs.I):
            pred = any(rs.form(lam, rs.fundamental_weight(j)) > 0 for j in rs.I if j not in J)
            assert bool(is_positive_weak_face(X, list(wt_J(desc, J)), INT, 4)) == pred, (lam, J)


@pytest.mark.parametrize("name", ["A2", "A3", "B2"])
def test_positive_weak_faces_off_root_lattice(name):
    # the same j0 rule governs weights outside the root lattice; J = I fails because
    # some multiple of lam lies in the root lattice
    rs = parse_type(name)
    for i in rs.I:
        lam = rs.fundamental_weight(i)
        if lam.in_root_lattice():
            continue
        desc = HWModuleDesc.simple(lam)
        X = list(module_weights(desc, 30))
        for J in subsets(rs.I):
            pred = any(rs.form(lam, rs.fundamental_weight(j)) > 0 for j in rs.I if j not in J)
            assert bool(is_positive_weak_face(X, list(wt_J(desc, J)), INT, 6)) == pred, (lam, J)


def test_positive_weak_face_two_forms(A2, verma_slice):
    desc, X = verma_slice
    zero = A2.zero()
    for r in (1, 2):
        for Y in itertools.combinations(X, r):
            direct = is_positive_weak_face(X, Y, INT, 3)
            if zero in Y:
                assert not direct
            else:
                assert bool(direct) == bool(is_weak_face(X + ([zero] if zero not in X else []), Y, INT, 3))


def test_faces_equal_examples(A2):
    for m in (1, 2, 3):
        desc = HWModuleDesc.simple(A2.weight([m, 0]))
        assert faces_equal(desc, {2}, ())
        assert not faces_equal(desc, {1}, {1, 2})
    desc = HWModuleDesc.simple(A2.rho)
    for J in subsets(A2.I):
        assert face_interval(desc, J) == (J, J)


def _slices(desc, depth=6):
    rs = desc.rs
    offs = module_offsets(desc, depth)
    return {J: frozenset(b for b in offs if all(b[i - 1] == 0 for i in rs.I if i not in J))
            for J in subsets(rs.I)}


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2", "B3"])
def test_adjacent_rule_matches_weight_sets(name):
    rs = parse_type(name)
    vals = [0, 1, Q(1, 2), -1] if rs.rank < 3 else [0, 1, Q(1, 2)]
    for coords in itertools.product(vals, repeat=rs.rank):
        for desc in covered_descs(rs.weight(coords)):
            sets = _slices(desc)
            for J in sets:
                lo, hi = face_interval(desc, J, "adjacent")
                for J2 in sets:
                    truth = sets[J] == sets[J2]
                    assert faces_equal(desc, J, J2, "adjacent") == truth, (desc, J, J2)
                    claim = (J2 - desc.J_V == J - desc.J_V) and lo <= (J2 & desc.J_V) <= hi
                    assert claim == truth


def test_stated_rule_counterexample(A2):
    # M(omega_1, {2}): nodes outside J(V) shift the Levi block, which the plain support rule ignores
    desc = HWModuleDesc.parabolic(A2.fundamental_weight(1), {2})
    assert faces_equal(desc, {1}, {1, 2}, "stated")
    assert not faces_equal(desc, {1}, {1, 2}, "adjacent")
    lam = desc.lam
    extra = lam - A2.simple_root(1) - A2.simple_root(2)
    assert extra in set(wt_J(desc, {1, 2}, 3)) and extra not in set(wt_J(desc, {1}, 3))


def test_intersection_law():
    rs = parse_type("A3")
    for desc in covered_descs(rs.weight([1, 0, 1])):
        sets = _slices(desc, 5)
        for J, J2 in itertools.product(sets, repeat=2):
            assert sets[J] & sets[J2] == sets[J & J2]


def test_classify(A2):
    desc = HWModuleDesc.simple(A2.theta)
    assert classify_weak_face(desc, [A2.theta]).J == frozenset()
    full = classify_weak_face(desc, list(module_weights(desc, 4)))
    assert full.w.length() == 0 and full.J == {1, 2}
    edge = classify_weak_face(desc, [A2.theta, A2.simple_root(1)])
    assert edge.w.length() == 0 and edge.J == {2}
    low = classify_weak_face(desc, [-A2.theta])
    assert low.w.length() == 3 and low.J == frozenset()
    assert classify_weak_face(desc, [A2.theta, -A2.theta]) is None


def test_rho_maximizer(A2):
    desc = HWModuleDesc.simple(A2.theta)
    checks = verify_rho_maximizer(desc, {1})
    assert all(checks.values())
    S = list(wt_J(desc, {1}))
    # wt_{1} L(theta) = {theta, theta - alpha_1} and theta - alpha_1 = alpha_2
    assert rho_of(S) == A2.theta + A2.simple_root(2)
    assert rho_of(S).h(1) == 0
    assert rho_of(list(wt_J(desc, ()))) == A2.theta
    rs = parse_type("B3")
    for J in subsets(rs.I):
        assert all(verify_rho_maximizer(HWModuleDesc.simple(rs.weight([1, 0, 2])), J).values())


def test_rho_maximizer_needs_levi_subset(A2):
    with pytest.raises(PreconditionError):
        verify_rho_maximizer(HWModuleDesc.verma(A2.rho), {1})


def test_walk_to_vertex(A2):
    assert walk_to_vertex(A2.theta, [-A2.theta]) == A2.longest_element()
    assert walk_to_vertex(A2.theta, [A2.theta]).length() == 0
    A1 = parse_type("A1")
    two = A1.weight([2])
    assert walk_to_vertex(two, [-two]).word == (1,)
    with pytest.raises(PreconditionError, match="closed"):
        walk_to_vertex(two, [A1.zero(), -two])


def test_walk_reaches_lambda_from_every_closed_face():
    rs = parse_type("B2")
    lam = rs.weight([1, 1])
    desc = HWModuleDesc.simple(lam)
    for w in rs.parabolic_elements(rs.I):
        for J in subsets(rs.I):
            Y = [w.act(mu) for mu in wt_J(desc, J)]
            u = walk_to_vertex(lam, Y)
            assert u.act(lam) in set(Y)


def test_abelian_ideals(A2):
    assert is_abelian_ideal(A2, [])
    assert is_abelian_ideal(A2, [(1, 1)])
    assert not is_abelian_ideal(A2, [(1, 0)])
    A3 = parse_type("A3")
    assert is_abelian_ideal(A3, [(1, 1, 1), (1, 1, 0)])
    assert is_abelian_ideal(A3, [(1, 1, 0), (0, 1, 1), (1, 1, 1)])
    # not upward closed: alpha_1 + alpha_2 + alpha_3 is missing
    assert not is_abelian_ideal(A3, [(1, 1, 0)])
    # upward closed but alpha_1 + (alpha_2 + alpha_3) is a root inside the set
    assert not is_abelian_ideal(A3, [(1, 0, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1)])
