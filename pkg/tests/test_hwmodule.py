from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from helpers import covered_descs, subsets
from weylcrest.hwmodule import (
    Family, HWModuleDesc, InvalidDescriptor, PreconditionError, UnsupportedModule, _kostant,
    check_wcf_hypothesis, counterexample_witness, fd_simple_weights, fernando_parabolic, kostant_partition,
    module_contains, module_offsets, module_weights, parse_family, truncated_character, wt_J,
)
from weylcrest.oracle import freudenthal_character, weyl_dim
from weylcrest.rootsys import parse_type
from weylcrest.weightlat import j_lambda, leq


@pytest.fixture
def A2():
    return parse_type("A2")


def test_descriptor_integrability_sets(A2):
    assert HWModuleDesc.simple(A2.rho).J_V == {1, 2}
    assert HWModuleDesc.verma(A2.rho).J_V == frozenset()
    w1 = A2.fundamental_weight(1)
    assert HWModuleDesc.parabolic(w1, {2}).J_V == {2}
    assert HWModuleDesc.simple(A2.weight([Q(1, 2), 2])).J_V == {2}


def test_parabolic_outside_j_lambda_names_index(A2):
    lam = A2.weight([1, Q(1, 2)])
    with pytest.raises(InvalidDescriptor, match="2"):
        HWModuleDesc.parabolic(lam, {2})
    with pytest.raises(InvalidDescriptor):
        HWModuleDesc.generic(lam, {1, 2})


def test_parse_family(A2):
    d = parse_family(A2.rho, "parabolic:1")
    assert d.family is Family.PARABOLIC and d.J_V == {1}
    assert parse_family(A2.rho, "simple").family is Family.SIMPLE
    with pytest.raises(InvalidDescriptor):
        parse_family(A2.rho, "bogus")


def test_weight_formula_flag(A2):
    assert HWModuleDesc.generic(A2.rho, {1}).weight_formula_valid
    assert not HWModuleDesc.generic(A2.rho, ()).weight_formula_valid
    with pytest.raises(UnsupportedModule):
        module_weights(HWModuleDesc.generic(A2.rho, ()), 3)


def test_kostant_values(A2):
    assert kostant_partition(A2, (0, 0)) == 1
    assert kostant_partition(A2, (1, 1)) == 2
    assert kostant_partition(A2, (-1, 0)) == 0
    A3 = parse_type("A3")
    assert kostant_partition(A3, (2, 0, 2)) == 1
    with pytest.raises(PreconditionError):
        kostant_partition(A2, A2.fundamental_weight(1))


def test_kostant_cache_under_threads():
    rs = parse_type("B3")
    betas = [b for b in itertools.product(range(5), repeat=3)]
    _kostant.cache_clear()
    with ThreadPoolExecutor(max_workers=8) as pool:
        parallel = list(pool.map(lambda b: kostant_partition(rs, b), betas * 3))
    _kostant.cache_clear()
    serial = [kostant_partition(rs, b) for b in betas] * 3
    assert parallel == serial


def test_fd_simple_weights(A2):
    assert len(fd_simple_weights(A2, A2.I, A2.theta)) == 7
    A1 = parse_type("A1")
    two = A1.weight([2])
    assert set(fd_simple_weights(A1, {1}, two)) == {two, A1.zero(), -two}
    assert list(fd_simple_weights(A2, (), A2.rho)) == [A2.rho]


def test_module_weights_examples(A2):
    assert len(module_weights(HWModuleDesc.simple(A2.theta), 4)) == 7
    lam = A2.weight([Q(1, 3), -2])
    assert len(module_weights(HWModuleDesc.verma(lam), 2)) == 6
    A1 = parse_type("A1")
    anti = A1.weight([-1])
    ws = list(module_weights(HWModuleDesc.simple(anti), 5))
    assert ws == [anti - A1.simple_root(1) * k for k in range(6)]


def test_wt_J_examples(A2):
    for m in (1, 2, 3):
        lam = A2.weight([m, 0])
        d = HWModuleDesc.simple(lam)
        assert set(wt_J(d, {2})) == {lam}
        assert set(wt_J(d, {1})) == {lam - A2.simple_root(1) * k for k in range(m + 1)}
        assert set(wt_J(d, ())) == {lam}


def test_simple_weights_split_over_levi_blocks(A2):
    # wt L(lam) is the union over mu in Z_+ Delta outside J_lam of the Levi blocks at lam - mu
    lam = A2.weight([2, Q(-1, 2)])
    depth = 6
    ws = set(module_weights(HWModuleDesc.simple(lam), depth))
    union = set()
    for k in range(depth + 1):
        top = lam - A2.simple_root(2) * k
        union |= {mu for mu in fd_simple_weights(A2, {1}, top) if leq(mu, lam)
                  and sum((lam - mu).root_coords()) <= depth}
    assert ws == union


@pytest.mark.parametrize("name", ["A2", "B2", "A3"])
def test_finite_slices_are_levi_stable(name):
    # J inside J(V) iff wt_J V is finite iff wt_J V is W_J-stable
    rs = parse_type(name)
    for lam in (rs.rho, rs.weight([1] + [0] * (rs.rank - 1)), rs.weight([Q(1, 2)] + [1] * (rs.rank - 1))):
        for desc in covered_descs(lam):
            for J in subsets(rs.I):
                small = set(wt_J(desc, J, 6))
                big = set(wt_J(desc, J, 9))
                finite = small == big
                stable = all(rs.reflect(mu, j) in big for mu in small for j in J)
                assert finite == (J <= desc.J_V) == stable, (desc, J)


def test_parabolic_strings_outside_J(A2):
    lam = A2.weight([3, 1])
    desc = HWModuleDesc.parabolic(lam, {1})
    for k in range(10):
        assert module_contains(desc, lam - A2.simple_root(2) * k)
    assert not module_contains(desc, lam - A2.simple_root(1) * 4)


def test_small_characters(A2):
    A1 = parse_type("A1")
    ch = truncated_character(HWModuleDesc.simple(A1.weight([1])), 5)
    assert dict(ch.items()) == {A1.weight([1]): 1, A1.weight([-1]): 1}
    adj = truncated_character(HWModuleDesc.simple(A2.theta), 6)
    assert adj[A2.zero()] == 2 and adj.total() == 8
    verma = truncated_character(HWModuleDesc.verma(A2.rho), 6)
    for i in A2.I:
        for n in range(7):
            assert verma[A2.rho - A2.simple_root(i) * n] == 1


def test_parabolic_character_is_alternating_sum(A2):
    lam = A2.weight([2, 1])
    ch = truncated_character(HWModuleDesc.parabolic(lam, {1}), 6)
    # sl2 string of length 3 at the top
    assert [ch[lam - A2.simple_root(1) * k] for k in range(4)] == [1, 1, 1, 0]


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_character_matches_freudenthal(name):
    rs = parse_type(name)
    for c in itertools.product(range(3), repeat=2):
        lam = rs.weight(c)
        depth = int(sum((lam - rs.longest_element().act(lam)).root_coords()))
        ch = truncated_character(HWModuleDesc.simple(lam), depth)
        assert dict(ch.items()) == freudenthal_character(lam)
        assert ch.total() == weyl_dim(lam)


def test_wcf_hypothesis(A2):
    assert check_wcf_hypothesis(A2.rho)
    assert check_wcf_hypothesis(-A2.rho * 2)
    assert not check_wcf_hypothesis(A2.weight([-2, 1]))
    with pytest.raises(UnsupportedModule):
        truncated_character(HWModuleDesc.simple(A2.weight([-2, 1])), 4)


def test_counterexample_witness():
    A3 = parse_type("A3")
    rec = counterexample_witness(A3.rho, 1, 3)
    assert rec.mu_star == A3.rho - A3.simple_root(1) * 2 - A3.simple_root(3) * 2
    assert rec.kostant_value == 1
    assert rec.in_lattice and rec.in_verma_hull and rec.below_reflected
    assert rec.to_json()["mu_star"] == {"fw": ["-3", "5", "-3"]}


def test_counterexample_rejects_joined_nodes(A2):
    with pytest.raises(PreconditionError, match="joined"):
        counterexample_witness(A2.rho, 1, 2)
    A3 = parse_type("A3")
    with pytest.raises(PreconditionError, match="J_lambda"):
        counterexample_witness(A3.weight([Q(1, 2), 1, 1]), 1, 3)


def test_fernando_examples(A2):
    pos = set(A2.positive_roots)
    assert fernando_parabolic(HWModuleDesc.verma(A2.rho)) == pos
    full = pos | {tuple(-c for c in b) for b in pos}
    assert fernando_parabolic(HWModuleDesc.simple(A2.rho)) == full
    assert fernando_parabolic(HWModuleDesc.parabolic(A2.rho, {1})) == pos | {(-1, 0)}


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=2), min_size=2, max_size=2),
       st.sampled_from(["verma", "simple", "p1", "p2"]))
def test_formulas_agree_on_random_weights(coords, fam):
    rs = parse_type("B2")
    lam = rs.weight(coords)
    jl = j_lambda(lam)
    if fam == "verma":
        desc = HWModuleDesc.verma(lam)
    elif fam == "simple":
        desc = HWModuleDesc.simple(lam)
    else:
        j = int(fam[1])
        if j not in jl:
            return
        desc = HWModuleDesc.parabolic(lam, {j})
    a, b, c = (module_offsets(desc, 5, f) for f in "abc")
    assert a == b == c
