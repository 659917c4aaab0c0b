import random

import pytest
from hypothesis import given, settings, strategies as st

from aspherical import parse_algebra
from aspherical.classifier import (A2N_MEMBER, B_MEMBER, DIM_BOUND, DOES_NOT_FIRE, EULER_RELATION, FIRES, HOLDS,
                                   INEQUALITY_26, NOT_A4, NOT_EVALUABLE, NU_BOUND, RANK4_CRITERION, GroupProfile,
                                   Membership, b3_product, chain_report, classify, kunneth, memberships_from_evidence,
                                   product_criteria, profile_from_algebra, surface_profile, torus_profile)
from aspherical.cohomology import convolve
from aspherical.lie import Solvability
from aspherical.symplectic import Verdict, find_symplectic

FLS = parse_algebra("(0,0,-13-25,14-26,-15,16)")


def sa(betti, **flags):
    return GroupProfile(tuple(betti), None, {"sa_asserted": True, **flags}, f"pi{betti}")


def verdict(ev, crit):
    return ev.get(crit).verdict


# --- single-group criteria (i)-(iii) -------------------------------------------

CLASSIFY_TABLE = [
    # (label, profile, NOT_A4, B_MEMBER, part of B_MEMBER)
    ("(i) b1 >= b3 passes", sa((1, 3, 4, 3, 1)), DOES_NOT_FIRE, DOES_NOT_FIRE, "(ii)"),
    ("(i)+(ii) b1 < b3", sa((1, 2, 3, 4)), FIRES, FIRES, "(ii)"),
    ("(iii) manifold, pi_3 = 0", GroupProfile((1, 1, 0, 2), None, {"manifold_betti": True, "pi3_trivial_asserted": True}),
     FIRES, FIRES, "(iii)"),
    ("(iii) without pi_3 assertion", GroupProfile((1, 1, 0, 2), None, {"manifold_betti": True}),
     FIRES, NOT_EVALUABLE, "(iii)"),
    ("too short", sa((1, 2)), NOT_EVALUABLE, NOT_EVALUABLE, "(ii)"),
]


@pytest.mark.parametrize("label,p,not_a4,b,part", CLASSIFY_TABLE, ids=[r[0] for r in CLASSIFY_TABLE])
def test_single_group_criteria(label, p, not_a4, b, part):
    ev = classify(p)
    assert verdict(ev, NOT_A4) == not_a4
    assert verdict(ev, B_MEMBER) == b
    assert ev.get(B_MEMBER).part == part


# --- product criteria (iv)-(vi) ------------------------------------------------

PRODUCT_TABLE = [
    ("(iv) b3 = 1", sa((1, 0, 0, 1)), sa((1, 0, 0, 0)), {"(iv)"}),
    ("(v) b2 = 2, b1 = 1", sa((1, 0, 2, 0)), sa((1, 1, 0, 0)), {"(v)"}),
    # Z^4 itself has b3 = 4 and b2 = 6, so (iv) and (v) come along with (vi)
    ("(vi) Z^4 factor", surface_profile(1), torus_profile(4), {"(iv)", "(v)", "(vi)"}),
    ("none", sa((1, 0, 1, 0)), sa((1, 0, 1, 0)), set()),
]


@pytest.mark.parametrize("label,p,q,parts", PRODUCT_TABLE, ids=[r[0] for r in PRODUCT_TABLE])
def test_product_criteria(label, p, q, parts):
    ev = product_criteria(p, q)
    fired = {v.part for v in ev.verdicts if v.verdict == FIRES}
    assert fired == parts
    if parts:
        prod = kunneth(p, q)
        assert prod.b_ext(1) < prod.b_ext(3)
        assert not ev.notes


def test_vi_exactly_and_product_lands_in_b():
    # a genus-g surface group times Z^4 is in B via (vi)
    p, q = surface_profile(2), torus_profile(4)
    ev = product_criteria(p, q)
    assert "(vi)" in {v.part for v in ev.verdicts if v.verdict == FIRES}
    assert classify(kunneth(p, q)).fired(B_MEMBER)


def test_sphere_factor_is_not_symplectically_aspherical():
    assert verdict(product_criteria(surface_profile(0), torus_profile(4)), B_MEMBER) == NOT_EVALUABLE


def test_product_needs_asserted_hypothesis():
    p = GroupProfile((1, 0, 0, 1), None, {}, "p")
    ev = product_criteria(p, torus_profile(4))
    assert verdict(ev, B_MEMBER) == NOT_EVALUABLE


def test_b3_formula_term_by_term():
    p, q = sa((1, 2, 3, 4)), sa((1, 5, 7, 11))
    assert b3_product(p, q) == 11 + 2 * 7 + 3 * 5 + 4
    assert b3_product(p, q) == kunneth(p, q).betti[3]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=4, max_size=6), st.lists(st.integers(0, 9), min_size=4, max_size=6))
def test_b3_formula_random(a, b):
    p, q = sa([1] + a[1:]), sa([1] + b[1:])
    assert b3_product(p, q) == convolve(p.betti, q.betti)[3]


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=1, max_size=5), st.lists(st.integers(0, 5), min_size=1, max_size=5),
       st.lists(st.integers(0, 5), min_size=1, max_size=5))
def test_kunneth_commutative_associative(a, b, c):
    P, Q, R = (GroupProfile(tuple(x)) for x in (a, b, c))
    assert kunneth(P, Q).betti == kunneth(Q, P).betti
    assert kunneth(kunneth(P, Q), R).betti == kunneth(P, kunneth(Q, R)).betti


def test_kunneth_z2_z2():
    assert kunneth(torus_profile(2), torus_profile(2)).betti == (1, 4, 6, 4, 1)


# --- model-derived profiles -------------------------------------------------------

def test_fls_profile():
    p = profile_from_algebra(FLS, symplectic=True, lattice_asserted=True)
    ev = classify(p)
    assert p.betti[1] == 2 and p.betti[3] == 4
    assert ev.fired(B_MEMBER) and ev.fired(NOT_A4)
    assert verdict(ev, EULER_RELATION) == HOLDS
    assert ev.fired(A2N_MEMBER)


def test_z4_profile():
    ev = classify(torus_profile(4))
    assert verdict(ev, B_MEMBER) == DOES_NOT_FIRE
    assert ev.fired(A2N_MEMBER) and ev.fired(RANK4_CRITERION)
    assert any("Z^4" in n for n in ev.notes)


def test_lattice_is_never_inferred():
    p = profile_from_algebra(parse_algebra("(0,0,0,12)"), symplectic=True)
    assert not p.flag("lattice_asserted")
    assert verdict(classify(p), A2N_MEMBER) == DOES_NOT_FIRE


def test_dim_bound_when_even_betti_vanish():
    p = GroupProfile((1, 1, 0, 0, 0), None, {}, "b2 = 0")
    ev = classify(p)
    assert ev.fired(DIM_BOUND)
    assert "n <= 0" in ev.get(DIM_BOUND).justification
    assert "n <= 1" in ev.get(DIM_BOUND).justification
    assert ev.fired(NU_BOUND)
    # a complete Betti vector of T^6 has b_8 = 0, giving the bound n <= 3
    assert "n <= 3" in classify(torus_profile(6)).get(DIM_BOUND).justification
    assert verdict(classify(sa((1, 2, 3, 4, 5))), DIM_BOUND) == DOES_NOT_FIRE


def test_six_dimensional_identities_on_symplectic_nilpotent():
    L = parse_algebra("(0,0,0,0,12,13)")
    assert find_symplectic(L).verdict is Verdict.SYMPLECTIC
    ev = classify(profile_from_algebra(L, symplectic=True, lattice_asserted=True))
    assert verdict(ev, EULER_RELATION) == HOLDS and ev.fired(INEQUALITY_26)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 8), min_size=5, max_size=7))
def test_ii_and_i_contrapositive_fire_together(b):
    ev = classify(sa([1] + b[1:]))
    assert ev.fired(B_MEMBER) == ev.fired(NOT_A4)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 8), min_size=5, max_size=7), st.booleans(), st.booleans())
def test_adding_flags_never_retracts_arithmetic_criteria(b, lat, nil):
    bare = classify(GroupProfile(tuple([1] + b[1:])))
    rich = classify(GroupProfile(tuple([1] + b[1:]), None, {"lattice_asserted": lat, "nilpotent": nil,
                                                           "sa_asserted": True}))
    for crit in (B_MEMBER, NOT_A4, DIM_BOUND, INEQUALITY_26):
        if bare.fired(crit):
            assert rich.fired(crit)


# --- inclusion chains ---------------------------------------------------------------

def test_chain_z8_implies_a6():
    rep = chain_report([Membership("A", 8, True, "Z^8")])
    assert ("A", 6) in {(m.cls, m.dim) for m in rep["implied"]}
    assert not rep["violations"]


def test_chain_z6_b4_from_betti():
    ev = classify(torus_profile(6))
    ms = memberships_from_evidence(ev, 6)
    assert Membership("B", 4, True, ev.source) in ms


def test_chain_empty():
    assert chain_report([]) == {"recorded": [], "implied": [], "violations": []}


def test_chain_violation_reported():
    rep = chain_report([Membership("A", 8), Membership("A", 6, member=False)])
    assert rep["violations"]
