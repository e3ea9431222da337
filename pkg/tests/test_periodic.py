from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcovekit import hecke as hk
from alcovekit import periodic as pm
from alcovekit import suites
from alcovekit.rootdata import build_root_datum
from alcovekit.scalars import Laurent, u_hecke, v
from alcovekit.spherical import DepthUnderflow

vinv = Laurent.mono(-1)


def alcove(rd, *word):
    return pm.alcove_from_word(rd, word)


def test_a1_coordinates(a1):
    A = pm.base_alcove(a1)
    assert A.kbeta == (0,)
    assert pm.alcove_length(A) == 0
    assert pm.translate(A, (1,)).kbeta == (2,)
    assert pm.alcove_act(A, hk.generator(a1, 0), "right").kbeta == (1,)
    assert pm.alcove_act(A, hk.generator(a1, 1), "right").kbeta == (-1,)


@pytest.mark.parametrize("k", [-3, -1, 0, 2, 5])
def test_a1_reflection_of_alcoves(a1, k):
    # s_alpha sends (k, k+1) to (-k-1, -k)
    A = pm.alcove_from_kbeta(a1, (k,))
    B = pm.alcove_act(A, hk.finite(a1, a1.simple(0)), "left")
    assert B.kbeta == (-k - 1,)


def test_lset_of_base_alcove(rd):
    # A+ sits above every finite wall and below the affine one
    assert pm.lset(pm.base_alcove(rd)) == frozenset(range(1, rd.rank + 1))


def test_kbeta_roundtrip_and_validation(rd):
    for A in suites.alcoves_within(rd, 3):
        A.validate()
        assert pm.alcove_from_kbeta(rd, A.kbeta) == A
        assert pm.alcove_from_json(rd, A.to_json()) == A


def test_non_alcove_coordinates_rejected(a2):
    with pytest.raises(ValueError):
        pm.alcove_from_kbeta(a2, (1, 1, 0))


def test_t_action_formula(a1):
    A = pm.base_alcove(a1)
    m = pm.PeriodicElement.single(A)
    # 1 in L(A+): T_1 A+ = A+ s_1 + (v - v^-1) A+
    out = pm.t_act(1, m)
    assert out.terms == {pm.alcove_act(A, hk.generator(a1, 1), "right"): Laurent.const(1), A: u_hecke}
    # 0 not in L(A+): a plain move
    out = pm.t_act(0, m)
    assert out.terms == {pm.alcove_act(A, hk.generator(a1, 0), "right"): Laurent.const(1)}


def test_quadratic_on_alcoves(rd):
    for A in suites.alcoves_within(rd, 2):
        m = pm.PeriodicElement.single(A)
        for s in range(rd.rank + 1):
            tm = pm.t_act(s, m)
            lhs = pm.t_act(s, tm) - tm.scale(u_hecke) - m
            assert not lhs.terms


def test_module_relations_and_negative_control(a2):
    assert suites.module_relations(a2, 3).passed
    bad = suites.module_relations(a2, 3, branch=-u_hecke)
    assert not bad.passed
    assert "counterexample" in bad.detail or bad.detail


def test_theta_a1_base_alcove_frozen(a1):
    # A^0 = s_alpha A+ = (-1, 0); then A+, (1, 2), (2, 3), ...
    out = pm.theta_simple(0, pm.PeriodicElement.single(pm.base_alcove(a1)), 4)
    expected = {(-1,): vinv, (0,): Laurent.const(1) - Laurent.mono(-2),
                (1,): -(vinv - Laurent.mono(-3)), (2,): Laurent.mono(-2) - Laurent.mono(-4)}
    got = {A.kbeta: c for A, c in out.terms.items() if A.kbeta[0] <= 2}
    assert got == expected


def test_theta_coefficients():
    assert pm.theta_coefficient(0) == vinv
    assert pm.theta_coefficient(1) == Laurent.const(1) - Laurent.mono(-2)
    assert pm.theta_coefficient(2) == Laurent.mono(-3) - vinv


def test_theta_march_matches_closed_form(rd):
    for A in suites.alcoves_within(rd, 2)[:6]:
        m = pm.PeriodicElement.single(A)
        for i in range(rd.rank):
            march = pm.theta_simple(i, m, 5)
            exact = pm.exact_theta_simple(i, pm.ExactPeriodic.from_element(m)).expand(5)
            assert march.agrees_with(exact, 5)


def test_theta_squared_is_identity(rd):
    for A in suites.alcoves_within(rd, 2)[:5]:
        x = pm.ExactPeriodic.single(A)
        for i in range(rd.rank):
            assert pm.exact_theta_simple(i, pm.exact_theta_simple(i, x)) == x


def test_theta_commutes_with_hecke(a2):
    x = pm.ExactPeriodic.single(alcove(a2, 0, 1))
    for s in range(3):
        for i in range(2):
            lhs = pm.exact_theta_simple(i, pm.exact_t_act(s, x))
            rhs = pm.exact_t_act(s, pm.exact_theta_simple(i, x))
            assert lhs == rhs


def test_theta_twists_translations(a2):
    x = pm.ExactPeriodic.single(pm.base_alcove(a2))
    g = (1, -1)
    for i in range(2):
        lhs = pm.exact_theta_simple(i, pm.translate_exact(x, g))
        rhs = pm.translate_exact(pm.exact_theta_simple(i, x), a2.simple(i).act(g))
        assert lhs == rhs


def test_theta_braid_relation(b2):
    x = pm.ExactPeriodic.single(alcove(b2, 0))
    assert pm.exact_theta_w((0, 1, 0, 1), x) == pm.exact_theta_w((1, 0, 1, 0), x)


def test_theta_at_v1_is_reflection(a2):
    for A in suites.alcoves_within(a2, 2)[:5]:
        for i in range(2):
            img = pm.exact_theta_simple(i, pm.ExactPeriodic.single(A)).specialize(1)
            B = pm.alcove_act(A, hk.finite(a2, a2.simple(i)), "left")
            assert img == pm.ExactPeriodic.single(B).specialize(1)


def test_truncated_coefficients_are_guarded(a1):
    out = pm.theta_simple(0, pm.PeriodicElement.single(pm.base_alcove(a1)), 3)
    with pytest.raises(DepthUnderflow):
        out.coefficient(pm.alcove_from_kbeta(a1, (20,)))
    with pytest.raises(DepthUnderflow):
        pm.theta_simple(0, out, 3)


def test_cone_certificate_enforced(a1):
    far = pm.alcove_from_kbeta(a1, (-6,))
    with pytest.raises(AssertionError):
        pm.PeriodicElement(a1, {far: 1}, depth=3, cone_apex=(0,))


def test_translation_commutes_with_t_action(a2):
    A = alcove(a2, 1, 0)
    for s in range(3):
        lhs = pm.t_act(s, pm.PeriodicElement.single(pm.translate(A, (1, 1))))
        rhs = pm.t_act(s, pm.PeriodicElement.single(A))
        assert lhs.terms == {pm.translate(B, (1, 1)): c for B, c in rhs.terms.items()}


@given(st.lists(st.integers(0, 2), max_size=5), st.integers(0, 1))
@settings(max_examples=20, deadline=None)
def test_theta_hecke_linear_property(word, i):
    rd = build_root_datum("A2")
    x = pm.ExactPeriodic.single(alcove(rd, *word))
    h = hk.HeckeElement.T(rd, (2, 0)) + hk.HeckeElement.one(rd).scale(v)
    assert pm.exact_theta_simple(i, pm.exact_hecke_act(h, x)) == pm.exact_hecke_act(h, pm.exact_theta_simple(i, x))


def test_bridge_picks_sqrt_q():
    from alcovekit import sl2oracle as so

    rd = build_root_datum("A1")
    model = so.FiniteModel(3, 3)
    m = pm.PeriodicElement.single(pm.base_alcove(rd))
    ok_sqrt, _ = pm.check_intertwining(m, model, "sqrt_q")
    ok_inv, _ = pm.check_intertwining(m, model, "inv_sqrt_q")
    assert ok_sqrt and not ok_inv


def test_element_json_is_sorted(a1):
    m = pm.PeriodicElement(a1, {pm.alcove_from_kbeta(a1, (2,)): v, pm.base_alcove(a1): 1})
    js = m.to_json()
    assert [t["alcove"]["kbeta"] for t in js["terms"]] == [[0], [2]]
    assert m.specialize(1) == {pm.alcove_from_kbeta(a1, (2,)): Fraction(1), pm.base_alcove(a1): Fraction(1)}
