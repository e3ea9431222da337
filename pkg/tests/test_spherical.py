from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcovekit import spherical as sp
from alcovekit.rootdata import build_root_datum
from alcovekit.scalars import Laurent, TorusFunction, height, qinv


def test_kostant_a1_is_geometric():
    rd = build_root_datum("A1")
    assert [(g, k) for g, k in sp.kostant_table(rd, 3)] == [((n,), qinv ** n) for n in range(4)]


def test_kostant_a2_values():
    rd = build_root_datum("A2")
    assert sp.kostant_q(rd, (1, 1)) == qinv + qinv ** 2
    # (2,2): {a1,a1,a2,a2}, {a1,a2,a12}, {a12,a12}
    assert sp.kostant_q(rd, (2, 2)) == qinv ** 4 + qinv ** 3 + qinv ** 2
    assert sp.kostant_q(rd, (-1, 0)) == Laurent()
    assert sp.kostant_table(rd, 0) == [((0, 0), Laurent.const(1))]


def test_kostant_b2_value():
    # positive coroots of B2: (1,0), (0,1), (1,1), (2,1) in simple-coroot coordinates
    rd = build_root_datum("B2")
    # (2,1) = 2a + b = a + (a+b) = (2a+b)
    assert sp.kostant_q(rd, (2, 1)) == qinv ** 3 + qinv ** 2 + qinv


def test_c0_series_a1():
    rd = build_root_datum("A1")
    c0 = sp.c_element(rd, (0,), 2)
    assert c0.series.entries == {(0,): Laurent.const(1), (1,): qinv, (2,): qinv ** 2}


def test_delta_in_c_a1():
    rd = build_root_datum("A1")
    assert sp.delta_in_c_basis(rd, (0,)) == {(0,): Laurent.const(1), (1,): -qinv}


@pytest.mark.parametrize("ct", ["A1", "A2", "B2"])
def test_inversion_roundtrip(ct):
    rd = build_root_datum(ct)
    for mu in [(0,) * rd.rank, (1,) + (0,) * (rd.rank - 1)]:
        combo = sp.delta_in_c_basis(rd, mu)
        assert sp.c_combination(rd, combo, 5).agrees_with(sp.delta(rd, mu).with_depth(5))
        wrong = sp.delta_in_c_basis(rd, mu, len(rd.positive_coroots))
        assert not sp.c_combination(rd, wrong, 5).agrees_with(sp.delta(rd, mu).with_depth(5))


def test_phi_alpha_on_delta0():
    rd = build_root_datum("A1")
    img = sp.phi_simple(rd, 0, sp.delta(rd, (0,)), 4)
    expected = sp.c_element(rd, (0,), 4).scale(1 - qinv ** 2) - sp.delta(rd, (-1,)).scale(qinv)
    assert img.exact_equal(expected)
    assert img.coefficient((-1,)) == -qinv
    assert img.coefficient((0,)) == 1 - qinv ** 2


@pytest.mark.parametrize("ct", ["A1", "A2", "B2"])
def test_phi_w_permutes_c_basis(ct):
    rd = build_root_datum(ct)
    for w in rd.weyl_elements:
        for mu in [(0,) * rd.rank, (1,) + (0,) * (rd.rank - 1)]:
            img = sp.phi_w(rd, w, sp.c_element(rd, mu, 4), 4)
            assert img.exact_equal(sp.c_element(rd, w.act(mu), 4))


@given(st.integers(-2, 2), st.integers(-2, 2))
@settings(max_examples=25, deadline=None)
def test_phi_simple_is_involution_on_deltas(a, b):
    rd = build_root_datum("A2")
    x = sp.delta(rd, (a, b))
    for i in range(2):
        back = sp.phi_simple(rd, i, sp.phi_simple(rd, i, x))
        assert back.exact_equal(x)


def test_phi_image_outside_cone_raises():
    rd = build_root_datum("A1")
    # one pole along alpha cancels against the new factor; a double pole leaves one along -alpha
    f = sp.SphericalElement.from_exact(rd, sp.ExactForm(TorusFunction.monomial((0,)), ((1,),)))
    f2 = sp.phi_simple(rd, 0, f)
    assert f2 is not None
    with pytest.raises(sp.DepthUnderflow):
        sp.phi_simple(rd, 0, sp.SphericalElement.from_exact(rd, sp.ExactForm(TorusFunction.monomial((0,)), ((1,), (1,)))))


@pytest.mark.parametrize("ct", ["A1", "A2"])
def test_pairing_of_deltas(ct):
    rd = build_root_datum(ct)
    g, m = (1,) * rd.rank, (0,) * rd.rank
    val = sp.pairing(rd, sp.delta(rd, g), sp.delta(rd, m))
    assert val == TorusFunction.monomial(g, sp.vol_x0(rd))


def test_vol_normalization():
    rd = build_root_datum("A1")
    # sum_n q^-2n vol = 1
    assert sp.vol_x0(rd) == 1 - qinv ** 2


def test_pairing_with_c_needs_w_stable_argument():
    rd = build_root_datum("A1")
    c0 = sp.c_element(rd, (0,), 4)
    with pytest.raises(sp.NotInA):
        sp.pairing(rd, c0, sp.delta(rd, (0,)))
    assert not sp.pairing(rd, c0, sp.s0_element(rd, (0,))).is_zero()


@pytest.mark.parametrize("ct", ["A1", "A2", "B2"])
def test_s0_images_stay_finite(ct):
    rd = build_root_datum(ct)
    x = sp.s0_element(rd, (0,) * rd.rank)
    for w in rd.weyl_elements:
        sp.phi_w(rd, w, x)  # no DepthUnderflow


def test_truncation_is_certified():
    rd = build_root_datum("A2")
    c = sp.c_element(rd, (0, 0), 3)
    assert all(height(g) <= 3 for g in c.series.entries)
    with pytest.raises(Exception):
        c.coefficient((2, 2))
