from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcovekit import sl2oracle as so
from alcovekit.scalars import Laurent, u_hecke


@pytest.fixture(scope="module", params=[(2, 3), (3, 3)], ids=["p2", "p3"])
def model(request):
    return so.FiniteModel(*request.param)


def phi_delta0_formal(q: int, window: range) -> dict[int, Fraction]:
    """(1 - q^-2) c_0 - q^-1 delta_-1 as delta_n coefficients."""
    out = {n: (1 - Fraction(1, q * q)) * Fraction(1, q) ** n for n in window if n >= 0}
    out[-1] = Fraction(-1, q)
    return out


def test_model_shape(model):
    assert model.N == model.p ** 6
    assert model.level[0, 0] == model.M
    assert set(np.unique(model.level)) == set(range(-model.M, model.M + 1))


def test_fourier_swaps_c_levels(model):
    for n in (-1, 0, 1):
        img = so.symplectic_fourier(so.sample_c(n, model))
        assert img == so.sample_c(-n, model)


def test_fourier_of_delta0(model):
    img = so.symplectic_fourier(so.sample_delta(0, model))
    ok, report = so.compare(phi_delta0_formal(model.q, range(-1, 2)), img, range(-1, 2))
    assert ok, report


def test_wrong_formula_is_located(model):
    img = so.symplectic_fourier(so.sample_delta(0, model))
    wrong = phi_delta0_formal(model.q, range(-1, 2))
    wrong[0] += 1
    ok, report = so.compare(wrong, img, range(-1, 2))
    assert not ok and report["mismatch"]["level"] == 0


def test_fourier_involution_and_plancherel(model):
    f = so.sample_delta(0, model) + so.sample_c(1, model).scale(3)
    g = so.symplectic_fourier(f)
    assert so.symplectic_fourier(g) == f
    assert g.sum_squares() == f.sum_squares()


def test_k_average_of_c0(model):
    avg = so.k_average(so.sample_c(0, model))
    q = Fraction(model.q)
    assert avg == {n: q ** -n for n in range(0, model.M)}


def test_window_guard(model):
    with pytest.raises(so.WindowError):
        so.sample_c(model.M - 1, model)
    # a level-(-M) function breaks the support margin
    bad = so.FiniteFunction.from_indicator(model, model.level == -model.M, Fraction(1))
    with pytest.raises(so.WindowError):
        so.symplectic_fourier(bad)


def test_iwahori_orbits_match_alcove_labels(model):
    orbits = so.labelled_orbits(model)
    assert len(orbits) == 2 * 2 * model.M
    for k, mask in orbits.items():
        assert np.array_equal(mask, so.alcove_set(k, model))


def test_torus_merges_nothing_extra(model):
    plain = so.orbit_partition(so.iwahori_orbits(model))
    with_t = so.orbit_partition(so.iwahori_orbits(model, with_torus=True))
    assert plain == with_t


def test_orbit_label_rule():
    assert so.orbit_label(0, 0) == 0
    assert so.orbit_label(1, 0) == 0
    assert so.orbit_label(0, 1) == 1
    assert so.orbit_label(-1, 3) == -1


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_sqrt_powers_multiply(m, n):
    a, b = so.sqrt_power(5, m), so.sqrt_power(5, n)
    assert a * b == so.sqrt_power(5, m + n)


def test_eval_laurent_sqrt():
    val = so.eval_laurent_sqrt(u_hecke, 4)
    # kept formal in sqrt(q): v - 1/v = sqrt(q) (1 - 1/q)
    assert val == so.QSqrt(Fraction(0), Fraction(3, 4), 4)
    assert so.eval_laurent_sqrt(u_hecke, 4, inverse=True) == so.QSqrt(Fraction(0), Fraction(-3, 4), 4)
    assert so.eval_laurent_sqrt(Laurent.mono(1), 3) == so.QSqrt(Fraction(0), Fraction(1), 3)


@settings(max_examples=10, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_fourier_linear(coeffs):
    model = so.FiniteModel(2, 3)
    parts = [so.sample_delta(n, model) for n in (-1, 0, 1)]
    f = parts[0].scale(coeffs[0]) + parts[1].scale(coeffs[1]) + parts[2].scale(coeffs[2])
    g = so.symplectic_fourier(parts[0]).scale(coeffs[0]) + so.symplectic_fourier(parts[1]).scale(coeffs[1]) \
        + so.symplectic_fourier(parts[2]).scale(coeffs[2])
    assert so.symplectic_fourier(f) == g
