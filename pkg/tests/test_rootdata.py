from __future__ import annotations

import pytest

from alcovekit.rootdata import build_root_datum, minimal_coset_reps, permutohedron_complex, rho_pair

ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "C2": 8, "G2": 12}
N_POS = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "C2": 4, "G2": 6}


@pytest.mark.parametrize("ct", sorted(ORDERS))
def test_weyl_group_sizes(ct):
    rd = build_root_datum(ct)
    assert len(rd.weyl_elements) == ORDERS[ct]
    assert len(rd.positive_coroots) == N_POS[ct]
    longest = max(rd.weyl_elements, key=lambda w: w.length)
    assert longest.length == N_POS[ct]


@pytest.mark.parametrize("ct", sorted(ORDERS))
def test_rho_vee_pairs_to_one_with_simple_roots(ct):
    rd = build_root_datum(ct)
    for a in rd.simple_roots:
        assert rd.pair(rd.rho_vee, a) == 1


def test_group_laws(rd):
    for w in rd.weyl_elements:
        assert rd.mul(w, rd.inverse(w)) == rd.identity
        for i in range(rd.rank):
            sw = rd.mul(rd.simple(i), w)
            assert abs(sw.length - w.length) == 1


def test_reflections_negate_their_coroot(rd):
    for bc in rd.positive_coroots:
        s = rd.reflection(bc)
        assert s.act(bc) == tuple(-x for x in bc)
        assert rd.mul(s, s) == rd.identity


def test_coroot_root_bijection(rd):
    for b in rd.positive_roots:
        assert rd.root_of(rd.coroot_of(b)) == b
        assert rd.pair(rd.coroot_of(b), b) == 2


def test_b2_has_long_and_short_coroots(b2):
    assert sorted(rho_pair(b2, c) for c in b2.positive_coroots) == [1, 1, 2, 3]


def test_minimal_coset_reps_count(a2):
    assert len(minimal_coset_reps(a2, [0])) == 3
    assert len(minimal_coset_reps(a2, [])) == 6


def test_unknown_type():
    with pytest.raises(ValueError):
        build_root_datum("E9")


@pytest.mark.parametrize("ct,counts", [("A1", {-1: 1, 0: 2, 1: 1}),
                                       ("A2", {-1: 1, 0: 6, 1: 6, 2: 1}),
                                       ("B2", {-1: 1, 0: 8, 1: 8, 2: 1})])
def test_permutohedron_counts_and_exactness(ct, counts):
    cx = permutohedron_complex(build_root_datum(ct))
    assert cx.counts() == counts
    assert cx.d_squared_zero()
    assert cx.is_exact()


def test_permutohedron_a3_exact():
    cx = permutohedron_complex(build_root_datum("A3"))
    assert cx.counts() == {-1: 1, 0: 24, 1: 36, 2: 14, 3: 1}
    assert cx.is_exact()
