"""Acceptance criteria 1-11, one test each; every test records a PASS/FAIL line."""
from __future__ import annotations

import time
from fractions import Fraction
from functools import lru_cache
from math import comb

from alcovekit import hecke as hk
from alcovekit import periodic as pm
from alcovekit import sl2oracle as so
from alcovekit import spherical as sp
from alcovekit import suites
from alcovekit.rootdata import build_root_datum, permutohedron_complex
from alcovekit.scalars import Laurent, cone_points, height, qinv

GROUPS = ("A1", "A2", "B2")
RESULTS: dict[int, str] = {}


def record(n: int, passed: bool, note: str = "") -> None:
    line = f"criterion {n}: {'PASS' if passed else 'FAIL'}" + (f" ({note})" if note else "")
    RESULTS[n] = line
    print(line)


def by_name(checks):
    return {c.name: c for c in checks}


@lru_cache(maxsize=None)
def oracle_checks(p: int):
    return by_name(suites.oracle_suite(so.FiniteModel(p, 3), 6))


def q_specialize(x: Laurent, qv: int) -> Fraction:
    return sum((c * Fraction(qv) ** e for e, c in x.q_form().items()), Fraction(0))


# 1 -------------------------------------------------------------------------

def test_criterion_1_rank_one_fourier():
    t0 = time.perf_counter()
    rd = build_root_datum("A1")
    ok = True
    depth = 6
    for n in range(-2, 3):
        ok &= sp.phi_simple(rd, 0, sp.c_element(rd, (n,), depth), depth).exact_equal(sp.c_element(rd, (-n,), depth))
    img = sp.phi_simple(rd, 0, sp.delta(rd, (0,)), depth)
    expected = sp.c_element(rd, (0,), depth).scale(1 - qinv ** 2) - sp.delta(rd, (-1,)).scale(qinv)
    ok &= img.exact_equal(expected) and img.agrees_with(expected)
    for qv in (4, 9):
        ok &= all(q_specialize(img.coefficient(g), qv) == q_specialize(expected.coefficient(g), qv)
                  for g in [(k,) for k in range(-1, depth + 1)])
    # second route: the finite model, with the formal coefficients evaluated at its q
    for p in (2, 3):
        model = so.FiniteModel(p, 3)
        for n in (-1, 0, 1):
            ok &= so.symplectic_fourier(so.sample_c(n, model)) == so.sample_c(-n, model)
        formal = {g[0]: q_specialize(x, p) for g, x in img.series.entries.items()}
        good, report = so.compare(formal, so.symplectic_fourier(so.sample_delta(0, model)), range(-1, 2))
        ok &= good
    elapsed = time.perf_counter() - t0
    record(1, ok and elapsed < 10, f"{elapsed:.1f}s")
    assert ok and elapsed < 10


# 2 -------------------------------------------------------------------------

def test_criterion_2_weyl_symmetry_of_c_basis():
    t0 = time.perf_counter()
    ok, cases = True, 0
    for ct in GROUPS:
        rd = build_root_datum(ct)
        for mu in suites.small_weights(rd, 2):
            c_mu = sp.c_element(rd, mu, 6)
            for w in rd.weyl_elements:
                img = sp.phi_w(rd, w, c_mu, 6)
                target = sp.c_element(rd, w.act(mu), 6)
                ok &= img.exact_equal(target) and img.agrees_with(target, 6)
                cases += 1
    elapsed = time.perf_counter() - t0
    record(2, ok and elapsed < 60, f"{cases} cases, {elapsed:.1f}s")
    assert ok and elapsed < 60


# 3 -------------------------------------------------------------------------

def test_criterion_3_inversion():
    ok = True
    for ct in GROUPS:
        rd = build_root_datum(ct)
        zero = (0,) * rd.rank
        for mu in suites.small_weights(rd, 1):
            ok &= suites.inversion_ok(rd, mu, 5) and suites.c_to_delta_ok(rd, mu, 5)
        # the opposite exponent must be caught
        ok &= not suites.inversion_ok(rd, zero, 5, exponent=len(rd.positive_coroots))
    for p in (2, 3):
        ok &= oracle_checks(p)["inversion_exponent"].passed
    record(3, ok, "printed exponent rejected formally and on the finite model")
    assert ok


# 4 -------------------------------------------------------------------------

def literal_total_matches(rd, N: int) -> bool:
    """sum_{ht <= N} K(gamma) against (1 - q^-1)^-n truncated at q^-N."""
    total = sum((k for _, k in sp.kostant_table(rd, N)), Laurent())
    n = len(rd.positive_coroots)
    return all(total.coefficient(-2 * k) == comb(k + n - 1, n - 1) for k in range(N + 1))


def test_criterion_4_kostant_generating_function():
    graded, literal = {}, {}
    for ct in GROUPS:
        rd = build_root_datum(ct)
        g, qdeg = suites.kostant_total_matches(rd, 6)
        graded[ct] = g and qdeg
        literal[ct] = literal_total_matches(rd, 6)
    # the ungraded reading only holds when every positive coroot has height one
    passed = all(literal.values())
    failing = [ct for ct, v in literal.items() if not v]
    record(4, passed, "graded identity holds in " + ",".join(ct for ct, v in graded.items() if v)
           + (f"; ungraded total differs in {','.join(failing)}" if failing else ""))
    assert all(graded.values())
    assert literal == {"A1": True, "A2": False, "B2": False}


# 5 -------------------------------------------------------------------------

def braid_in_context(rd, pairs) -> bool:
    """Braid relations inside longer words: x (sts..) y = x (tst..) y, total length <= 6."""
    for s, t, k in pairs:
        w1, w2 = ((s, t) * k)[:k], ((t, s) * k)[:k]
        pad = 6 - k
        for a in range(rd.rank + 1):
            pre = (a,) if pad >= 1 else ()
            post = (a,) if pad >= 2 else ()
            lhs = hk.HeckeElement.T(rd, pre + w1 + post)
            rhs = hk.HeckeElement.T(rd, pre + w2 + post)
            if lhs != rhs:
                return False
    return True


def test_criterion_5_hecke_relations():
    ok = True
    for ct in GROUPS:
        rd = build_root_datum(ct)
        res = by_name(suites.hecke_suite(rd))
        ok &= all(res[n].passed for n in ("quadratic", "inverse", "braid", "associativity", "length_words"))
        ok &= braid_in_context(rd, suites.braid_pairs(rd))
    record(5, ok)
    assert ok


# 6 -------------------------------------------------------------------------

def test_criterion_6_periodic_module():
    ok, failed = True, []
    for ct in GROUPS:
        rd = build_root_datum(ct)
        for c in suites.periodic_suite(rd, 6, radius=6):
            if not c.passed:
                failed.append(f"{ct}:{c.name}")
            ok &= c.passed
    record(6, ok, "radius 6, depth 6" + (f"; failed {failed}" if failed else ""))
    assert ok


# 7 -------------------------------------------------------------------------

def test_criterion_7_rank_one_bridge():
    rd = build_root_datum("A1")
    winners = set()
    ok = True
    for p in (2, 3):
        model = so.FiniteModel(p, 3)
        verdict = {}
        for mode in ("sqrt_q", "inv_sqrt_q"):
            good = True
            for k in range(-2, 2):
                m = pm.PeriodicElement.single(pm.alcove_from_kbeta(rd, (k,)))
                good &= pm.check_intertwining(m, model, mode)[0]
            verdict[mode] = good
        passing = [m for m, v in verdict.items() if v]
        ok &= len(passing) == 1
        winners.update(passing)
        ok &= oracle_checks(p)["alcove_fourier_bridge"].detail["passing_convention"] == passing
    ok &= len(winners) == 1
    name = {"sqrt_q": "v = q^(1/2)", "inv_sqrt_q": "v = q^(-1/2)"}
    record(7, ok, "passing convention: " + ", ".join(name[w] for w in sorted(winners)))
    assert ok and winners == {"sqrt_q"}


# 8 -------------------------------------------------------------------------

def test_criterion_8_ktheory():
    ok = True
    for ct, depth in (("A1", 4), ("A2", 3)):
        res = by_name(suites.ktheory_suite(build_root_datum(ct), depth))
        ok &= all(res[n].passed for n in ("t1_kappa", "phizeta", "push_polynomial", "honest_classes"))
        ok &= res["phizeta"].detail["depth"] == depth
    record(8, ok)
    assert ok


# 9 -------------------------------------------------------------------------

def test_criterion_9_bezout():
    ok = all(suites.bezout_ok(build_root_datum(ct), qv, 4) for ct in ("A1", "A2") for qv in (4, 9))
    record(9, ok, "degree bound 4, verified by multiplication")
    assert ok


# 10 ------------------------------------------------------------------------

def test_criterion_10_permutohedron():
    t0 = time.perf_counter()
    ok = True
    for ct in GROUPS:
        cx = permutohedron_complex(build_root_datum(ct))
        ok &= cx.d_squared_zero() and cx.is_exact()
    elapsed = time.perf_counter() - t0
    record(10, ok and elapsed < 5, f"{elapsed:.2f}s")
    assert ok and elapsed < 5


# 11 ------------------------------------------------------------------------

def test_criterion_11_pairing():
    ok = True
    for ct in GROUPS:
        rd = build_root_datum(ct)
        res = by_name(suites.spherical_suite(rd, 4))
        ok &= res["pairing_deltas"].passed and res["s0_finiteness"].passed
        # vol(X_0) is forced by sum_{gamma >= 0} q^{-2 <gamma, rho>} vol(X_0) = 1
        N = 6
        total = sum((qinv ** (2 * height(g)) for g in cone_points((0,) * rd.rank, N)), Laurent())
        prod = total * sp.vol_x0(rd)
        ok &= all(prod.coefficient(-2 * k) == (1 if k == 0 else 0) for k in range(N + 1))
    record(11, ok)
    assert ok
