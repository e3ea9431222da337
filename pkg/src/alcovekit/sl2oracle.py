"""Finite-level model of functions on k^2 - {0} for SL(2), k a p-adic field with residue field F_p.

Coordinates are truncated to pi^-M O / pi^M O.  Writing x = p^-M a we identify
this ring with Z/N, N = p^(2M); a function is an integer array over
(Z/N)^2 with a common denominator.  The additive character is
psi(p^-2M t) = exp(2 pi i t / N), trivial on O and nontrivial on pi^-1 O.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


class WindowError(ValueError):
    """Requested object does not fit in the finite window."""


@dataclass(frozen=True)
class FiniteModel:
    p: int
    M: int

    @property
    def q(self) -> int:
        return self.p

    @property
    def N(self) -> int:
        return self.p ** (2 * self.M)

    @property
    def margin(self) -> int:
        return self.M // 2

    @cached_property
    def _val1(self) -> np.ndarray:
        """Valuation of x = p^-M a for a in Z/N (value M for a = 0, i.e. x in pi^M O)."""
        a = np.arange(self.N)
        out = np.full(self.N, self.M, dtype=np.int64)
        for k in range(2 * self.M - 1, -1, -1):
            out[(a % self.p ** k == 0) & (a != 0) & (out == self.M)] = k - self.M
        return out

    @cached_property
    def val(self) -> tuple[np.ndarray, np.ndarray]:
        v1 = self._val1
        return v1[:, None] + 0 * v1[None, :], 0 * v1[:, None] + v1[None, :]

    @cached_property
    def level(self) -> np.ndarray:
        """min(v(x1), v(x2)); equals M only at the origin of the model."""
        a, b = self.val
        return np.minimum(a, b)

    def units(self) -> list[int]:
        """Generators of (Z/N)^* (a primitive root mod p^2, or -1 and 5 for p = 2)."""
        if self.p == 2:
            return [self.N - 1, 5 % self.N]
        for g in range(2, self.p ** 2):
            if gcd(g, self.p) == 1 and _order(g, self.p ** 2) == self.p * (self.p - 1):
                return [g]
        raise AssertionError


def _order(g: int, n: int) -> int:
    k, x = 1, g % n
    while x != 1:
        x = x * g % n
        k += 1
    return k


class FiniteFunction:
    """Exact rational function on the model: values = num / den."""

    def __init__(self, model: FiniteModel, num: np.ndarray, den: int = 1):
        g = gcd(int(np.gcd.reduce(np.abs(num).ravel())) if num.size else 0, den)
        if g > 1:
            num, den = num // g, den // g
        if den < 0:
            num, den = -num, -den
        self.model = model
        self.num = num.astype(np.int64)
        self.den = int(den)

    @classmethod
    def from_indicator(cls, model: FiniteModel, mask: np.ndarray, value: Fraction) -> "FiniteFunction":
        value = Fraction(value)
        return cls(model, mask.astype(np.int64) * value.numerator, value.denominator)

    def value(self, a1: int, a2: int) -> Fraction:
        return Fraction(int(self.num[a1 % self.model.N, a2 % self.model.N]), self.den)

    def __add__(self, other: "FiniteFunction") -> "FiniteFunction":
        d = self.den * other.den // gcd(self.den, other.den)
        return FiniteFunction(self.model, self.num * (d // self.den) + other.num * (d // other.den), d)

    def __neg__(self):
        return FiniteFunction(self.model, -self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "FiniteFunction":
        c = Fraction(c)
        return FiniteFunction(self.model, self.num * c.numerator, self.den * c.denominator)

    def __eq__(self, other):
        if not isinstance(other, FiniteFunction):
            return NotImplemented
        return self.den == other.den and np.array_equal(self.num, other.num)

    def is_zero(self) -> bool:
        return not self.num.any()

    def sum_squares(self) -> Fraction:
        return Fraction(int((self.num.astype(object) ** 2).sum()), self.den ** 2)

    def restricted(self, mask: np.ndarray) -> "FiniteFunction":
        return FiniteFunction(self.model, np.where(mask, self.num, 0), self.den)


# ---------------------------------------------------------------------------
# sample functions


def _check_level(model: FiniteModel, n: int) -> None:
    if abs(n) >= model.M - 1 and not (model.M <= 2 and n == 0):
        raise WindowError(f"level {n} needs |n| < M - 1 = {model.M - 1}")


def sample_c(n: int, model: FiniteModel) -> FiniteFunction:
    """c_n = q^n on pi^n O^2."""
    _check_level(model, n)
    return FiniteFunction.from_indicator(model, model.level >= n, Fraction(model.q) ** n)


def sample_delta(n: int, model: FiniteModel) -> FiniteFunction:
    """delta_n = q^n on pi^n O^2 - pi^(n+1) O^2."""
    _check_level(model, n)
    return FiniteFunction.from_indicator(model, model.level == n, Fraction(model.q) ** n)


def alcove_set(k: int, model: FiniteModel) -> np.ndarray:
    """Points of the Iwahori orbit labelled by the rank-one alcove k.

    k = 2n:   v(x2) = n <= v(x1);   k = 2n+1: v(x1) = n < v(x2).
    """
    v1, v2 = model.val
    n = k // 2
    if k % 2 == 0:
        return (v2 == n) & (v1 >= n)
    return (v1 == n) & (v2 > n)


def alcove_indicator(k: int, model: FiniteModel) -> FiniteFunction:
    return FiniteFunction.from_indicator(model, alcove_set(k, model), Fraction(1))


def orbit_label(v1: int, v2: int) -> int:
    return 2 * v2 if v2 <= v1 else 2 * v1 + 1


# ---------------------------------------------------------------------------
# Fourier transform


def check_margin(f: FiniteFunction) -> None:
    model = f.model
    m = model.margin
    if np.any(f.num[model.level < -model.M + m]):
        raise WindowError("support reaches valuations below -M + M//2")
    step = model.p ** (2 * model.M - m)  # x -> x + pi^(M-m) in the a-coordinates
    shifted = np.roll(f.num, step, axis=0)
    shifted2 = np.roll(f.num, step, axis=1)
    if not (np.array_equal(shifted, f.num) and np.array_equal(shifted2, f.num)):
        raise WindowError("function is not invariant under pi^(M - M//2) O^2")


def symplectic_fourier(f: FiniteFunction, check: bool = True) -> FiniteFunction:
    """g(y) = vol * sum_x f(x) psi(x1 y2 - x2 y1), vol = q^-2M, computed exactly.

    The floating FFT sums are integers times known denominators; they are rounded
    and the rounding error is checked before accepting the exact result.
    """
    if check:
        check_margin(f)
    model = f.model
    N = model.N
    F = np.fft.fft2(f.num.astype(np.float64))
    # g[b1, b2] uses exp(+2 pi i (a1 b2 - a2 b1)/N) = fft2 at (-b2, b1)
    idx = np.arange(N)
    G = F[(-idx[None, :]) % N, idx[:, None]]
    R = np.rint(G.real)
    err = max(float(np.abs(G.imag).max()), float(np.abs(G.real - R).max()))
    if err > 1e-6:
        raise ArithmeticError(f"exact recovery failed (residual {err:.3g})")
    return FiniteFunction(model, R.astype(np.int64), f.den * model.p ** (2 * model.M))


# ---------------------------------------------------------------------------
# orbits


def iwahori_orbits(model: FiniteModel, with_torus: bool = False) -> np.ndarray:
    """Component labels (array over (Z/N)^2, -1 at the origin) of the Iwahori action.

    Generators: (x1 + x2, x2), (x1, x2 + pi x1), diag(t, 1/t) for unit t; with
    ``with_torus`` also the T(O) scalings (t x1, t x2).
    """
    N, p = model.N, model.p
    a1, a2 = np.meshgrid(np.arange(N), np.arange(N), indexing="ij")
    src = (a1 * N + a2).ravel()
    maps = [((a1 + a2) % N, a2), (a1, (a2 + p * a1) % N)]
    for t in model.units():
        tinv = pow(t, -1, N)
        maps.append(((t * a1) % N, (tinv * a2) % N))
        if with_torus:
            maps.append(((t * a1) % N, (t * a2) % N))
    rows, cols = [], []
    for b1, b2 in maps:
        rows.append(src)
        cols.append((b1 * N + b2).ravel())
    rows, cols = np.concatenate(rows), np.concatenate(cols)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(N * N, N * N))
    _, labels = connected_components(graph, directed=False)
    labels = labels.reshape(N, N).astype(np.int64)
    labels[0, 0] = -1
    return labels


def orbit_partition(labels: np.ndarray) -> set[frozenset]:
    out: dict[int, list] = {}
    for idx, lab in np.ndenumerate(labels):
        if lab >= 0:
            out.setdefault(int(lab), []).append(idx)
    return {frozenset(v) for v in out.values()}


def labelled_orbits(model: FiniteModel) -> dict[int, np.ndarray]:
    """Orbit masks keyed by alcove label, checked against the valuation description."""
    labels = iwahori_orbits(model)
    v1, v2 = model.val
    out: dict[int, np.ndarray] = {}
    for lab in np.unique(labels):
        if lab < 0:
            continue
        mask = labels == lab
        i, j = np.argwhere(mask)[0]
        k = orbit_label(int(v1[i, j]), int(v2[i, j]))
        if k in out:
            raise AssertionError(f"two orbits carry label {k}")
        out[k] = mask
    return out


# ---------------------------------------------------------------------------
# K-projection and comparison


def k_average(f: FiniteFunction) -> dict[int, Fraction]:
    """Coefficients a_n with K-average of f = sum a_n delta_n (levels inside the model)."""
    model = f.model
    out = {}
    for n in range(-model.M, model.M):
        mask = model.level == n
        tot = Fraction(int(f.num[mask].sum()), f.den)
        cnt = int(mask.sum())
        if tot:
            out[n] = tot / cnt / Fraction(model.q) ** n
    return out


def compare(formal: dict[int, Fraction], finite: FiniteFunction, window: range) -> tuple[bool, dict]:
    """Compare a delta_n expansion with a finite function level by level on ``window``.

    Returns (verdict, report) where the report names the first bad level.
    """
    model = finite.model
    worst = None
    for n in window:
        mask = model.level == n
        expected = formal.get(n, Fraction(0)) * Fraction(model.q) ** n
        vals = set(int(x) for x in np.unique(finite.num[mask]))
        got = {Fraction(x, finite.den) for x in vals}
        if got != {expected}:
            worst = {"level": n, "expected": str(expected), "found": sorted(str(x) for x in got)}
            break
    return worst is None, {"window": [window.start, window.stop - 1], "mismatch": worst}


def spherical_to_finite(formal: dict[int, Fraction], model: FiniteModel) -> FiniteFunction:
    out = FiniteFunction(model, np.zeros((model.N, model.N), dtype=np.int64), 1)
    for n, a in formal.items():
        out = out + FiniteFunction.from_indicator(model, model.level == n, Fraction(a) * Fraction(model.q) ** n)
    return out


# ---------------------------------------------------------------------------
# Q(sqrt q) scalars for half-integral powers of q


@dataclass(frozen=True)
class QSqrt:
    """a + b sqrt(q) with rational a, b."""

    a: Fraction
    b: Fraction
    q: int

    def __add__(self, o: "QSqrt") -> "QSqrt":
        return QSqrt(self.a + o.a, self.b + o.b, self.q)

    def __mul__(self, o: "QSqrt") -> "QSqrt":
        return QSqrt(self.a * o.a + self.b * o.b * self.q, self.a * o.b + self.b * o.a, self.q)

    def __neg__(self):
        return QSqrt(-self.a, -self.b, self.q)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


def sqrt_power(q: int, n: int, sign: int = 1) -> QSqrt:
    """(sign * sqrt q)^n."""
    s = Fraction(sign) ** n
    if n % 2 == 0:
        return QSqrt(s * Fraction(q) ** (n // 2), Fraction(0), q)
    return QSqrt(Fraction(0), s * Fraction(q) ** ((n - 1) // 2), q)


def eval_laurent_sqrt(lau, q: int, inverse: bool = False) -> QSqrt:
    """Evaluate a Laurent polynomial in v at v = sqrt q (or at v = 1/sqrt q)."""
    out = QSqrt(Fraction(0), Fraction(0), q)
    for e, x in lau.c.items():
        out = out + QSqrt(Fraction(x), Fraction(0), q) * sqrt_power(q, -e if inverse else e)
    return out
