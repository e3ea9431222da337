"""Exact coefficient rings.

* :class:`Laurent` -- Laurent polynomials in v (q = v^2) with rational coefficients.
* :class:`TorusFunction` -- Laurent polynomials in v and in the Gamma-monomials H_gamma.
* :class:`RationalTorusFunction` -- ratios of torus functions, compared by cross-multiplication.
* :class:`ConeSeries` -- cone-supported formal series with an explicit height certificate.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

Number = int | Fraction
Vec = tuple[int, ...]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class DivisionError(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


# ---------------------------------------------------------------------------
class Laurent:
    """Element of Q[v, v^-1]."""

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs: Mapping[int, Number] | None = None):
        self.c: dict[int, Fraction] = {}
        if coeffs:
            for e, x in coeffs.items():
                x = _frac(x)
                if x:
                    self.c[int(e)] = x
        self._hash = None

    # constructors
    @classmethod
    def const(cls, x: Number) -> "Laurent":
        return cls({0: x})

    @classmethod
    def mono(cls, e: int, x: Number = 1) -> "Laurent":
        return cls({e: x})

    @classmethod
    def coerce(cls, x) -> "Laurent":
        if isinstance(x, Laurent):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Laurent")

    # ring structure
    def __add__(self, other):
        other = Laurent.coerce(other)
        out = dict(self.c)
        for e, x in other.c.items():
            out[e] = out.get(e, 0) + x
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -x for e, x in self.c.items()})

    def __sub__(self, other):
        return self + (-Laurent.coerce(other))

    def __rsub__(self, other):
        return Laurent.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (TorusFunction, RationalTorusFunction)):
            return NotImplemented
        other = Laurent.coerce(other)
        out: dict[int, Fraction] = defaultdict(Fraction)
        for e1, x1 in self.c.items():
            for e2, x2 in other.c.items():
                out[e1 + e2] += x1 * x2
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.c) != 1:
                raise DivisionError("only monomials have Laurent inverses")
            (e, x), = self.c.items()
            return Laurent({e * n: x ** n})
        out = Laurent.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Laurent.const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.c.items()))
        return self._hash

    def __bool__(self):
        return bool(self.c)

    def is_zero(self) -> bool:
        return not self.c

    # accessors
    def min_exp(self) -> int:
        return min(self.c)

    def max_exp(self) -> int:
        return max(self.c)

    def coefficient(self, e: int) -> Fraction:
        return self.c.get(e, Fraction(0))

    def is_constant(self) -> bool:
        return not self.c or set(self.c) == {0}

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.c.get(0, Fraction(0))

    def specialize(self, v_value: Number) -> Fraction:
        v_value = _frac(v_value)
        if v_value == 0:
            raise ZeroDivisionError("v = 0")
        return sum((x * v_value ** e for e, x in self.c.items()), Fraction(0))

    def bar(self) -> "Laurent":
        """v -> v^-1."""
        return Laurent({-e: x for e, x in self.c.items()})

    def truncate_below(self, e0: int) -> "Laurent":
        """Keep only exponents >= e0."""
        return Laurent({e: x for e, x in self.c.items() if e >= e0})

    def q_form(self) -> dict[int, Fraction]:
        """Exponents of q = v^2; raises if an odd power of v occurs."""
        if any(e % 2 for e in self.c):
            raise ValueError(f"{self} involves odd powers of v")
        return {e // 2: x for e, x in self.c.items()}

    def __str__(self):
        return format_laurent(self.c, "v")

    def __repr__(self):
        return f"Laurent({self})"


def format_laurent(c: Mapping[int, Fraction], var: str) -> str:
    if not c:
        return "0"
    parts = []
    for e in sorted(c, reverse=True):
        x = c[e]
        sign = "-" if x < 0 else "+"
        ax = abs(x)
        if e == 0:
            body = str(ax)
        else:
            mon = var if e == 1 else f"{var}^{e}"
            body = mon if ax == 1 else f"{ax}*{mon}"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


v = Laurent.mono(1)
q = Laurent.mono(2)
qinv = Laurent.mono(-2)
u_hecke = Laurent({1: 1, -1: -1})  # v - v^-1


def specialize(x, v_value: Number):
    """Substitute a rational value for v (Laurent -> Fraction, TorusFunction -> TorusFunction)."""
    if isinstance(x, Laurent):
        return x.specialize(v_value)
    if isinstance(x, (TorusFunction, RationalTorusFunction)):
        return x.specialize(v_value)
    raise TypeError(type(x).__name__)


# ---------------------------------------------------------------------------
class TorusFunction:
    """Finite sum of c * v^k * H_gamma with gamma in Z^rank.

    Stored flat as {(k, *gamma): coefficient}.
    """

    __slots__ = ("rank", "t", "_hash")

    def __init__(self, rank: int, flat: Mapping[tuple, Number] | None = None):
        self.rank = rank
        self.t: dict[tuple, Fraction] = {}
        if flat:
            for key, x in flat.items():
                x = _frac(x)
                if x:
                    self.t[tuple(key)] = x
        self._hash = None

    # constructors
    @classmethod
    def from_terms(cls, rank: int, terms: Mapping[Sequence[int], Laurent | Number]) -> "TorusFunction":
        flat: dict[tuple, Fraction] = defaultdict(Fraction)
        for g, s in terms.items():
            s = Laurent.coerce(s)
            for e, x in s.c.items():
                flat[(e, *g)] += x
        return cls(rank, flat)

    @classmethod
    def monomial(cls, gamma: Sequence[int], coeff: Laurent | Number = 1) -> "TorusFunction":
        return cls.from_terms(len(gamma), {tuple(gamma): coeff})

    @classmethod
    def const(cls, rank: int, coeff: Laurent | Number = 1) -> "TorusFunction":
        return cls.from_terms(rank, {(0,) * rank: coeff})

    def coerce(self, x) -> "TorusFunction":
        if isinstance(x, TorusFunction):
            if x.rank != self.rank:
                raise ValueError("rank mismatch")
            return x
        return TorusFunction.const(self.rank, Laurent.coerce(x))

    # views
    @property
    def terms(self) -> dict[Vec, Laurent]:
        acc: dict[Vec, dict[int, Fraction]] = defaultdict(dict)
        for (e, *g), x in self.t.items():
            acc[tuple(g)][e] = x
        return {g: Laurent(c) for g, c in acc.items()}

    def coefficient(self, gamma: Sequence[int]) -> Laurent:
        gamma = tuple(gamma)
        return Laurent({k[0]: x for k, x in self.t.items() if k[1:] == gamma})

    def support(self) -> list[Vec]:
        return sorted({k[1:] for k in self.t})

    def is_zero(self) -> bool:
        return not self.t

    def __bool__(self):
        return bool(self.t)

    # ring structure
    def __add__(self, other):
        if isinstance(other, RationalTorusFunction):
            return NotImplemented
        other = self.coerce(other)
        out = dict(self.t)
        for k, x in other.t.items():
            out[k] = out.get(k, 0) + x
        return TorusFunction(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return TorusFunction(self.rank, {k: -x for k, x in self.t.items()})

    def __sub__(self, other):
        if isinstance(other, RationalTorusFunction):
            return NotImplemented
        return self + (-self.coerce(other))

    def __rsub__(self, other):
        return self.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RationalTorusFunction):
            return NotImplemented
        other = self.coerce(other)
        out: dict[tuple, Fraction] = defaultdict(Fraction)
        for k1, x1 in self.t.items():
            for k2, x2 in other.t.items():
                out[tuple(a + b for a, b in zip(k1, k2))] += x1 * x2
        return TorusFunction(self.rank, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.t) != 1:
                raise DivisionError("only monomials are units")
            (k, x), = self.t.items()
            return TorusFunction(self.rank, {tuple(a * n for a in k): x ** n})
        out = TorusFunction.const(self.rank, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Laurent)):
            other = self.coerce(other)
        if not isinstance(other, TorusFunction):
            return NotImplemented
        return self.rank == other.rank and self.t == other.t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self.t.items())))
        return self._hash

    # transformations
    def map_exponents(self, f) -> "TorusFunction":
        """Apply gamma -> f(gamma) to every monomial (f must be injective)."""
        out: dict[tuple, Fraction] = defaultdict(Fraction)
        for (e, *g), x in self.t.items():
            out[(e, *f(tuple(g)))] += x
        return TorusFunction(self.rank, out)

    def map_terms(self, f) -> "TorusFunction":
        """Apply (vexp, gamma, coeff) -> (vexp', gamma', coeff') termwise and re-collect."""
        out: dict[tuple, Fraction] = defaultdict(Fraction)
        for (e, *g), x in self.t.items():
            e2, g2, x2 = f(e, tuple(g), x)
            out[(e2, *g2)] += x2
        return TorusFunction(self.rank, out)

    def shift(self, gamma: Sequence[int]) -> "TorusFunction":
        return self.map_exponents(lambda g: tuple(a + b for a, b in zip(g, gamma)))

    def specialize(self, v_value: Number) -> "TorusFunction":
        v_value = _frac(v_value)
        if v_value == 0:
            raise ZeroDivisionError("v = 0")
        out: dict[tuple, Fraction] = defaultdict(Fraction)
        for (e, *g), x in self.t.items():
            out[(0, *g)] += x * v_value ** e
        return TorusFunction(self.rank, out)

    def scalar_bar(self) -> "TorusFunction":
        return self.map_terms(lambda e, g, x: (-e, g, x))

    def leading(self) -> tuple[tuple, Fraction]:
        k = max(self.t, key=_lex_key)
        return k, self.t[k]

    def lowest(self) -> tuple[tuple, Fraction]:
        k = min(self.t, key=_lex_key)
        return k, self.t[k]

    def divide(self, other: "TorusFunction") -> "TorusFunction":
        """Exact quotient self / other; raises DivisionError if not exact.

        Multivariate division by leading terms in the lexicographic group order
        on (gamma, v-exponent).  An exact quotient has its Newton polytope equal
        to the difference of the two, so every quotient term lies in a known
        box; leaving the box proves inexactness and bounds the loop.
        """
        other = self.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero torus function")
        if self.is_zero():
            return TorusFunction(self.rank)
        if len(other.t) == 1:
            (k, x), = other.t.items()
            return TorusFunction(self.rank, {tuple(a - b for a, b in zip(k2, k)): y / x for k2, y in self.t.items()})
        n = self.rank + 1
        lo = [min(k[j] for k in self.t) - min(k[j] for k in other.t) for j in range(n)]
        hi = [max(k[j] for k in self.t) - max(k[j] for k in other.t) for j in range(n)]
        if any(a > b for a, b in zip(lo, hi)):
            raise DivisionError("inexact division")
        lk, lx = other.leading()
        rem = dict(self.t)
        quo: dict[tuple, Fraction] = {}
        while rem:
            k = max(rem, key=_lex_key)
            qk = tuple(a - b for a, b in zip(k, lk))
            if any(not (lo[j] <= qk[j] <= hi[j]) for j in range(n)):
                raise DivisionError("inexact division")
            qx = rem[k] / lx
            quo[qk] = qx
            for k2, y in other.t.items():
                kk = tuple(a + b for a, b in zip(qk, k2))
                val = rem.get(kk, 0) - qx * y
                if val:
                    rem[kk] = val
                else:
                    rem.pop(kk, None)
        return TorusFunction(self.rank, quo)

    def divides(self, other: "TorusFunction") -> bool:
        try:
            other.divide(self)
            return True
        except DivisionError:
            return False

    def normalized(self) -> tuple[Fraction, tuple, "TorusFunction"]:
        """Write self = c * monomial(k) * f with f having lowest term exactly 1."""
        k, x = self.lowest()
        f = TorusFunction(self.rank, {tuple(a - b for a, b in zip(k2, k)): y / x for k2, y in self.t.items()})
        return x, k, f

    def __str__(self):
        if not self.t:
            return "0"
        parts = []
        for g in sorted(self.terms, key=lambda g: (sum(g), g)):
            s = self.terms[g]
            mon = "H(" + ",".join(map(str, g)) + ")"
            if all(x == 0 for x in g):
                parts.append(f"({s})")
            else:
                parts.append(f"({s})*{mon}")
        return " + ".join(parts)

    def __repr__(self):
        return f"TorusFunction[{self.rank}]({self})"


def _lex_key(k: tuple) -> tuple:
    # gamma coordinates first, then the v-exponent
    return (*k[1:], k[0])


# ---------------------------------------------------------------------------
class RationalTorusFunction:
    """num / den with den given as a product of normalized factors.

    Factors are stored normalized (lowest term equal to 1) in a sorted tuple so
    that repeated denominators are recognised; numerators absorb units.
    """

    __slots__ = ("num", "factors")

    def __init__(self, num: TorusFunction, factors: Iterable[TorusFunction] = ()):
        fs = []
        for f in factors:
            c, k, nf = f.normalized()
            num = num * TorusFunction(num.rank, {tuple(-a for a in k): 1 / c})
            if len(nf.t) > 1:
                fs.append(nf)
        # cancel whatever divides exactly
        kept = []
        for f in fs:
            if not num.is_zero():
                try:
                    num = num.divide(f)
                    continue
                except DivisionError:
                    pass
            kept.append(f)
        if num.is_zero():
            kept = []
        self.num = num
        self.factors = tuple(sorted(kept, key=_factor_key))

    @classmethod
    def coerce(cls, x, rank: int) -> "RationalTorusFunction":
        if isinstance(x, RationalTorusFunction):
            return x
        if isinstance(x, TorusFunction):
            return cls(x)
        return cls(TorusFunction.const(rank, Laurent.coerce(x)))

    @property
    def rank(self) -> int:
        return self.num.rank

    @property
    def den(self) -> TorusFunction:
        out = TorusFunction.const(self.rank, 1)
        for f in self.factors:
            out = out * f
        return out

    def _common(self, other: "RationalTorusFunction"):
        a, b = list(self.factors), list(other.factors)
        extra_a, rest_b = [], list(b)
        for f in a:
            if f in rest_b:
                rest_b.remove(f)
            else:
                extra_a.append(f)
        # lcm factors = a + rest_b ; self needs rest_b, other needs extra_a
        na, nb = self.num, other.num
        for f in rest_b:
            na = na * f
        for f in extra_a:
            nb = nb * f
        return na, nb, a + rest_b

    def __add__(self, other):
        other = RationalTorusFunction.coerce(other, self.rank)
        na, nb, fs = self._common(other)
        return RationalTorusFunction(na + nb, fs)

    __radd__ = __add__

    def __neg__(self):
        return RationalTorusFunction(-self.num, self.factors)

    def __sub__(self, other):
        return self + (-RationalTorusFunction.coerce(other, self.rank))

    def __rsub__(self, other):
        return RationalTorusFunction.coerce(other, self.rank) - self

    def __mul__(self, other):
        other = RationalTorusFunction.coerce(other, self.rank)
        return RationalTorusFunction(self.num * other.num, self.factors + other.factors)

    __rmul__ = __mul__

    def inverse(self) -> "RationalTorusFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalTorusFunction(self.den, [self.num])

    def __truediv__(self, other):
        other = RationalTorusFunction.coerce(other, self.rank)
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, RationalTorusFunction):
            try:
                other = RationalTorusFunction.coerce(other, self.rank)
            except TypeError:
                return NotImplemented
        na, nb, _ = self._common(other)
        return na == nb

    __hash__ = None  # equality is by cross-multiplication

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.factors

    def as_polynomial(self) -> TorusFunction:
        if self.factors:
            raise DivisionError("not a Laurent polynomial")
        return self.num

    def map_exponents(self, f) -> "RationalTorusFunction":
        return RationalTorusFunction(self.num.map_exponents(f), [g.map_exponents(f) for g in self.factors])

    def specialize(self, v_value: Number) -> "RationalTorusFunction":
        dens = [g.specialize(v_value) for g in self.factors]
        if any(d.is_zero() for d in dens):
            raise ZeroDivisionError("denominator vanishes at this value of v")
        return RationalTorusFunction(self.num.specialize(v_value), dens)

    def __str__(self):
        if not self.factors:
            return str(self.num)
        return f"[{self.num}] / " + "".join(f"[{f}]" for f in self.factors)

    def __repr__(self):
        return f"RationalTorusFunction({self})"


def _factor_key(f: TorusFunction):
    return sorted((_lex_key(k), x) for k, x in f.t.items())


# ---------------------------------------------------------------------------
def height(gamma: Sequence[int]) -> int:
    return sum(gamma)


def cone_points(apex: Sequence[int], depth: int) -> list[Vec]:
    """All gamma in apex + Gamma^+ with height(gamma) <= depth."""
    budget = depth - height(apex)
    if budget < 0:
        return []
    out = []
    r = len(apex)

    def rec(i, left, acc):
        if i == r:
            out.append(tuple(a + b for a, b in zip(apex, acc)))
            return
        for n in range(left + 1):
            rec(i + 1, left - n, acc + (n,))

    rec(0, budget, ())
    return out


class ConeSeries:
    """sum_gamma a_gamma H_gamma, supported in the union of apex + Gamma^+.

    ``depth`` is an absolute height bound N: every coefficient with
    height(gamma) <= N is exact, and nothing beyond N is stored.
    ``depth is None`` means the series is finite and fully known.
    """

    __slots__ = ("rank", "entries", "apexes", "depth")

    def __init__(self, rank: int, entries: Mapping[Sequence[int], Laurent | Number],
                 apexes: Iterable[Sequence[int]], depth: int | None):
        self.rank = rank
        self.apexes = sorted({tuple(a) for a in apexes})
        self.depth = depth
        self.entries: dict[Vec, Laurent] = {}
        for g, x in entries.items():
            x = Laurent.coerce(x)
            if x.is_zero():
                continue
            g = tuple(g)
            if depth is not None and height(g) > depth:
                continue
            if not any(all(a <= b for a, b in zip(ap, g)) for ap in self.apexes):
                raise ValueError(f"entry {g} outside the declared cones {self.apexes}")
            self.entries[g] = x

    @classmethod
    def finite(cls, tf: TorusFunction) -> "ConeSeries":
        terms = tf.terms
        if not terms:
            return cls(tf.rank, {}, [], None)
        return cls(tf.rank, terms, [_meet(terms)], None)

    @classmethod
    def one(cls, rank: int) -> "ConeSeries":
        return cls(rank, {(0,) * rank: 1}, [(0,) * rank], None)

    def is_finite(self) -> bool:
        return self.depth is None

    def coefficient(self, gamma: Sequence[int]) -> Laurent:
        gamma = tuple(gamma)
        if self.depth is not None and height(gamma) > self.depth:
            raise ValueError(f"coefficient at height {height(gamma)} beyond certified depth {self.depth}")
        return self.entries.get(gamma, Laurent())

    def min_apex_height(self) -> int:
        return min((height(a) for a in self.apexes), default=0)

    def truncate(self, depth: int) -> "ConeSeries":
        if self.depth is not None and depth > self.depth:
            raise ValueError("cannot raise the depth of a truncated series")
        return ConeSeries(self.rank, self.entries, self.apexes, depth)

    def __add__(self, other: "ConeSeries") -> "ConeSeries":
        depth = _min_depth(self.depth, other.depth)
        out: dict[Vec, Laurent] = dict(self.entries)
        for g, x in other.entries.items():
            out[g] = out.get(g, Laurent()) + x
        return ConeSeries(self.rank, out, self.apexes + other.apexes, depth)

    def __neg__(self):
        return ConeSeries(self.rank, {g: -x for g, x in self.entries.items()}, self.apexes, self.depth)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Laurent | Number) -> "ConeSeries":
        c = Laurent.coerce(c)
        return ConeSeries(self.rank, {g: c * x for g, x in self.entries.items()}, self.apexes, self.depth)

    def shift(self, gamma: Sequence[int]) -> "ConeSeries":
        sh = lambda g: tuple(a + b for a, b in zip(g, gamma))
        depth = None if self.depth is None else self.depth + height(gamma)
        return ConeSeries(self.rank, {sh(g): x for g, x in self.entries.items()},
                          [sh(a) for a in self.apexes], depth)

    def __mul__(self, other: "ConeSeries") -> "ConeSeries":
        # a coefficient at height h uses a-entries up to h - min height of b's cone
        da = None if self.depth is None else self.depth + other.min_apex_height()
        db = None if other.depth is None else other.depth + self.min_apex_height()
        depth = _min_depth(da, db)
        out: dict[Vec, Laurent] = defaultdict(Laurent)
        for g1, x1 in self.entries.items():
            for g2, x2 in other.entries.items():
                g = tuple(a + b for a, b in zip(g1, g2))
                if depth is None or height(g) <= depth:
                    out[g] = out[g] + x1 * x2
        apexes = [tuple(a + b for a, b in zip(p, r)) for p in self.apexes for r in other.apexes]
        return ConeSeries(self.rank, out, apexes, depth)

    def agrees_with(self, other: "ConeSeries", depth: int | None = None) -> bool:
        """Equality on the region both certificates cover (optionally capped)."""
        d = _min_depth(self.depth, other.depth)
        d = _min_depth(d, depth)
        keys = set(self.entries) | set(other.entries)
        for g in keys:
            if d is not None and height(g) > d:
                continue
            if self.entries.get(g, Laurent()) != other.entries.get(g, Laurent()):
                return False
        return True

    def first_difference(self, other: "ConeSeries", depth: int | None = None):
        d = _min_depth(_min_depth(self.depth, other.depth), depth)
        for g in sorted(set(self.entries) | set(other.entries), key=lambda g: (height(g), g)):
            if d is not None and height(g) > d:
                continue
            a, b = self.entries.get(g, Laurent()), other.entries.get(g, Laurent())
            if a != b:
                return g, a, b
        return None

    def __repr__(self):
        return f"ConeSeries(depth={self.depth}, apexes={self.apexes}, {len(self.entries)} terms)"


def _meet(points: Iterable[Sequence[int]]) -> Vec:
    pts = list(points)
    return tuple(min(c) for c in zip(*pts))


def _min_depth(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def geometric_inverse(u: Laurent | Number, gamma: Sequence[int], depth: int) -> ConeSeries:
    """sum_{n>=0} u^n H_{n gamma}, certified to height ``depth``."""
    gamma = tuple(gamma)
    if not all(x >= 0 for x in gamma) or not any(gamma):
        raise ValueError(f"{gamma} is not a nonzero element of the positive cone")
    u = Laurent.coerce(u)
    r = len(gamma)
    entries = {}
    n, term = 0, Laurent.const(1)
    while height(gamma) * n <= depth:
        entries[tuple(n * g for g in gamma)] = term
        n += 1
        term = term * u
    return ConeSeries(r, entries, [(0,) * r], depth)


def dv_element(rd) -> TorusFunction:
    """prod over positive coroots of (v^2 - H_beta)."""
    out = TorusFunction.const(rd.rank, 1)
    for b in rd.positive_coroots:
        out = out * (TorusFunction.const(rd.rank, q) - TorusFunction.monomial(b))
    return out


def dq_element(rd, q_value: Number | None = None) -> TorusFunction:
    """The same product with v^2 read as q; optionally specialized at a rational q."""
    d = dv_element(rd)
    if q_value is None:
        return d
    q_value = _frac(q_value)
    out: dict[tuple, Fraction] = defaultdict(Fraction)
    for (e, *g), x in d.t.items():
        if e % 2:
            raise ValueError("odd power of v")
        out[(0, *g)] += x * q_value ** (e // 2)
    return TorusFunction(rd.rank, out)


class NotFound:
    """Sentinel returned by :func:`bezout_certificate` when no certificate exists in the box."""

    def __repr__(self):
        return "NotFound"

    def __bool__(self):
        return False


NOT_FOUND = NotFound()


def bezout_certificate(gens: Sequence[TorusFunction], degree_bound: int):
    """Find a_i with sum a_i * gens_i = 1, exponents of a_i in [-D, D]^rank.

    Coefficients of the generators must be v-free (specialize first).  The
    search is an exact linear solve over Q.
    """
    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    if not gens:
        raise ValueError("need at least one generator")
    r = gens[0].rank
    for g in gens:
        if any(k[0] != 0 for k in g.t):
            raise ValueError("generators must have constant coefficients; specialize v first")
    box = list(product(range(-degree_bound, degree_bound + 1), repeat=r))
    unknowns = [(i, m) for i in range(len(gens)) for m in box]
    rows: dict[Vec, dict[int, Fraction]] = defaultdict(dict)
    for col, (i, m) in enumerate(unknowns):
        for k, x in gens[i].t.items():
            mono = tuple(a + b for a, b in zip(m, k[1:]))
            rows[mono][col] = rows[mono].get(col, 0) + x
    zero = (0,) * r
    rows.setdefault(zero, {})
    monos = sorted(rows)
    ncols = len(unknowns)
    aug = [[QQ(0)] * (ncols + 1) for _ in monos]
    for ri, mono in enumerate(monos):
        for col, x in rows[mono].items():
            aug[ri][col] = QQ(x.numerator, x.denominator)
        aug[ri][ncols] = QQ(1) if mono == zero else QQ(0)
    M = DomainMatrix(aug, (len(monos), ncols + 1), QQ)
    R, pivots = M.rref()
    if ncols in pivots:
        return NOT_FOUND
    Rl = R.to_list()
    sol = [Fraction(0)] * ncols
    for ri, pc in enumerate(pivots):
        val = Rl[ri][ncols]
        sol[pc] = Fraction(int(val.numerator), int(val.denominator))
    coeffs = []
    for i in range(len(gens)):
        flat = {(0, *m): sol[col] for col, (j, m) in enumerate(unknowns) if j == i}
        coeffs.append(TorusFunction(r, flat))
    return coeffs
