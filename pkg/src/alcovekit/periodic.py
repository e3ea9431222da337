"""Alcoves, the periodic Hecke module and the operators theta_alpha.

Two representations of module elements are kept side by side:

* ``PeriodicElement``: alcove -> Laurent coefficient, possibly a truncated
  infinite sum carrying a depth certificate and a cone apex;
* ``ExactPeriodic``: the same module viewed as free over C[Gamma][v^+-1] with
  basis A_w = w A+ (w in W).  Coefficients are rational torus functions, so
  theta_alpha has a closed form and identities such as theta^2 = 1 are exact.

Affine generators carry the labels of ``hecke`` (0 = affine wall, i + 1 = s_i);
theta is indexed by the 0-based simple root index, as in ``spherical``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import sympy

from . import hecke
from .hecke import AffineWeylElement, base_point, generator
from .rootdata import RootDatum, WeylElement
from .scalars import Laurent, RationalTorusFunction, TorusFunction, u_hecke
from .spherical import DepthUnderflow

Vec = tuple[int, ...]


# ---------------------------------------------------------------------------
# alcoves


@dataclass(frozen=True)
class Alcove:
    """The alcove x A+ for an affine Weyl group element x."""

    element: AffineWeylElement

    @property
    def rd(self) -> RootDatum:
        return self.element.rd

    @property
    def kbeta(self) -> Vec:
        return self.element.kbeta

    @property
    def translation(self) -> Vec:
        return self.element.translation

    @property
    def finite_part(self) -> WeylElement:
        return self.element.finite_part

    @property
    def height(self) -> int:
        """<gamma, rho> for A = A_w + gamma; the truncation height."""
        return sum(self.element.translation)

    def interior_point(self) -> tuple[Fraction, ...]:
        return self.element.act(base_point(self.rd))

    def vertices(self) -> list[tuple[Fraction, ...]]:
        return [self.element.act(p) for p in base_vertices(self.rd)]

    def validate(self) -> None:
        y = self.interior_point()
        for beta, k in zip(self.rd.positive_roots, self.kbeta):
            if not k < self.rd.pair(y, beta) < k + 1:
                raise AssertionError("coordinates do not describe the alcove")

    def to_json(self) -> dict:
        return {"kbeta": list(self.kbeta), "word": list(self.element.reduced_word)}

    def __repr__(self) -> str:
        return f"Alcove{self.kbeta}"


@lru_cache(maxsize=None)
def base_vertices(rd: RootDatum) -> tuple[tuple[Fraction, ...], ...]:
    """Vertices of A+: the origin and omega_i^vee / c_i, theta = sum c_i alpha_i."""
    A = sympy.Matrix(rd.pairing)
    inv = A.inv()
    theta = rd.highest_root
    out = [tuple(Fraction(0) for _ in range(rd.rank))]
    for i in range(rd.rank):
        row = inv.row(i) / theta[i]
        out.append(tuple(Fraction(int(x.p), int(x.q)) for x in row))
    return tuple(out)


def base_alcove(rd: RootDatum) -> Alcove:
    return Alcove(hecke.identity(rd))


def alcove_from_word(rd: RootDatum, word: Iterable[int]) -> Alcove:
    return Alcove(hecke.from_word(rd, word))


def alcove_from_kbeta(rd: RootDatum, kbeta: Sequence[int]) -> Alcove:
    """Walk from A+ towards the region given by kbeta; fails if it is not an alcove."""
    target = tuple(kbeta)
    A = base_alcove(rd)

    def dist(B):
        return sum(abs(a - b) for a, b in zip(B.kbeta, target))

    while dist(A):
        for s in range(rd.rank + 1):
            B = alcove_act(A, generator(rd, s), "right")
            if dist(B) < dist(A):
                A = B
                break
        else:
            raise ValueError(f"{target} is not the coordinate vector of an alcove")
    return A


def alcove_from_json(rd: RootDatum, data: Mapping) -> Alcove:
    A = alcove_from_word(rd, data["word"])
    if list(A.kbeta) != list(data["kbeta"]):
        raise ValueError("alcove word and coordinates disagree")
    return A


def alcove_act(A: Alcove, g: AffineWeylElement, side: str = "left") -> Alcove:
    if side == "left":
        return Alcove(g * A.element)
    if side == "right":
        return Alcove(A.element * g)
    raise ValueError("side must be 'left' or 'right'")


def translate(A: Alcove, gamma: Sequence[int]) -> Alcove:
    return Alcove(hecke.translation(A.rd, gamma) * A.element)


def alcove_length(A: Alcove) -> int:
    """Signed count of hyperplanes between A+ and A (+1 for each crossing upwards)."""
    return sum(A.kbeta)


def lset(A: Alcove) -> frozenset[int]:
    """Generators s whose wall of A has A on its positive side."""
    out = set()
    for s in range(A.rd.rank + 1):
        B = alcove_act(A, generator(A.rd, s), "right")
        if sum(B.kbeta) < sum(A.kbeta):
            out.add(s)
    return frozenset(out)


def k_alpha(A: Alcove, i: int) -> int:
    return A.kbeta[A.rd.positive_roots.index(A.rd.simple_roots[i])]


def delta_A_coefficient(A: Alcove) -> Laurent:
    """(-v)^d(A)."""
    return Laurent.mono(alcove_length(A), (-1) ** (alcove_length(A) % 2))


def in_cone(A: Alcove, apex: Sequence[int]) -> bool:
    return all(all(y - a >= 0 for y, a in zip(p, apex)) for p in A.vertices())


# ---------------------------------------------------------------------------
# truncated elements


class PeriodicElement:
    """Sum of Laurent coefficients times alcoves.

    ``depth`` None means the sum is finite and exact; otherwise every alcove of
    height <= depth carries its true coefficient and higher ones were dropped.
    ``cone_apex`` promises that all (untruncated) terms lie in apex + positive cone.
    """

    __slots__ = ("rd", "terms", "depth", "cone_apex")

    def __init__(self, rd: RootDatum, terms: Mapping[Alcove, Laurent] | None = None,
                 depth: int | None = None, cone_apex: Vec | None = None):
        self.rd = rd
        self.depth = depth
        self.cone_apex = cone_apex
        self.terms: dict[Alcove, Laurent] = {}
        for A, c in (terms or {}).items():
            c = Laurent.coerce(c)
            if c.is_zero() or (depth is not None and A.height > depth):
                continue
            self.terms[A] = c
        if cone_apex is not None:
            bad = [A for A in self.terms if not in_cone(A, cone_apex)]
            if bad:
                raise AssertionError(f"{bad[0]} escapes the cone at {cone_apex}")

    @classmethod
    def single(cls, A: Alcove, coeff=1) -> "PeriodicElement":
        return cls(A.rd, {A: Laurent.coerce(coeff)})

    @property
    def is_finite(self) -> bool:
        return self.depth is None

    def coefficient(self, A: Alcove) -> Laurent:
        if self.depth is not None and A.height > self.depth:
            raise DepthUnderflow(f"height {A.height} beyond certified depth {self.depth}")
        return self.terms.get(A, Laurent())

    def __add__(self, other: "PeriodicElement") -> "PeriodicElement":
        out = dict(self.terms)
        for A, c in other.terms.items():
            out[A] = out.get(A, Laurent()) + c
        return PeriodicElement(self.rd, out, _min_depth(self.depth, other.depth),
                               _meet_apex(self.cone_apex, other.cone_apex))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PeriodicElement":
        c = Laurent.coerce(c)
        return PeriodicElement(self.rd, {A: c * x for A, x in self.terms.items()}, self.depth, self.cone_apex)

    def truncate(self, depth: int) -> "PeriodicElement":
        return PeriodicElement(self.rd, self.terms, _min_depth(self.depth, depth), self.cone_apex)

    def agrees_with(self, other: "PeriodicElement", depth: int | None = None) -> bool:
        d = _min_depth(_min_depth(self.depth, other.depth), depth)
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(A, Laurent()) == other.terms.get(A, Laurent())
                   for A in keys if d is None or A.height <= d)

    def specialize(self, v_value=1) -> dict[Alcove, Fraction]:
        out = {}
        for A, c in self.terms.items():
            x = c.specialize(v_value)
            if x:
                out[A] = x
        return out

    def to_json(self) -> dict:
        return {
            "terms": [{"alcove": A.to_json(), "coeff": str(c)} for A, c in
                      sorted(self.terms.items(), key=lambda t: (t[0].height, t[0].kbeta))],
            "depth": self.depth,
            "cone_apex": list(self.cone_apex) if self.cone_apex is not None else None,
        }


def _min_depth(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _meet_apex(a, b):
    if a is None or b is None:
        return None
    return tuple(min(x, y) for x, y in zip(a, b))


def _apex_of(alcoves: Iterable[Alcove]) -> Vec | None:
    apex = None
    for A in alcoves:
        for p in A.vertices():
            low = tuple(int(sympy.floor(x)) for x in p)
            apex = low if apex is None else tuple(min(a, b) for a, b in zip(apex, low))
    return apex


def t_act(s: int, m: PeriodicElement, branch: Laurent = u_hecke) -> PeriodicElement:
    """T_s A = A s, plus (v - v^-1) A when s lies in L(A).

    ``branch`` replaces the coefficient v - v^-1; it exists only so that
    negative controls can break the action on purpose.
    """
    rd = m.rd
    g = generator(rd, s)
    out: dict[Alcove, Laurent] = {}
    for A, c in m.terms.items():
        B = alcove_act(A, g, "right")
        out[B] = out.get(B, Laurent()) + c
        if s in lset(A):
            out[A] = out.get(A, Laurent()) + c * branch
    depth = m.depth
    apex = m.cone_apex
    if depth is not None:
        depth -= max(sum(c) for c in rd.positive_coroots)
    if apex is not None:
        apex = tuple(a - max(abs(x) for x in c) for a, c in zip(apex, zip(*rd.positive_coroots)))
    return PeriodicElement(rd, out, depth, apex)


def hecke_act(h: hecke.HeckeElement, m: PeriodicElement) -> PeriodicElement:
    out = PeriodicElement(m.rd, {}, m.depth, m.cone_apex)
    for x, c in h.terms.items():
        img = m
        for s in reversed(x.reduced_word):
            img = t_act(s, img)
        out = out + img.scale(c)
    return out


def theta_coefficient(n: int) -> Laurent:
    """Coefficient of A^n in theta_alpha(A): v^-1 for n = 0, else (-1)^(n+1)(v^(1-n) - v^(-1-n))."""
    if n == 0:
        return Laurent.mono(-1)
    sign = 1 if n % 2 else -1
    return Laurent({1 - n: sign, -1 - n: -sign})


def _step(A: Alcove, i: int) -> Alcove:
    """Reflect A across the alpha_i-hyperplane just above it."""
    rd = A.rd
    k = k_alpha(A, i) + 1
    alpha_vee = rd.coroot_of(rd.simple_roots[i])
    # reflection in <x, alpha> = k is t_{k alpha_vee} s_alpha
    refl = AffineWeylElement(tuple(k * a for a in alpha_vee), rd.simple(i), rd)
    B = alcove_act(A, refl, "left")
    if k_alpha(B, i) != k:
        raise AssertionError("strip march did not cross exactly one alpha-hyperplane")
    return B


def strip_ray(A: Alcove, i: int, count: int) -> list[Alcove]:
    """A^0 = s_alpha A, then A^1, ..., A^count by successive upward alpha-reflections."""
    cur = alcove_act(A, hecke.finite(A.rd, A.rd.simple(i)), "left")
    out = [cur]
    for _ in range(count):
        cur = _step(cur, i)
        out.append(cur)
    return out


def theta_simple(i: int, m: PeriodicElement, depth: int) -> PeriodicElement:
    """theta_alpha_i on a finite element by marching along the alpha-strip, truncated at ``depth``."""
    if not m.is_finite:
        raise DepthUnderflow("the alcove-level theta needs a finite input; use ExactPeriodic")
    out: dict[Alcove, Laurent] = {}
    heads = []
    for A, c in m.terms.items():
        ray = strip_ray(A, i, 1)
        heads.extend(ray)
        cur, n = ray[0], 0
        while n < 2 or cur.height <= depth:
            out[cur] = out.get(cur, Laurent()) + c * theta_coefficient(n)
            cur, n = _step(cur, i), n + 1
    return PeriodicElement(m.rd, out, depth, _apex_of(heads))


# ---------------------------------------------------------------------------
# exact form


class ExactPeriodic:
    """sum_w F_w A_w with F_w rational functions on the torus (coefficients in Q(v))."""

    __slots__ = ("rd", "coeffs")

    def __init__(self, rd: RootDatum, coeffs: Mapping[WeylElement, RationalTorusFunction] | None = None):
        self.rd = rd
        self.coeffs: dict[WeylElement, RationalTorusFunction] = {}
        for w, f in (coeffs or {}).items():
            f = RationalTorusFunction.coerce(f, rd.rank)
            if not f.is_zero():
                self.coeffs[w] = f

    @classmethod
    def from_element(cls, m: PeriodicElement) -> "ExactPeriodic":
        if not m.is_finite:
            raise ValueError("only finite elements have an exact form")
        acc: dict[WeylElement, TorusFunction] = {}
        for A, c in m.terms.items():
            w = A.finite_part
            acc[w] = acc.get(w, TorusFunction.const(m.rd.rank, 0)) + TorusFunction.monomial(A.translation, c)
        return cls(m.rd, {w: RationalTorusFunction(f) for w, f in acc.items()})

    @classmethod
    def single(cls, A: Alcove) -> "ExactPeriodic":
        return cls.from_element(PeriodicElement.single(A))

    def __add__(self, other: "ExactPeriodic") -> "ExactPeriodic":
        out = dict(self.coeffs)
        for w, f in other.coeffs.items():
            out[w] = out[w] + f if w in out else f
        return ExactPeriodic(self.rd, out)

    def __neg__(self):
        return ExactPeriodic(self.rd, {w: -f for w, f in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ExactPeriodic":
        if isinstance(c, (Laurent, int, Fraction)):
            c = TorusFunction.const(self.rd.rank, c)
        c = RationalTorusFunction.coerce(c, self.rd.rank)
        return ExactPeriodic(self.rd, {w: f * c for w, f in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, ExactPeriodic):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        zero = RationalTorusFunction.coerce(0, self.rd.rank)
        return all(self.coeffs.get(w, zero) == other.coeffs.get(w, zero) for w in keys)

    __hash__ = None

    def is_finite(self) -> bool:
        return all(f.is_polynomial() for f in self.coeffs.values())

    def to_element(self) -> PeriodicElement:
        if not self.is_finite():
            raise ValueError("element has denominators; use expand()")
        out = {}
        for w, f in self.coeffs.items():
            for g, c in f.num.terms.items():
                out[Alcove(AffineWeylElement(g, w, self.rd))] = c
        return PeriodicElement(self.rd, out)

    def expand(self, depth: int) -> PeriodicElement:
        """Cone expansion of every denominator, keeping alcoves of height <= depth."""
        rd = self.rd
        out: dict[Alcove, Laurent] = {}
        heads = []
        for w, f in self.coeffs.items():
            series = _expand_rational(f, depth)
            for g, c in series.terms.items():
                if sum(g) <= depth:
                    out[Alcove(AffineWeylElement(g, w, rd))] = c
            heads.extend(Alcove(AffineWeylElement(g, w, rd)) for g in f.num.support())
        return PeriodicElement(rd, out, depth, _apex_of(heads))

    def specialize(self, v_value=1) -> "ExactPeriodic":
        return ExactPeriodic(self.rd, {w: f.specialize(v_value) for w, f in self.coeffs.items()})


def _expand_rational(f: RationalTorusFunction, depth: int) -> TorusFunction:
    rank = f.rank
    num = f.num
    low = min((sum(g) for g in num.support()), default=0)
    budget = depth - low
    out = num
    for fac in f.factors:
        lowest_key, _ = fac.lowest()
        if any(k != 0 for k in lowest_key):
            raise AssertionError("factor not normalized")
        g = TorusFunction.const(rank, 1) - fac
        if any(sum(k[1:]) <= 0 or min(k[1:]) < 0 for k in g.t):
            raise DepthUnderflow(f"factor {fac} has no expansion in the positive cone")
        step = min(sum(k[1:]) for k in g.t)
        inv = TorusFunction.const(rank, 1)
        power = TorusFunction.const(rank, 1)
        for _ in range(budget // step):
            power = _trunc(power * g, budget)
            inv = inv + power
        out = _trunc(out * inv, depth)
    return _trunc(out, depth)


def _trunc(f: TorusFunction, depth: int) -> TorusFunction:
    return TorusFunction(f.rank, {k: x for k, x in f.t.items() if sum(k[1:]) <= depth})


def _mono(rank: int, gamma: Sequence[int], coeff=1) -> TorusFunction:
    return TorusFunction.monomial(tuple(gamma), coeff)


def exact_t_act(s: int, m: ExactPeriodic) -> ExactPeriodic:
    rd = m.rd
    out: dict[WeylElement, RationalTorusFunction] = {}
    for w, f in m.coeffs.items():
        A = Alcove(hecke.finite(rd, w))
        B = alcove_act(A, generator(rd, s), "right")
        terms = [(B.finite_part, f * RationalTorusFunction(_mono(rd.rank, B.translation)))]
        if s in lset(A):
            terms.append((w, f * RationalTorusFunction(TorusFunction.const(rd.rank, u_hecke))))
        for w2, g in terms:
            out[w2] = out[w2] + g if w2 in out else g
    return ExactPeriodic(rd, out)


def exact_hecke_act(h: hecke.HeckeElement, m: ExactPeriodic) -> ExactPeriodic:
    out = ExactPeriodic(m.rd)
    for x, c in h.terms.items():
        img = m
        for s in reversed(x.reduced_word):
            img = exact_t_act(s, img)
        out = out + img.scale(c)
    return out


def translate_exact(m: ExactPeriodic, gamma: Sequence[int]) -> ExactPeriodic:
    return m.scale(RationalTorusFunction(_mono(m.rd.rank, gamma)))


def _twist(f: RationalTorusFunction, w: WeylElement) -> RationalTorusFunction:
    return f.map_exponents(w.act)


def exact_theta_simple(i: int, m: ExactPeriodic) -> ExactPeriodic:
    """Closed form: theta(A) = v^-1 (1-e)/(1-v^-2 e) s_alpha A + (v-v^-1) v^-1 e^(-k) A/(1-v^-2 e),

    e the translation by alpha_vee, k = k_alpha(A); theta(F A) = s_alpha(F) theta(A).
    """
    rd = m.rd
    r = rd.rank
    s = rd.simple(i)
    alpha_vee = rd.coroot_of(rd.simple_roots[i])
    e = _mono(r, alpha_vee)
    one = TorusFunction.const(r, 1)
    den = one - e * Laurent.mono(-2)
    c1 = RationalTorusFunction((one - e) * Laurent.mono(-1), [den])
    out: dict[WeylElement, RationalTorusFunction] = {}
    for w, f in m.coeffs.items():
        A = Alcove(hecke.finite(rd, w))
        k = k_alpha(A, i)
        c2 = RationalTorusFunction(_mono(r, [-k * a for a in alpha_vee], u_hecke * Laurent.mono(-1)), [den])
        sf = _twist(f, s)
        for w2, g in ((rd.mul(s, w), sf * c1), (w, sf * c2)):
            out[w2] = out[w2] + g if w2 in out else g
    return ExactPeriodic(rd, out)


def exact_theta_w(w: WeylElement | Sequence[int], m: ExactPeriodic) -> ExactPeriodic:
    word = w.word if isinstance(w, WeylElement) else tuple(w)
    for i in reversed(word):
        m = exact_theta_simple(i, m)
    return m


def theta_w(w: WeylElement | Sequence[int], m: PeriodicElement, depth: int) -> PeriodicElement:
    """theta_w on a finite element, composed exactly and expanded to ``depth``."""
    if not m.is_finite:
        raise DepthUnderflow("theta_w needs a finite input")
    return exact_theta_w(w, ExactPeriodic.from_element(m)).expand(depth)


# ---------------------------------------------------------------------------
# bridge to the spherical sector (rank one)


def aggregate_to_spherical(m: PeriodicElement, model, v_mode: str = "sqrt_q",
                           levels: range | None = None) -> dict:
    """K-invariant projection of sum_A c_A(v) delta_A onto the delta_n basis, at finite q.

    ``delta_A`` is (-v)^d(A) times the indicator of the Iwahori orbit labelled by
    A; v is evaluated at sqrt(q) (``sqrt_q``) or 1/sqrt(q) (``inv_sqrt_q``), so
    the result has coefficients in Q(sqrt q) (``sl2oracle.QSqrt``).
    """
    from . import sl2oracle as so

    if m.rd.rank != 1:
        raise ValueError("aggregation is only available in rank one")
    if v_mode not in ("sqrt_q", "inv_sqrt_q"):
        raise ValueError("v_mode must be 'sqrt_q' or 'inv_sqrt_q'")
    rat, irr = finite_functions(m, model, v_mode)
    a, b = so.k_average(rat), so.k_average(irr)
    out = {}
    for n in set(a) | set(b):
        if levels is not None and n not in levels:
            continue
        out[n] = so.QSqrt(a.get(n, Fraction(0)), b.get(n, Fraction(0)), model.q)
    return out


def finite_functions(m: PeriodicElement, model, v_mode: str = "sqrt_q"):
    """sum_A c_A delta_A on the finite model, split as rational part + sqrt(q) * second part."""
    import numpy as np

    from . import sl2oracle as so

    z = np.zeros((model.N, model.N), dtype=np.int64)
    rat, irr = so.FiniteFunction(model, z, 1), so.FiniteFunction(model, z.copy(), 1)
    for A, c in m.terms.items():
        val = so.eval_laurent_sqrt(c * delta_A_coefficient(A), model.q, inverse=(v_mode == "inv_sqrt_q"))
        k = A.kbeta[0]
        if not -2 * model.M <= k < 2 * model.M:
            continue
        ind = so.alcove_indicator(k, model)
        if val.a:
            rat = rat + ind.scale(val.a)
        if val.b:
            irr = irr + ind.scale(val.b)
    return rat, irr


def span_membership(x: PeriodicElement, spanning: Sequence[PeriodicElement], depth: int):
    """Is x, truncated at ``depth``, in the Q(v)-span of the truncated spanning vectors?

    Returns (verdict, coefficients or None).  Exact linear algebra over Q(v).
    """
    from sympy.polys.matrices import DomainMatrix

    sv = sympy.Symbol("v")
    K = sympy.QQ.frac_field(sv)
    alcoves = sorted({A for y in [x, *spanning] for A in y.terms if A.height <= depth},
                     key=lambda A: (A.height, A.kbeta))
    if not alcoves:
        return True, [K.zero] * len(spanning)

    def col(y):
        return [K.from_sympy(_laurent_expr(y.terms.get(A, Laurent()), sv)) for A in alcoves]

    cols = [col(y) for y in spanning]
    rows = [list(r) for r in zip(*cols)] if cols else [[] for _ in alcoves]
    target = col(x)
    M = DomainMatrix([r + [t] for r, t in zip(rows, target)], (len(alcoves), len(spanning) + 1), K)
    rref, pivots = M.rref()
    if len(spanning) in pivots:
        return False, None
    sol = [K.zero] * len(spanning)
    dense = rref.to_Matrix()
    for r, p in enumerate(pivots):
        sol[p] = dense[r, len(spanning)]
    return True, sol


def _laurent_expr(c: Laurent, sv):
    return sum((sympy.Rational(x.numerator, x.denominator) * sv ** e for e, x in c.c.items()), sympy.Integer(0))


def phi_on_levels(rd: RootDatum, coeffs: Mapping[int, object], depth: int) -> dict:
    """Formal Phi_alpha applied to sum a_n delta_n with a_n in Q(sqrt q), v read as sqrt(q)."""
    from . import sl2oracle as so
    from .spherical import SphericalElement, phi_simple

    q = next(iter(coeffs.values())).q if coeffs else 2
    out: dict[int, so.QSqrt] = {}
    for part, unit in (("a", so.QSqrt(Fraction(1), Fraction(0), q)), ("b", so.QSqrt(Fraction(0), Fraction(1), q))):
        terms = {(n,): getattr(c, part) for n, c in coeffs.items() if getattr(c, part)}
        if not terms:
            continue
        img = phi_simple(rd, 0, SphericalElement.from_terms(rd, terms), depth)
        for (n,), c in img.series.entries.items():
            val = so.eval_laurent_sqrt(c, q) * unit
            out[n] = out[n] + val if n in out else val
    return out


def check_intertwining(m: PeriodicElement, model, v_mode: str = "sqrt_q",
                       levels: range = range(-2, 2), depth: int = 8) -> tuple[bool, dict]:
    """aggregate(theta_alpha m) against Phi_alpha(aggregate m) on the given levels (rank one)."""
    from . import sl2oracle as so

    lhs = aggregate_to_spherical(theta_w([0], m, depth), model, v_mode)
    rhs = phi_on_levels(m.rd, aggregate_to_spherical(m, model, v_mode), depth)
    bad = []
    for n in levels:
        zero = so.QSqrt(Fraction(0), Fraction(0), model.q)
        a, b = lhs.get(n, zero), rhs.get(n, zero)
        if a != b:
            bad.append({"level": n, "theta_side": f"{a.a}+{a.b}*sqrt(q)", "phi_side": f"{b.a}+{b.b}*sqrt(q)"})
    return not bad, {"v_mode": v_mode, "q": model.q, "levels": [levels.start, levels.stop - 1], "mismatches": bad}
