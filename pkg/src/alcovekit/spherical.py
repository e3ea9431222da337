"""The K-invariant sector: delta/c bases, shifts, intertwiners, pairing.

An element is stored in the delta basis as a :class:`ConeSeries`.  Whenever
possible it also keeps an exact generating form

    f = R(H) * prod_{beta in F} (1 - q^-1 H_beta)^-1 (delta_0)

with R a TorusFunction and F a multiset of coroots.  Intertwiners act on the
exact form; the series is re-expanded to the requested depth.  This avoids the
q-adically convergent infinite sums a coefficientwise definition would need.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .rootdata import RootDatum, WeylElement, rho_pair
from .scalars import (ConeSeries, DivisionError, Laurent, TorusFunction, cone_points,
                      geometric_inverse, height, q, qinv)

DEFAULT_DEPTH = 8


class DepthUnderflow(ValueError):
    """Requested result is not determined by the input's certificate."""


class NotInA(ValueError):
    """The pairing does not have finite support."""


def _neg(g):
    return tuple(-x for x in g)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _factor(rank: int, beta) -> TorusFunction:
    return TorusFunction.const(rank, 1) - TorusFunction.monomial(beta, qinv)


@dataclass(frozen=True)
class ExactForm:
    num: TorusFunction
    factors: tuple  # sorted tuple of coroot vectors

    @property
    def is_finite(self) -> bool:
        return not self.factors


def _reduce(num: TorusFunction, factors) -> ExactForm:
    kept = []
    for beta in sorted(factors):
        if not num.is_zero():
            try:
                num = num.divide(_factor(num.rank, beta))
                continue
            except DivisionError:
                pass
        kept.append(beta)
    if num.is_zero():
        kept = []
    return ExactForm(num, tuple(sorted(kept)))


def _expand(form: ExactForm, depth: int) -> ConeSeries:
    rank = form.num.rank
    if any(not all(x >= 0 for x in b) for b in form.factors):
        raise DepthUnderflow("a factor with a non-positive coroot has no cone expansion")
    num = ConeSeries.finite(form.num)
    if form.is_finite:
        return num
    inner = depth - num.min_apex_height()
    out = ConeSeries.one(rank)
    for beta in form.factors:
        out = out * geometric_inverse(qinv, beta, inner)
    return (num * out).truncate(depth)


class SphericalElement:
    """A delta-basis series with optional exact form."""

    def __init__(self, rd: RootDatum, series: ConeSeries, exact: ExactForm | None = None):
        self.rd = rd
        self.series = series
        self.exact = exact

    @classmethod
    def from_exact(cls, rd: RootDatum, form: ExactForm, depth: int | None = None) -> "SphericalElement":
        depth = DEFAULT_DEPTH if depth is None else depth
        return cls(rd, _expand(form, depth), form)

    @classmethod
    def from_terms(cls, rd: RootDatum, terms: Mapping[Sequence[int], Laurent | int]) -> "SphericalElement":
        tf = TorusFunction.from_terms(rd.rank, terms)
        return cls.from_exact(rd, ExactForm(tf, ()))

    @property
    def depth(self) -> int | None:
        return self.series.depth

    @property
    def is_finite(self) -> bool:
        return self.exact is not None and self.exact.is_finite

    def coefficient(self, gamma) -> Laurent:
        return self.series.coefficient(gamma)

    def exact_form(self) -> ExactForm:
        if self.exact is not None:
            return self.exact
        if self.series.is_finite():
            return ExactForm(TorusFunction.from_terms(self.rd.rank, self.series.entries), ())
        raise DepthUnderflow("element carries only a truncated series; no exact form to transform")

    def with_depth(self, depth: int) -> "SphericalElement":
        return SphericalElement.from_exact(self.rd, self.exact_form(), depth)

    def __add__(self, other: "SphericalElement") -> "SphericalElement":
        exact = None
        if self.exact is not None and other.exact is not None:
            exact = _combine(self.exact, other.exact, 1)
        return SphericalElement(self.rd, self.series + other.series, exact)

    def __sub__(self, other: "SphericalElement") -> "SphericalElement":
        return self + other.scale(-1)

    def scale(self, c) -> "SphericalElement":
        c = Laurent.coerce(c)
        exact = None if self.exact is None else _reduce(self.exact.num * c, self.exact.factors)
        return SphericalElement(self.rd, self.series.scale(c), exact)

    def agrees_with(self, other: "SphericalElement", depth: int | None = None) -> bool:
        return self.series.agrees_with(other.series, depth)

    def exact_equal(self, other: "SphericalElement") -> bool:
        a, b = self.exact_form(), other.exact_form()
        fa, fb = Counter(a.factors), Counter(b.factors)
        common = fa | fb
        na, nb = a.num, b.num
        for beta, m in common.items():
            for _ in range(m - fa[beta]):
                na = na * _factor(self.rd.rank, beta)
            for _ in range(m - fb[beta]):
                nb = nb * _factor(self.rd.rank, beta)
        return na == nb

    def specialize(self, v_value) -> dict:
        return {g: x.specialize(v_value) for g, x in self.series.entries.items()}

    def to_json(self) -> dict:
        terms = [{"gamma": list(g), "coeff": str(x)}
                 for g, x in sorted(self.series.entries.items(), key=lambda t: (height(t[0]), t[0]))]
        return {"terms": terms, "cone_apexes": [list(a) for a in self.series.apexes], "depth": self.depth}

    def __repr__(self):
        return f"SphericalElement({self.rd.cartan_type}, {self.series!r})"


def _combine(a: ExactForm, b: ExactForm, sign: int) -> ExactForm:
    rank = a.num.rank
    fa, fb = Counter(a.factors), Counter(b.factors)
    common = fa | fb
    na, nb = a.num, b.num
    for beta, m in common.items():
        for _ in range(m - fa[beta]):
            na = na * _factor(rank, beta)
        for _ in range(m - fb[beta]):
            nb = nb * _factor(rank, beta)
    return _reduce(na + nb * sign, list(common.elements()))


# ---------------------------------------------------------------------------
# q-Kostant partition function


@lru_cache(maxsize=None)
def _kostant(cartan_type: str, coroots: tuple, k: int, gamma: tuple) -> Laurent:
    if not all(x >= 0 for x in gamma):
        return Laurent()
    if k == 0:
        return Laurent.const(1) if not any(gamma) else Laurent()
    beta = coroots[k - 1]
    total, n, g = Laurent(), 0, gamma
    while all(x >= 0 for x in g):
        total = total + qinv ** n * _kostant(cartan_type, coroots, k - 1, g)
        n += 1
        g = tuple(a - b for a, b in zip(g, beta))
    return total


def kostant_q(rd: RootDatum, gamma: Sequence[int]) -> Laurent:
    """sum over multisets P of positive coroots with sum gamma of q^-|P|."""
    cor = tuple(rd.positive_coroots)
    return _kostant(rd.cartan_type, cor, len(cor), tuple(gamma))


def kostant_table(rd: RootDatum, depth: int) -> list[tuple[tuple, Laurent]]:
    rows = [(g, kostant_q(rd, g)) for g in cone_points((0,) * rd.rank, depth)]
    return sorted(rows, key=lambda r: (height(r[0]), tuple(-x for x in r[0])))


# ---------------------------------------------------------------------------
# basic elements


def delta(rd: RootDatum, gamma: Sequence[int]) -> SphericalElement:
    return SphericalElement.from_exact(rd, ExactForm(TorusFunction.monomial(tuple(gamma)), ()))


def c_element(rd: RootDatum, mu: Sequence[int], depth: int = DEFAULT_DEPTH) -> SphericalElement:
    """c_mu = sum_{gamma >= 0} K(gamma) delta_{mu+gamma}; series from the partition function."""
    mu = tuple(mu)
    entries = {_add(mu, g): kostant_q(rd, g) for g in cone_points((0,) * rd.rank, depth - height(mu))}
    series = ConeSeries(rd.rank, entries, [mu], depth)
    exact = ExactForm(TorusFunction.monomial(mu), tuple(sorted(rd.positive_coroots)))
    return SphericalElement(rd, series, exact)


c = c_element


def shift(rd: RootDatum, gamma: Sequence[int], f: SphericalElement, normalized: bool = True) -> SphericalElement:
    """H_gamma (delta_mu -> delta_{mu+gamma}) or, unnormalized, q^{-<gamma,rho>} H_gamma."""
    gamma = tuple(gamma)
    scale = Laurent.const(1) if normalized else qinv ** rho_pair(rd, gamma)
    series = f.series.shift(gamma).scale(scale)
    exact = None
    if f.exact is not None:
        exact = ExactForm(f.exact.num.shift(gamma) * scale, f.exact.factors)
    return SphericalElement(rd, series, exact)


# ---------------------------------------------------------------------------
# intertwiners


def phi_simple(rd: RootDatum, i: int, f: SphericalElement, depth: int | None = None) -> SphericalElement:
    """Phi_{alpha_i}: H_gamma delta_0 -> H_{s_i gamma} (1 - q^-1 H_{-a}) / (1 - q^-1 H_a) delta_0."""
    form = f.exact_form()
    s = rd.simple(i)
    alpha = rd.simple_coroots[i]
    num = form.num.map_exponents(s.act) * _factor(rd.rank, _neg(alpha))
    factors = [s.act(b) for b in form.factors] + [alpha]
    out = _reduce(num, factors)
    bad = [b for b in out.factors if not all(x >= 0 for x in b)]
    if bad:
        raise DepthUnderflow(f"image is not cone-supported (uncancelled factors {bad})")
    if depth is None:
        depth = f.depth if f.depth is not None else DEFAULT_DEPTH
    return SphericalElement.from_exact(rd, out, depth)


def phi_w(rd: RootDatum, w: WeylElement | Sequence[int], f: SphericalElement,
          depth: int | None = None) -> SphericalElement:
    word = w.word if isinstance(w, WeylElement) else tuple(w)
    out = f
    for i in reversed(word):
        out = phi_simple(rd, i, out, depth)
    if not word and depth is not None and f.exact is not None:
        out = f.with_depth(depth)
    return out


# ---------------------------------------------------------------------------
# delta <-> c


def delta_in_c_basis(rd: RootDatum, mu: Sequence[int], scale_exponent: int | None = None) -> dict:
    """Coefficients {mu': a} with delta_mu = sum a * c_mu'.

    Expands q^e * prod_{beta>0} (q - H_beta) applied to c_mu.  The default
    e = -|positive coroots| is the value for which this reproduces delta_mu;
    ``scale_exponent`` overrides it (used to show that other values fail).
    """
    n = len(rd.positive_coroots)
    e = -n if scale_exponent is None else scale_exponent
    P = TorusFunction.const(rd.rank, 1)
    for b in rd.positive_coroots:
        P = P * (TorusFunction.const(rd.rank, q) - TorusFunction.monomial(b))
    mu = tuple(mu)
    return {_add(mu, g): x * q ** e for g, x in sorted(P.terms.items())}


def c_combination(rd: RootDatum, combo: Mapping, depth: int = DEFAULT_DEPTH) -> SphericalElement:
    out = None
    for mu, a in sorted(combo.items()):
        term = c_element(rd, mu, depth).scale(a)
        out = term if out is None else out + term
    return out if out is not None else SphericalElement.from_terms(rd, {})


# ---------------------------------------------------------------------------
# pairing and the dotted action


def vol_x0(rd: RootDatum) -> Laurent:
    """vol(X_0), fixed by sum_{gamma >= 0} q^{-2<gamma,rho>} vol(X_0) = 1."""
    return (Laurent.const(1) - qinv ** 2) ** rd.rank


def pairing(rd: RootDatum, f: SphericalElement, g: SphericalElement) -> TorusFunction:
    """<f, g> = vol(X_0) * sum f_gamma g_mu H_{gamma - mu}; g must be finite."""
    if not g.series.is_finite():
        raise ValueError("second argument must be finitely supported")
    gstar = TorusFunction.from_terms(rd.rank, {_neg(m): x for m, x in g.series.entries.items()})
    vol = TorusFunction.const(rd.rank, vol_x0(rd))
    if gstar.is_zero():
        return TorusFunction(rd.rank)
    form = f.exact_form()
    num = form.num * gstar
    for beta in form.factors:
        try:
            num = num.divide(_factor(rd.rank, beta))
        except DivisionError:
            raise NotInA("pairing has infinite support (second argument not in the W-stable part)") from None
    return vol * num


def pairing_series(rd: RootDatum, f: SphericalElement, g: SphericalElement) -> ConeSeries:
    """Coefficientwise pairing on the certified window (no exact form needed)."""
    out = None
    for mu, y in g.series.entries.items():
        term = f.series.shift(_neg(mu)).scale(y * vol_x0(rd))
        out = term if out is None else out + term
    return out if out is not None else ConeSeries(rd.rank, {}, [], None)


def dotted_action(rd: RootDatum, w: WeylElement, a: TorusFunction) -> TorusFunction:
    """H_gamma -> q^{<w gamma, w rho - rho>} H_{w gamma}."""
    rho2 = [0] * rd.rank  # 2*rho in root coordinates
    for b in rd.positive_roots:
        rho2 = [x + y for x, y in zip(rho2, b)]
    wrho2 = rd.act_root(w, rho2)
    diff2 = tuple(x - y for x, y in zip(wrho2, rho2))

    def f(e, g, x):
        wg = w.act(g)
        p2 = rd.pair(wg, diff2)  # = 2 <w gamma, w rho - rho>
        assert p2 % 2 == 0
        return e + p2, wg, x  # q^{p2/2} = v^{p2}

    return a.map_terms(f)


# ---------------------------------------------------------------------------
# local pieces


def lP_operator(rd: RootDatum, f: SphericalElement) -> SphericalElement:
    P = TorusFunction.const(rd.rank, 1)
    for b in rd.positive_coroots:
        P = P * _factor(rd.rank, b)
    series = ConeSeries.finite(P) * f.series
    exact = None if f.exact is None else _reduce(f.exact.num * P, f.exact.factors)
    return SphericalElement(rd, series, exact)


def local_L_factor(rd: RootDatum, q_v, chi: Mapping[int, Fraction] | None = None, depth: int = DEFAULT_DEPTH):
    """prod_{beta>0} (1 - q_v^{<beta,rho> - 1} chi(beta))^-1.

    With a numeric assignment chi (simple index -> value) the result is an exact
    rational number; with chi=None it is the truncated series in H_beta.
    """
    q_v = Fraction(q_v)
    if chi is not None:
        out = Fraction(1)
        for b in rd.positive_coroots:
            val = Fraction(1)
            for i, n in enumerate(b):
                val *= Fraction(chi.get(i, 0)) ** n
            out /= 1 - q_v ** (rho_pair(rd, b) - 1) * val
        return out
    out = ConeSeries.one(rd.rank)
    for b in rd.positive_coroots:
        out = out * geometric_inverse(Laurent.const(q_v ** (rho_pair(rd, b) - 1)), b, depth)
    return out


def support_cone(rd: RootDatum, f: SphericalElement) -> tuple:
    if f.exact is not None and not f.exact.num.is_zero():
        return tuple(min(c) for c in zip(*f.exact.num.support()))
    pts = list(f.series.entries)
    if not pts:
        return (0,) * rd.rank
    return tuple(min(c) for c in zip(*pts))


def s0_element(rd: RootDatum, mu: Sequence[int]) -> SphericalElement:
    """H_mu prod_{beta>0} (1 - q^-1 H_{-beta}) delta_0 -- finite with finite W-images."""
    num = TorusFunction.monomial(tuple(mu))
    for b in rd.positive_coroots:
        num = num * _factor(rd.rank, _neg(b))
    return SphericalElement.from_exact(rd, ExactForm(num, ()))

