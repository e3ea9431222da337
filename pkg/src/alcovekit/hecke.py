"""Extended-free affine Weyl group Gamma x| W and its Iwahori-Hecke algebra.

Affine generators are labelled 0..r: 0 is the reflection in the wall
<x, theta> = 1 (theta the highest root) and i >= 1 is the finite simple
reflection s_i.  The quadratic relation is (T_s + v^-1)(T_s - v) = 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import floor
from typing import Iterable, Mapping, Sequence

from .rootdata import RootDatum, WeylElement
from .scalars import Laurent, u_hecke


@dataclass(frozen=True)
class AffineWeylElement:
    """x -> w(x) + translation, acting on coweights in coroot coordinates."""

    translation: tuple[int, ...]
    finite_part: WeylElement
    rd: RootDatum = field(compare=False, repr=False)

    # -- group structure -------------------------------------------------
    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        t = tuple(a + b for a, b in zip(self.translation, self.finite_part.act(other.translation)))
        return AffineWeylElement(t, self.rd.mul(self.finite_part, other.finite_part), self.rd)

    def inverse(self) -> "AffineWeylElement":
        winv = self.rd.inverse(self.finite_part)
        return AffineWeylElement(tuple(-a for a in winv.act(self.translation)), winv, self.rd)

    def act(self, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(a + b for a, b in zip(self.finite_part.act_rational(x), self.translation))

    # -- alcove data -----------------------------------------------------
    @cached_property
    def kbeta(self) -> tuple[int, ...]:
        """floor(<y, beta>) over positive roots beta, y in the image of the base alcove."""
        y = self.act(base_point(self.rd))
        return tuple(floor(self.rd.pair(y, beta)) for beta in self.rd.positive_roots)

    @property
    def length(self) -> int:
        return sum(abs(k) for k in self.kbeta)

    @cached_property
    def reduced_word(self) -> tuple[int, ...]:
        word: list[int] = []
        x = self
        while x.length:
            for s in range(self.rd.rank + 1):
                y = x * generator(self.rd, s)
                if y.length < x.length:
                    word.append(s)
                    x = y
                    break
            else:  # pragma: no cover - every nontrivial element has a right descent
                raise AssertionError("no descent found")
        return tuple(reversed(word))

    def __repr__(self) -> str:
        return f"t{self.translation}*{self.finite_part!r}"


def base_point(rd: RootDatum) -> tuple[Fraction, ...]:
    """rho_vee / h, an interior point of the base alcove."""
    h = rd.coxeter_number
    return tuple(x / h for x in rd.rho_vee)


def identity(rd: RootDatum) -> AffineWeylElement:
    return AffineWeylElement((0,) * rd.rank, rd.identity, rd)


def translation(rd: RootDatum, gamma: Sequence[int]) -> AffineWeylElement:
    return AffineWeylElement(tuple(gamma), rd.identity, rd)


def finite(rd: RootDatum, w: WeylElement) -> AffineWeylElement:
    return AffineWeylElement((0,) * rd.rank, w, rd)


@lru_cache(maxsize=None)
def generator(rd: RootDatum, s: int) -> AffineWeylElement:
    if s == 0:
        theta_vee = rd.coroot_of(rd.highest_root)
        return AffineWeylElement(theta_vee, rd.reflection(theta_vee), rd)
    if not 1 <= s <= rd.rank:
        raise ValueError(f"no affine generator {s} for rank {rd.rank}")
    return finite(rd, rd.simple(s - 1))


def from_word(rd: RootDatum, word: Iterable[int]) -> AffineWeylElement:
    x = identity(rd)
    for s in word:
        x = x * generator(rd, s)
    return x


def length(x: AffineWeylElement) -> int:
    return x.length


def reduced_word(x: AffineWeylElement) -> tuple[int, ...]:
    return x.reduced_word


# ---------------------------------------------------------------------------
# Hecke algebra


class HeckeElement:
    """Finite sum of Laurent coefficients times T_x."""

    __slots__ = ("rd", "terms")

    def __init__(self, rd: RootDatum, terms: Mapping[AffineWeylElement, Laurent] | None = None):
        self.rd = rd
        self.terms: dict[AffineWeylElement, Laurent] = {}
        for x, c in (terms or {}).items():
            c = Laurent.coerce(c)
            if not c.is_zero():
                self.terms[x] = c

    @classmethod
    def basis(cls, x: AffineWeylElement, coeff=1) -> "HeckeElement":
        return cls(x.rd, {x: Laurent.coerce(coeff)})

    @classmethod
    def one(cls, rd: RootDatum) -> "HeckeElement":
        return cls.basis(identity(rd))

    @classmethod
    def T(cls, rd: RootDatum, word: Sequence[int]) -> "HeckeElement":
        return cls.basis(from_word(rd, word))

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.terms)
        for x, c in other.terms.items():
            out[x] = out.get(x, Laurent()) + c
        return HeckeElement(self.rd, out)

    def __neg__(self):
        return HeckeElement(self.rd, {x: -c for x, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = Laurent.coerce(c)
        return HeckeElement(self.rd, {x: c * a for x, a in self.terms.items()})

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        return multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.terms == other.terms

    def specialize(self, v_value=1) -> dict[AffineWeylElement, Fraction]:
        out: dict[AffineWeylElement, Fraction] = {}
        for x, c in self.terms.items():
            val = c.specialize(v_value)
            if val:
                out[x] = val
        return out

    def __repr__(self) -> str:
        return " + ".join(f"({c})T{x.reduced_word}" for x, c in self.terms.items()) or "0"


def _left_generator(s: int, x: AffineWeylElement) -> dict[AffineWeylElement, Laurent]:
    """T_s T_x in the T-basis."""
    sx = generator(x.rd, s) * x
    if sx.length > x.length:
        return {sx: Laurent.const(1)}
    return {sx: Laurent.const(1), x: u_hecke}


def _basis_product(x: AffineWeylElement, y: AffineWeylElement) -> dict[AffineWeylElement, Laurent]:
    cur = {y: Laurent.const(1)}
    for s in reversed(x.reduced_word):
        nxt: dict[AffineWeylElement, Laurent] = {}
        for z, c in cur.items():
            for z2, c2 in _left_generator(s, z).items():
                nxt[z2] = nxt.get(z2, Laurent()) + c * c2
        cur = nxt
    return cur


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    out: dict[AffineWeylElement, Laurent] = {}
    for x, cx in a.terms.items():
        for y, cy in b.terms.items():
            for z, c in _basis_product(x, y).items():
                out[z] = out.get(z, Laurent()) + cx * cy * c
    return HeckeElement(a.rd, out)


def generator_inverse(rd: RootDatum, s: int) -> HeckeElement:
    """T_s^-1 = T_s - (v - v^-1)."""
    return HeckeElement.T(rd, (s,)) - HeckeElement.one(rd).scale(u_hecke)


def bullet_involution(a: HeckeElement) -> HeckeElement:
    """T_w -> (-1)^l(w) T_{w^-1}^-1, i.e. T_s -> -T_s^-1 extended along reduced words."""
    rd = a.rd
    out = HeckeElement(rd)
    for x, c in a.terms.items():
        img = HeckeElement.one(rd)
        for s in x.reduced_word:
            img = img * (-generator_inverse(rd, s))
        out = out + img.scale(c)
    return out
