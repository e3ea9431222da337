"""Root systems, finite Weyl groups and the permutohedron cell complex.

Everything lives in integer coordinates: coroots (and the coroot lattice
Gamma) in the simple-coroot basis, roots in the simple-root basis.  The
Cartan matrix is stored as ``pairing[i][j] = <alpha_i^vee, alpha_j>``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

Vec = tuple[int, ...]

CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "C2": ((2, -2), (-1, 2)),
    "G2": ((2, -1), (-3, 2)),
}


def _unit(r: int, i: int) -> Vec:
    return tuple(1 if k == i else 0 for k in range(r))


def _add(a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def _scale(c: int, a: Sequence[int]) -> Vec:
    return tuple(c * x for x in a)


def is_positive(vec: Sequence) -> bool:
    """Membership in the positive cone (all coordinates >= 0)."""
    return all(x >= 0 for x in vec)


@dataclass(frozen=True)
class WeylElement:
    """A finite Weyl group element: reduced word plus matrix on coroot coordinates.

    ``matrix[r]`` is row r, so the image of gamma is ``sum_c matrix[r][c] gamma[c]``.
    """

    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    def act(self, gamma: Sequence[int]) -> Vec:
        return tuple(sum(m * g for m, g in zip(row, gamma)) for row in self.matrix)

    def act_rational(self, gamma: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(sum((m * g for m, g in zip(row, gamma)), Fraction(0)) for row in self.matrix)

    @property
    def length(self) -> int:
        return len(self.word)

    def __repr__(self) -> str:
        return "W[" + "".join(str(i + 1) for i in self.word) + "]" if self.word else "W[e]"


@dataclass(frozen=True)
class RootDatum:
    cartan_type: str
    pairing: tuple[tuple[int, ...], ...]
    rank: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rank", len(self.pairing))

    # -- simple data ----------------------------------------------------
    @property
    def simple_roots(self) -> list[Vec]:
        return [_unit(self.rank, i) for i in range(self.rank)]

    @property
    def simple_coroots(self) -> list[Vec]:
        return [_unit(self.rank, i) for i in range(self.rank)]

    def pair(self, gamma: Sequence, beta: Sequence) -> int:
        """<gamma, beta> for a coroot-basis vector gamma and a root-basis vector beta."""
        A = self.pairing
        return sum(gamma[j] * A[j][k] * beta[k] for j in range(self.rank) for k in range(self.rank))

    def reflect_coroot(self, i: int, gamma: Sequence[int]) -> Vec:
        c = self.pair(gamma, _unit(self.rank, i))
        return tuple(g - (c if k == i else 0) for k, g in enumerate(gamma))

    def reflect_root(self, i: int, beta: Sequence[int]) -> Vec:
        c = self.pair(_unit(self.rank, i), beta)
        return tuple(b - (c if k == i else 0) for k, b in enumerate(beta))

    # -- positive (co)roots ---------------------------------------------
    @cached_property
    def _root_pairs(self) -> list[tuple[Vec, Vec]]:
        # close the simple (root, coroot) pairs under simultaneous reflections
        seen = {(_unit(self.rank, i), _unit(self.rank, i)) for i in range(self.rank)}
        todo = list(seen)
        while todo:
            b, bc = todo.pop()
            for i in range(self.rank):
                nb, nbc = self.reflect_root(i, b), self.reflect_coroot(i, bc)
                if is_positive(nb) and (nb, nbc) not in seen:
                    seen.add((nb, nbc))
                    todo.append((nb, nbc))
        return sorted(seen, key=lambda p: (sum(p[1]), tuple(-x for x in p[1])))

    @property
    def positive_roots(self) -> list[Vec]:
        return [b for b, _ in self._root_pairs]

    @property
    def positive_coroots(self) -> list[Vec]:
        return [bc for _, bc in self._root_pairs]

    def coroot_of(self, beta: Sequence[int]) -> Vec:
        beta = tuple(beta)
        for b, bc in self._root_pairs:
            if b == beta:
                return bc
            if _scale(-1, b) == beta:
                return _scale(-1, bc)
        raise ValueError(f"{beta} is not a root")

    def root_of(self, coroot: Sequence[int]) -> Vec:
        coroot = tuple(coroot)
        for b, bc in self._root_pairs:
            if bc == coroot:
                return b
            if _scale(-1, bc) == coroot:
                return _scale(-1, b)
        raise ValueError(f"{coroot} is not a coroot")

    @cached_property
    def highest_root(self) -> Vec:
        return max(self.positive_roots, key=sum)

    @cached_property
    def coxeter_number(self) -> int:
        return sum(self.highest_root) + 1

    @cached_property
    def rho_vee(self) -> tuple[Fraction, ...]:
        """Half sum of positive coroots, in coroot coordinates."""
        tot = [0] * self.rank
        for bc in self.positive_coroots:
            tot = [t + x for t, x in zip(tot, bc)]
        return tuple(Fraction(t, 2) for t in tot)

    @cached_property
    def two_rho_vee(self) -> Vec:
        return tuple(int(2 * x) for x in self.rho_vee)

    # -- Weyl group -----------------------------------------------------
    def simple_matrix(self, i: int) -> tuple[tuple[int, ...], ...]:
        cols = [self.reflect_coroot(i, _unit(self.rank, c)) for c in range(self.rank)]
        return tuple(tuple(cols[c][r] for c in range(self.rank)) for r in range(self.rank))

    @cached_property
    def identity(self) -> WeylElement:
        return WeylElement((), tuple(_unit(self.rank, i) for i in range(self.rank)))

    @cached_property
    def weyl_elements(self) -> list[WeylElement]:
        """All of W, each with its lexicographically least reduced word."""
        best = {self.identity.matrix: self.identity}
        layer = [self.identity]
        while layer:
            cand: dict = {}
            for w in layer:
                for i in range(self.rank):
                    m = _matmul(w.matrix, self.simple_matrix(i))
                    if m in best:
                        continue
                    word = w.word + (i,)
                    if m not in cand or word < cand[m].word:
                        cand[m] = WeylElement(word, m)
            best.update(cand)
            layer = sorted(cand.values(), key=lambda x: x.word)
        return sorted(best.values(), key=lambda x: (len(x.word), x.word))

    @cached_property
    def _by_matrix(self) -> dict:
        return {w.matrix: w for w in self.weyl_elements}

    def element(self, word: Sequence[int]) -> WeylElement:
        m = self.identity.matrix
        for i in word:
            m = _matmul(m, self.simple_matrix(i))
        return self._by_matrix[m]

    def simple(self, i: int) -> WeylElement:
        return self.element((i,))

    def mul(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self._by_matrix[_matmul(a.matrix, b.matrix)]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.element(tuple(reversed(w.word)))

    def length(self, w: WeylElement) -> int:
        return sum(1 for bc in self.positive_coroots if not is_positive(w.act(bc)))

    def act_root(self, w: WeylElement, beta: Sequence[int]) -> Vec:
        for i in reversed(w.word):
            beta = self.reflect_root(i, beta)
        return tuple(beta)

    def reflection(self, coroot: Sequence[int]) -> WeylElement:
        """The reflection s_beta attached to a (positive or negative) coroot."""
        beta = self.root_of(coroot)
        for w in self.weyl_elements:
            if w.act(coroot) == _scale(-1, coroot) and all(
                w.act(g) == tuple(x - self.pair(g, beta) * c for x, c in zip(g, coroot))
                for g in self.simple_coroots
            ):
                return w
        raise AssertionError("reflection not found")

    def minimal_coset_reps(self, I: Sequence[int]) -> list[WeylElement]:
        out = []
        for w in self.weyl_elements:
            if all(self.length(self.mul(w, self.simple(i))) > self.length(w) for i in I):
                out.append(w)
        return out

    def parabolic(self, I: Sequence[int]) -> list[WeylElement]:
        I = set(I)
        return [w for w in self.weyl_elements if set(w.word) <= I]

    def __repr__(self) -> str:
        return f"RootDatum({self.cartan_type})"


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)) for r in range(n))


_CACHE: dict[str, RootDatum] = {}


def build_root_datum(cartan_type: str) -> RootDatum:
    if cartan_type not in CARTAN:
        raise ValueError(f"unsupported Cartan type {cartan_type!r}; choose from {sorted(CARTAN)}")
    if cartan_type not in _CACHE:
        _CACHE[cartan_type] = RootDatum(cartan_type, CARTAN[cartan_type])
    return _CACHE[cartan_type]


def rho_pair(rd: RootDatum, gamma: Sequence[int]) -> int:
    # <alpha_i^vee, rho> = 1 for every simple coroot
    return sum(gamma)


def weyl_act(rd: RootDatum, w: WeylElement, gamma: Sequence[int]) -> Vec:
    return w.act(gamma)


def weyl_elements(rd: RootDatum) -> list[WeylElement]:
    return list(rd.weyl_elements)


def minimal_coset_reps(rd: RootDatum, I: Sequence[int]) -> list[WeylElement]:
    return rd.minimal_coset_reps(I)


# ---------------------------------------------------------------------------
# permutohedron


@dataclass(frozen=True)
class ChainComplex:
    """Augmented cellular chain complex.

    ``cells[k]`` lists the cells of dimension k as pairs (I, w); degree -1 is
    the augmentation (a single generator).  ``boundary[k]`` is the integer
    matrix of d: C_k -> C_{k-1} with rows indexed by ``cells[k-1]``.
    """

    cells: dict[int, list]
    boundary: dict[int, list[list[int]]]

    def counts(self) -> dict[int, int]:
        return {k: len(v) for k, v in sorted(self.cells.items())}

    def is_exact(self) -> bool:
        return all(h == 0 for h in self.homology_ranks().values())

    def homology_ranks(self) -> dict[int, int]:
        ranks = {k: _rank(m) for k, m in self.boundary.items()}
        out = {}
        for k, cells in self.cells.items():
            out[k] = len(cells) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        return out

    def d_squared_zero(self) -> bool:
        for k in self.boundary:
            if k - 1 in self.boundary:
                a, b = self.boundary[k - 1], self.boundary[k]
                for r in range(len(a)):
                    for c in range(len(b[0]) if b else 0):
                        if sum(a[r][j] * b[j][c] for j in range(len(b))) != 0:
                            return False
        return True


def _rank(m: list[list[int]]) -> int:
    rows = [[Fraction(x) for x in r] for r in m]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [list(r) for r in m]
    n, det = len(m), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def _solve(frame: list[tuple[Fraction, ...]], vec: Sequence[Fraction]) -> list[Fraction]:
    """Coordinates of vec in the span of frame (exact least-squares-free solve)."""
    k = len(frame)
    # normal equations are fine here: frame is linearly independent and exact
    G = [[sum(a * b for a, b in zip(frame[i], frame[j])) for j in range(k)] for i in range(k)]
    rhs = [sum(a * b for a, b in zip(frame[i], vec)) for i in range(k)]
    out = []
    D = _det(G)
    for j in range(k):
        Gj = [row[:j] + [rhs[i]] + row[j + 1:] for i, row in enumerate(G)]
        out.append(_det(Gj) / D)
    return out


def permutohedron_complex(rd: RootDatum) -> ChainComplex:
    """Faces (I, w), w in W^I, of the convex hull of the W-orbit of rho^vee."""
    a = rd.rho_vee
    cells: dict[int, list] = {-1: [()]}
    cosets: dict = {}
    centroid: dict = {}
    frame: dict = {}
    for k in range(rd.rank + 1):
        cells[k] = []
        for I in combinations(range(rd.rank), k):
            WI = rd.parabolic(I)
            for w in rd.minimal_coset_reps(I):
                cell = (I, w)
                cells[k].append(cell)
                members = [rd.mul(w, u) for u in WI]
                cosets[cell] = frozenset(m.matrix for m in members)
                pts = [m.act_rational(a) for m in members]
                centroid[cell] = tuple(sum(c) / len(pts) for c in zip(*pts))
                frame[cell] = [tuple(Fraction(x) for x in w.act(_unit(rd.rank, i))) for i in I]

    boundary: dict[int, list[list[int]]] = {0: [[1] * len(cells[0])]}
    for k in range(1, rd.rank + 1):
        mat = [[0] * len(cells[k]) for _ in cells[k - 1]]
        for c, cell in enumerate(cells[k]):
            for r, face in enumerate(cells[k - 1]):
                if not cosets[face] <= cosets[cell]:
                    continue
                out = tuple(x - y for x, y in zip(centroid[face], centroid[cell]))
                vecs = [out] + frame[face]
                coords = [_solve(frame[cell], v) for v in vecs]
                sign = _det(coords)
                mat[r][c] = 1 if sign > 0 else -1
        boundary[k] = mat
    return ChainComplex(cells, boundary)
