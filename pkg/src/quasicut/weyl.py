"""The hyperoctahedral reflection group B_n as signed permutations.

Roots and weights are kept as exact dyadic rationals (``Fraction``); every
reflection is a signed permutation of the orthonormal axes, so orbits and
group closures are computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Coord = tuple[Fraction, ...]

MIN_RANK = 2
MAX_RANK = 8


class RankRangeError(ValueError):
    """Requested rank outside the supported 2..8 range."""


def _frac_vec(values: Iterable) -> Coord:
    return tuple(Fraction(v) for v in values)


def _dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Simple roots, Cartan matrix, metric and weights of B_n in the l-basis."""

    rank: int
    simple_roots: tuple[Coord, ...]
    cartan: np.ndarray
    metric: np.ndarray
    weights: tuple[Coord, ...]

    def simple_roots_array(self) -> np.ndarray:
        return np.array(self.simple_roots, dtype=float)

    def weights_array(self) -> np.ndarray:
        return np.array(self.weights, dtype=float)


def build_root_datum(n: int) -> RootDatum:
    """B_n root datum: alpha_i = l_i - l_{i+1} for i < n, alpha_n = l_n."""
    if not MIN_RANK <= n <= MAX_RANK:
        raise RankRangeError(f"rank must be in [{MIN_RANK}, {MAX_RANK}], got {n}")
    roots = []
    for i in range(n - 1):
        v = [Fraction(0)] * n
        v[i] = Fraction(1)
        v[i + 1] = Fraction(-1)
        roots.append(tuple(v))
    last = [Fraction(0)] * n
    last[-1] = Fraction(1)
    roots.append(tuple(last))

    cartan = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(n):
            num = 2 * _dot(roots[i], roots[j])
            den = _dot(roots[j], roots[j])
            cartan[i, j] = int(Fraction(num, den))

    # weights: omega_i = sum_j (A^-1)_ij alpha_j; exact since A is unimodular
    # up to powers of two.
    ainv = np.linalg.inv(cartan.astype(float))
    weights = []
    for i in range(n):
        w = [Fraction(0)] * n
        for j in range(n):
            cij = Fraction(round(ainv[i, j] * 2), 2)
            for k in range(n):
                w[k] += cij * roots[j][k]
        weights.append(tuple(w))

    # metric G_ij = (A^-1)_ij (alpha_j, alpha_j)/2
    metric = np.array(
        [
            [ainv[i, j] * float(_dot(roots[j], roots[j])) / 2.0 for j in range(n)]
            for i in range(n)
        ]
    )
    return RootDatum(n, tuple(roots), cartan, metric, tuple(weights))


@dataclass(frozen=True)
class GroupElement:
    """A signed permutation: axis j+1 maps to sign(images[j]) * axis |images[j]|."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(abs(k) for k in self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @staticmethod
    def identity(n: int) -> "GroupElement":
        return GroupElement(tuple(range(1, n + 1)))

    @property
    def rank(self) -> int:
        return len(self.images)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        # (self * other) acts as other first, then self.
        out = []
        for im in other.images:
            t = self.images[abs(im) - 1]
            out.append(t if im > 0 else -t)
        return GroupElement(tuple(out))

    def inverse(self) -> "GroupElement":
        out = [0] * self.rank
        for j, im in enumerate(self.images):
            out[abs(im) - 1] = (j + 1) if im > 0 else -(j + 1)
        return GroupElement(tuple(out))

    def apply(self, v: Sequence):
        """Act on coordinates in the l-basis; exact on Fraction input."""
        out = [None] * self.rank
        for j, im in enumerate(self.images):
            out[abs(im) - 1] = v[j] if im > 0 else -v[j]
        if isinstance(v, np.ndarray):
            return np.array(out)
        return tuple(out)

    def matrix(self) -> np.ndarray:
        m = np.zeros((self.rank, self.rank))
        for j, im in enumerate(self.images):
            m[abs(im) - 1, j] = 1.0 if im > 0 else -1.0
        return m

    def order(self, cap: int = 10_000) -> int:
        e = GroupElement.identity(self.rank)
        g = self
        for k in range(1, cap + 1):
            if g == e:
                return k
            g = g * self
        raise RuntimeError("order cap exceeded")

    def __pow__(self, k: int) -> "GroupElement":
        if k < 0:
            return self.inverse() ** (-k)
        g = GroupElement.identity(self.rank)
        for _ in range(k):
            g = g * self
        return g


def generator(i: int, n: int) -> GroupElement:
    """Simple reflection r_i: swap l_i <-> l_{i+1} for i < n; r_n flips l_n."""
    if not 1 <= i <= n:
        raise IndexError(f"generator index {i} out of range for rank {n}")
    images = list(range(1, n + 1))
    if i < n:
        images[i - 1], images[i] = images[i], images[i - 1]
    else:
        images[-1] = -n
    return GroupElement(tuple(images))


def apply_generator(datum: RootDatum, i: int, v: Sequence):
    """Reflect v in the hyperplane of the i-th simple root."""
    if not 1 <= i <= datum.rank:
        raise IndexError(f"generator index {i} out of range for rank {datum.rank}")
    alpha = datum.simple_roots[i - 1]
    c = Fraction(2) * _dot(_frac_vec(v) if not isinstance(v, np.ndarray) else v, alpha)
    c = c / _dot(alpha, alpha)
    if isinstance(v, np.ndarray):
        return v - float(c) * np.array(alpha, dtype=float)
    vv = _frac_vec(v)
    return tuple(vv[k] - c * alpha[k] for k in range(datum.rank))


@dataclass(frozen=True, eq=False)
class OrbitSet:
    """Deduplicated group orbit of a highest weight, lexicographically sorted."""

    points: tuple[Coord, ...]
    seed: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=float)


def lattice_vector(datum: RootDatum, a: Sequence[int]) -> Coord:
    """Lattice vector a_1 w_1 + ... + a_{n-1} w_{n-1} + 2 a_n w_n in the l-basis.

    The doubled last coefficient makes the map a -> l-basis integer
    coordinates a bijection of Z^n (the cubic root lattice).
    """
    n = datum.rank
    v = [Fraction(0)] * n
    coeffs = list(a[:-1]) + [2 * a[-1]]
    for j in range(n):
        for k in range(n):
            v[k] += coeffs[j] * datum.weights[j][k]
    return tuple(v)


def weight_coords(datum: RootDatum, c: Sequence[int]) -> tuple[int, ...]:
    """Inverse of lattice_vector: l-basis integers -> weight-coordinate tuple."""
    n = datum.rank
    a = [0] * n
    a[-1] = int(c[-1])
    for i in range(n - 1):
        a[i] = int(c[i]) - int(c[i + 1])
    return tuple(a)


def orbit(datum: RootDatum, highest_weight: Sequence[int]) -> OrbitSet:
    """Breadth-first closure of the weight under all simple reflections."""
    n = datum.rank
    hw = tuple(int(x) for x in highest_weight)
    if len(hw) != n:
        raise ValueError(f"weight tuple must have length {n}")
    seed = [Fraction(0)] * n
    for i, ai in enumerate(hw):
        for k in range(n):
            seed[k] += ai * datum.weights[i][k]
    gens = [generator(i, n) for i in range(1, n + 1)]
    seen = {tuple(seed)}
    frontier = [tuple(seed)]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g.apply(p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return OrbitSet(tuple(sorted(seen)), hw)


def closure(gens: Sequence[GroupElement], cap: int = 200_000) -> set[GroupElement]:
    """Group generated by gens, by breadth-first multiplication."""
    if not gens:
        return set()
    e = GroupElement.identity(gens[0].rank)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                m = g * h
                if m not in seen:
                    seen.add(m)
                    nxt.append(m)
        if len(seen) > cap:
            raise RuntimeError(f"closure exceeded cap {cap}")
        frontier = nxt
    return seen


def _product(indices: Iterable[int], n: int) -> GroupElement:
    g = GroupElement.identity(n)
    for i in indices:
        g = g * generator(i, n)
    return g


def dihedral_generators(datum: RootDatum) -> tuple[GroupElement, GroupElement]:
    """R_1 = product of odd-indexed simple reflections, R_2 of even-indexed.

    Non-adjacent simple reflections commute, so each factor is an involution
    and R_1 R_2 is the Coxeter element of order 2n.
    """
    n = datum.rank
    r1 = _product(range(1, n + 1, 2), n)
    r2 = _product(range(2, n + 1, 2), n)
    return r1, r2


def dn_generators(datum: RootDatum) -> tuple[GroupElement, ...]:
    """Generators of the index-2 rotation-parity subgroup D_n.

    r'_i = r_i for i < n; r'_n = r_n r_{n-1} r_n swaps l_{n-1} <-> -l_n.
    """
    n = datum.rank
    if n < 3:
        raise RankRangeError(f"D_n generators need rank >= 3, got {n}")
    gens = [generator(i, n) for i in range(1, n)]
    rn = generator(n, n)
    gens.append(rn * generator(n - 1, n) * rn)
    return tuple(gens)


def h3_generators(datum: RootDatum) -> tuple[GroupElement, GroupElement, GroupElement]:
    """Icosahedral-group generators inside rank 6:
    R_1 = r_1 r_5, R_2 = r_2 r_4, R_3 = r_3 r_6 r_5 r_6."""
    if datum.rank != 6:
        raise RankRangeError(f"icosahedral generators need rank 6, got {datum.rank}")
    r = {i: generator(i, 6) for i in range(1, 7)}
    return r[1] * r[5], r[2] * r[4], r[3] * r[6] * r[5] * r[6]


def h3_generators_alternate(
    datum: RootDatum,
) -> tuple[GroupElement, GroupElement, GroupElement]:
    """Conjugate icosahedral generator set obtained from the diagram flip:
    R_1 = r_1 r_6 r_5 r_6, R_2 = r_2 r_4, R_3 = r_3 r_5."""
    if datum.rank != 6:
        raise RankRangeError(f"icosahedral generators need rank 6, got {datum.rank}")
    r = {i: generator(i, 6) for i in range(1, 7)}
    return r[1] * r[6] * r[5] * r[6], r[2] * r[4], r[3] * r[5]


def d5d_generators(datum: RootDatum) -> tuple[GroupElement, GroupElement, GroupElement]:
    """Antiprismatic D_5d generators inside rank 5:
    R_1 = r_1 r_3, R_2 = r_2 r_4, R_3 = (r_1 r_2 r_3 r_4 r_5)^5 = -identity."""
    if datum.rank != 5:
        raise RankRangeError(f"D_5d generators need rank 5, got {datum.rank}")
    r = {i: generator(i, 5) for i in range(1, 6)}
    cox = r[1] * r[2] * r[3] * r[4] * r[5]
    return r[1] * r[3], r[2] * r[4], cox**5
