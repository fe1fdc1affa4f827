"""Voronoi cell of the cubic lattice and its 3D shadows.

The cell is the half-unit cube; projected into the rank-3 subspaces it
yields the rhombic dodecahedron, rhombic icosahedron and rhombic
triacontahedron, plus the star/antiprism/icosidodecahedron companions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np

from .frames import SIGMA, TAU, Frame
from .weyl import Coord, GroupElement, OrbitSet, RootDatum, orbit

MERGE_TOL = 1e-9


class ClosureViolationError(ValueError):
    """A generator mapped a point outside the supplied point set."""


@dataclass(frozen=True, eq=False)
class VoronoiCell:
    """Half-unit cube: the 2^n points (±1/2, ..., ±1/2) and its facet orbits."""

    vertices: tuple[Coord, ...]
    facet_normals: tuple[OrbitSet, ...]

    @property
    def rank(self) -> int:
        return len(self.vertices[0])

    def vertices_array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=float)


@dataclass(frozen=True, eq=False)
class SolidReport:
    label: str
    vertex_count: int
    norm_classes: tuple[tuple[float, int], ...]  # (norm, multiplicity), descending
    suborbits: tuple[int, ...] = ()


def voronoi_cell(datum: RootDatum) -> VoronoiCell:
    """Voronoi cell of the rank-n cubic lattice around the origin."""
    n = datum.rank
    verts = orbit(datum, (0,) * (n - 1) + (1,)).points
    facets = []
    for k in range(n):
        scale = Fraction(1, 2) if k < n - 1 else Fraction(1)
        orb = orbit(datum, tuple(1 if i == k else 0 for i in range(n)))
        scaled = tuple(tuple(scale * c for c in p) for p in orb.points)
        facets.append(OrbitSet(scaled, orb.seed))
    return VoronoiCell(verts, tuple(facets))


def project_points(
    points: Sequence[Sequence[float]] | np.ndarray,
    basis: np.ndarray,
    merge_tol: float = MERGE_TOL,
) -> tuple[np.ndarray, np.ndarray]:
    """Project points onto the rows of an orthonormal basis.

    Returns (distinct projected points, multiplicities); points closer than
    merge_tol coordinate-wise are merged.  The basis rows must be orthonormal.
    """
    basis = np.atleast_2d(np.asarray(basis, dtype=float))
    if not np.allclose(basis @ basis.T, np.eye(basis.shape[0]), atol=1e-9):
        raise ValueError("projection basis is not orthonormal")
    proj = np.asarray(points, dtype=float) @ basis.T
    seen: dict[tuple, int] = {}
    order: list[np.ndarray] = []
    for p in proj:
        key = tuple(np.round(p / merge_tol).astype(np.int64))
        if key in seen:
            seen[key] += 1
        else:
            seen[key] = 1
            order.append(p)
    uniq = np.array(sorted(order, key=tuple))
    mult = np.array(
        [seen[tuple(np.round(p / merge_tol).astype(np.int64))] for p in uniq]
    )
    return uniq, mult


def project_to_3d(
    points: Sequence[Sequence[float]] | np.ndarray, triple: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """3D shadow of an nD point set along three orthonormal directions."""
    triple = np.asarray(triple, dtype=float)
    if triple.shape[0] != 3:
        raise ValueError("need exactly three projection directions")
    return project_points(points, triple)


def _exact_key(p: Sequence) -> tuple:
    return tuple(Fraction(x).limit_denominator(2**20) for x in p)


def decompose_orbits(
    points: Sequence[Sequence] | np.ndarray,
    generators: Sequence[GroupElement],
) -> list[tuple[Coord, ...]]:
    """Partition a generator-closed point set into group orbits.

    Points must be exactly representable (integers or half-integers); a
    generator leaving the set is a closure violation.  Orbits are ordered by
    (size, lexicographic minimum).
    """
    pts = [tuple(Fraction(x) for x in map(_coerce, p)) for p in points]
    pool = set(pts)
    if len(pool) != len(pts):
        raise ValueError("duplicate points in input")
    orbits: list[tuple[Coord, ...]] = []
    remaining = set(pool)
    while remaining:
        seed = min(remaining)
        orb = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for p in frontier:
                for g in generators:
                    q = g.apply(p)
                    if q not in pool:
                        raise ClosureViolationError(
                            f"generator {g.images} maps {p} outside the point set"
                        )
                    if q not in orb:
                        orb.add(q)
                        nxt.append(q)
            frontier = nxt
        orbits.append(tuple(sorted(orb)))
        remaining -= orb
    orbits.sort(key=lambda o: (len(o), o[0]))
    return orbits


def _coerce(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    f = Fraction(float(x)).limit_denominator(2**20)
    if abs(float(f) - float(x)) > 1e-9:
        raise ValueError(f"point coordinate {x} is not exactly representable")
    return f


_NAMED_32 = (
    ("rhombic triacontahedron", (TAU / np.sqrt(2.0), np.sqrt(0.3 * (2.0 + TAU)))),
    ("dodecahedral star", (np.sqrt(0.3 * (2.0 + SIGMA)), -SIGMA / np.sqrt(2.0))),
)

_NAMED_BY_COUNT = {
    10: "pentagonal antiprism",
    12: "icosahedron",
    14: "rhombic dodecahedron",
    20: "dodecahedron",
    22: "rhombic icosahedron",
    30: "icosidodecahedron",
}


def classify_solid(
    points3d: np.ndarray, suborbits: Sequence[int] = ()
) -> SolidReport:
    """Name a projected solid from its vertex count and norm signature."""
    pts = np.asarray(points3d, dtype=float)
    if pts.size == 0:
        raise ValueError("empty point set")
    norms = np.linalg.norm(pts, axis=1)
    classes: dict[float, int] = {}
    for v in norms:
        for key in classes:
            if abs(key - v) <= 1e-6:
                classes[key] += 1
                break
        else:
            classes[v] = 1
    sig = tuple(sorted(classes.items(), key=lambda kv: -kv[0]))
    count = len(pts)
    label = "unclassified"
    if count == 32:
        got = sorted(classes.keys(), reverse=True)
        for name, expect in _NAMED_32:
            want = sorted(expect, reverse=True)
            if len(got) == len(want) and all(
                abs(a - b) <= 1e-6 for a, b in zip(got, want)
            ):
                label = name
                break
    elif count in _NAMED_BY_COUNT:
        label = _NAMED_BY_COUNT[count]
    return SolidReport(label, count, sig, tuple(suborbits))


_HALF = Fraction(1, 2)


def _sign_vecs(patterns: Sequence[str]) -> tuple[Coord, ...]:
    out = []
    for s in patterns:
        v = tuple(_HALF if c == "+" else -_HALF for c in s)
        out.append(v)
        out.append(tuple(-x for x in v))
    return tuple(sorted(out))


# Vertex listings of the rank-6 cube decomposition under the icosahedral
# group.  The first entry of the second dodecahedron carries a dropped
# subscript in the source listing; the sign parity (odd minus count) fixes
# it as +l_1.
_B6_ORBIT_I = _sign_vecs(
    [
        "++++++", "+++--+", "-++-++", "--+--+", "----++",
        "+++-+-", "-+++-+", "+-+-++", "-+---+", "--+-+-",
    ]
)
_B6_ORBIT_II = _sign_vecs(
    ["--++++", "+----+", "-+--+-", "--++--", "+--+++", "-+-+++"]
)
_B6_ORBIT_III = _sign_vecs(
    ["+++++-", "++++-+", "+++-++", "-++--+", "--+-++", "+-+-+-"]
)
_B6_ORBIT_IV = _sign_vecs(
    [
        "+-+--+", "-+--++", "--+---", "---+++", "+-----",
        "-++-+-", "--++-+", "+---++", "-+----", "--+++-",
    ]
)


def b6_cube_decomposition() -> dict[str, tuple[Coord, ...]]:
    """The 64 cube vertices split into the four icosahedral orbits.

    Orbits I (dodecahedron, 20) and II (icosahedron, 12) carry an even number
    of minus signs, III (icosahedron, 12) and IV (dodecahedron, 20) an odd
    number.  I+III form the rhombic triacontahedron, II+IV the dodecahedral
    star.
    """
    return {
        "I": _B6_ORBIT_I,
        "II": _B6_ORBIT_II,
        "III": _B6_ORBIT_III,
        "IV": _B6_ORBIT_IV,
    }


def b5_cube_decomposition() -> dict[str, tuple[Coord, ...]]:
    """The 32 rank-5 cube vertices split by minus-sign count: 2 + 10 + 20.

    The "poles" class (0 or 5 minus signs) and the "antiprism" class (1 or 4)
    are single antiprismatic-group orbits; the "belt" class (2 or 3) is the
    union of two orbits of 10 distinguished by adjacency of the minus pair
    around the pentagon.  Poles + belt form the 22-vertex rhombic icosahedron.
    """
    verts = [tuple(_HALF * s for s in signs) for signs in product((1, -1), repeat=5)]
    poles, antiprism, belt = [], [], []
    for v in verts:
        m = sum(1 for c in v if c < 0)
        if m in (0, 5):
            poles.append(v)
        elif m in (1, 4):
            antiprism.append(v)
        else:
            belt.append(v)
    return {
        "poles": tuple(sorted(poles)),
        "antiprism": tuple(sorted(antiprism)),
        "belt": tuple(sorted(belt)),
    }


def rhombohedra_from_axes(frame: Frame) -> tuple[np.ndarray, np.ndarray]:
    """Edge triples of the acute and obtuse rhombohedra in parallel space.

    The parallel projections of (l_1, l_2, l_3) and (l_4, l_5, l_6) span two
    parallelepipeds with all edges of norm 1/sqrt(2) and volume ratio tau.
    """
    if frame.label != "h3" or frame.rank != 6:
        raise ValueError("rhombohedra are defined for the icosahedral frame")
    P = frame.par_basis
    eye = np.eye(6)
    first = np.array([P @ eye[i] for i in range(3)])
    second = np.array([P @ eye[i] for i in range(3, 6)])
    v1 = abs(np.dot(first[0], np.cross(first[1], first[2])))
    v2 = abs(np.dot(second[0], np.cross(second[1], second[2])))
    acute, obtuse = (first, second) if v1 >= v2 else (second, first)
    return acute, obtuse


def parallelepiped_volume(edges: np.ndarray) -> float:
    return float(abs(np.dot(edges[0], np.cross(edges[1], edges[2]))))
