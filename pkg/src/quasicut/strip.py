"""Strip projection: acceptance windows, lattice enumeration, patterns.

A lattice point is accepted when its window-space component (perpendicular
plus any invariant direction) lies inside the projected, possibly shifted
Voronoi cell.  Accepted points carry weight-coordinate integers, parallel
coordinates and window coordinates; edges join points one lattice unit apart.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.spatial import ConvexHull, cKDTree

from .cells import voronoi_cell
from .frames import Frame, lattice_vector_array
from .weyl import RootDatum, build_root_datum

BOUNDARY_TOL = 1e-9
DEFAULT_BUDGET = 100_000_000


class BudgetExceededError(RuntimeError):
    """Candidate enumeration would exceed the tuple budget."""

    def __init__(self, candidates: int, budget: int, box: int):
        self.candidates = candidates
        self.budget = budget
        self.box = box
        super().__init__(
            f"enumeration needs {candidates} candidate tuples "
            f"(per-coordinate bound {box}), budget is {budget}"
        )


@dataclass(frozen=True, eq=False)
class Window:
    """Convex acceptance region in window space.

    hull mode: vertex list plus outward half-spaces (normals, offsets).
    disc mode: ball of radius R0 over the perpendicular components, with a
    slab of the Voronoi extent over any invariant component.
    """

    mode: str  # "hull" | "disc"
    dim: int
    shift: np.ndarray  # window-space coordinates of the shift
    vertices: np.ndarray  # projected (unshifted) Voronoi vertices
    normals: np.ndarray | None = None  # hull facet outward normals
    offsets: np.ndarray | None = None  # hull facet offsets (n.x <= d, pre-shift)
    radius: float = 0.0  # disc mode: ball radius over ball_dims
    ball_dims: int = 0  # leading window coords covered by the ball
    slab_halfwidths: np.ndarray = field(default_factory=lambda: np.zeros(0))

    def contains(self, w: np.ndarray, tol: float = BOUNDARY_TOL) -> np.ndarray:
        """Membership test for window-space points, shape (..., dim)."""
        w = np.asarray(w, dtype=float) - self.shift
        if self.mode == "hull":
            slack = self.offsets - w @ self.normals.T
            return np.min(slack, axis=-1) >= -tol
        k = self.ball_dims
        ok = np.linalg.norm(w[..., :k], axis=-1) <= self.radius + tol
        for j, half in enumerate(self.slab_halfwidths):
            ok &= np.abs(w[..., k + j]) <= half + tol
        return ok

    @property
    def circumradius(self) -> float:
        return float(np.linalg.norm(self.vertices, axis=1).max())


def _perp_shift(datum: RootDatum, frame: Frame, shift_label, n: int) -> np.ndarray:
    W = frame.window_basis
    if shift_label is None or (isinstance(shift_label, str) and shift_label == "zero"):
        return np.zeros(W.shape[0])
    if isinstance(shift_label, str) and shift_label in ("omega", "omega_n"):
        omega_n = np.full(n, 0.5)
        return W @ omega_n
    if isinstance(shift_label, str):
        raise ValueError(f"unknown shift label {shift_label!r}")
    vec = np.asarray(shift_label, dtype=float)
    if vec.shape == (n,):
        return W @ vec
    if vec.shape == (W.shape[0],):
        return vec
    raise ValueError(f"shift must be an n-vector or window-space vector, got {vec.shape}")


def build_window(
    datum: RootDatum,
    frame: Frame,
    mode: str = "hull",
    shift_label: str | Sequence[float] | None = "omega",
) -> Window:
    """Acceptance window from the projected Voronoi cell of the cubic lattice.

    shift_label: "omega" uses the half-diagonal weight (the documented default
    shift), "zero" no shift, or an explicit vector (l-basis or window space).
    """
    n = datum.rank
    W = frame.window_basis
    dim = W.shape[0]
    if dim < 2:
        raise ValueError(f"window dimension {dim} unsupported (need >= 2)")
    verts = voronoi_cell(datum).vertices_array() @ W.T
    shift = _perp_shift(datum, frame, shift_label, n)

    if mode == "hull":
        if dim > 3:
            raise ValueError(
                f"hull windows support dimension 2 or 3, got {dim}; use disc mode"
            )
        hull = ConvexHull(verts)
        normals = hull.equations[:, :-1]
        offsets = -hull.equations[:, -1]
        win = Window("hull", dim, shift, verts, normals, offsets)
        slack = win.offsets - verts @ win.normals.T
        if slack.min() < -BOUNDARY_TOL:
            raise AssertionError("projected Voronoi vertex violates its own hull")
        return win
    if mode == "disc":
        k = len(frame.perp)
        perp_part = verts[:, :k]
        radius = float(np.linalg.norm(perp_part, axis=1).max())
        halfwidths = (
            np.abs(verts[:, k:]).max(axis=0) if dim > k else np.zeros(0)
        )
        return Window(
            "disc", dim, shift, verts, radius=radius, ball_dims=k,
            slab_halfwidths=halfwidths,
        )
    raise ValueError(f"unknown window mode {mode!r}")


def accept(
    a: Sequence[int], datum: RootDatum, frame: Frame, window: Window
) -> bool:
    """True iff the lattice point's window component lies in the window."""
    v = lattice_vector_array(datum, a)
    w = frame.window_basis @ v
    return bool(window.contains(w))


@dataclass(frozen=True, eq=False)
class Pattern:
    """Accepted lattice points of one strip-projection run."""

    rank: int
    a: np.ndarray  # (N, n) weight-coordinate integers
    par: np.ndarray  # (N, d_par) parallel coordinates
    perp: np.ndarray  # (N, d_window) window coordinates
    meta: dict
    edges: tuple[tuple[int, int, int, int], ...] = ()  # (i, j, axis, sign)

    def __len__(self) -> int:
        return len(self.a)


def _lbasis_from_a(a: np.ndarray) -> np.ndarray:
    # c_i = a_i + ... + a_{n-1} + a_n for i < n, c_n = a_n.
    c = np.cumsum(a[:, ::-1], axis=1)[:, ::-1].copy()
    return c


def _a_from_lbasis(c: np.ndarray) -> np.ndarray:
    a = c.copy()
    a[:, :-1] = c[:, :-1] - c[:, 1:]
    return a


def generate_patch(
    datum: RootDatum,
    frame: Frame,
    window: Window,
    par_radius: float,
    budget: int = DEFAULT_BUDGET,
) -> Pattern:
    """All accepted lattice points with parallel norm <= par_radius.

    Candidates are enumerated over the integer l-basis box covering the ball
    of radius sqrt(par_radius^2 + (window circumradius + |shift|)^2); output
    is sorted lexicographically by weight coordinates.
    """
    if par_radius <= 0:
        raise ValueError("par_radius must be positive")
    n = datum.rank
    w_reach = window.circumradius + float(np.linalg.norm(window.shift))
    ball = np.sqrt(par_radius**2 + w_reach**2)
    box = int(np.floor(ball + 1e-9))
    candidates = (2 * box + 1) ** n
    if candidates > budget:
        raise BudgetExceededError(candidates, budget, box)

    P = frame.par_basis
    W = frame.window_basis
    axis_vals = np.arange(-box, box + 1)
    tail = np.stack(
        np.meshgrid(*([axis_vals] * (n - 1)), indexing="ij"), axis=-1
    ).reshape(-1, n - 1)
    tail_sq = np.einsum("ij,ij->i", tail, tail)

    kept: list[np.ndarray] = []
    for c0 in axis_vals:
        mask = tail_sq + c0 * c0 <= ball * ball + 1e-9
        if not mask.any():
            continue
        block = np.concatenate(
            [np.full((mask.sum(), 1), c0), tail[mask]], axis=1
        ).astype(float)
        par = block @ P.T
        sel = np.einsum("ij,ij->i", par, par) <= par_radius**2 + 1e-9
        if not sel.any():
            continue
        block = block[sel]
        ok = window.contains(block @ W.T)
        if ok.any():
            kept.append(block[ok].astype(int))
    if kept:
        c_all = np.concatenate(kept, axis=0)
    else:
        c_all = np.zeros((0, n), dtype=int)
    a_all = _a_from_lbasis(c_all)
    order = np.lexsort(a_all.T[::-1]) if len(a_all) else np.array([], dtype=int)
    a_all = a_all[order]
    c_sorted = c_all[order].astype(float)
    meta = {
        "rank": n,
        "frame": frame.label,
        "window_mode": window.mode,
        "shift": [float(s) for s in window.shift],
        "par_radius": float(par_radius),
        "box_bound": box,
        "count": int(len(a_all)),
    }
    return Pattern(n, a_all, c_sorted @ P.T, c_sorted @ W.T, meta)


def generate_icosahedral_patch(
    par_radius: float,
    shift_label: str | Sequence[float] | None = "zero",
    budget: int = DEFAULT_BUDGET,
) -> Pattern:
    """Rank-6 lattice projected to 3D through the icosahedral frame.

    Window: convex hull (rhombic triacontahedron) of the Voronoi cell's
    shadow in the primed triple.
    """
    from .frames import b6_h3_frame

    datum = build_root_datum(6)
    frame, _ = b6_h3_frame()
    window = build_window(datum, frame, "hull", shift_label)
    return generate_patch(datum, frame, window, par_radius, budget)


def projected_edge_star(frame: Frame) -> np.ndarray:
    """Parallel-space images of the 2n signed unit vectors."""
    n = frame.rank
    P = frame.par_basis
    dirs = []
    for i in range(n):
        e = np.zeros(n)
        e[i] = 1.0
        dirs.append(P @ e)
        dirs.append(-(P @ e))
    return np.array(dirs)


def extract_edges(pattern: Pattern, frame: Frame) -> tuple[tuple[int, int, int, int], ...]:
    """Edges between accepted points exactly one lattice unit apart.

    Each edge is (i, j, axis, sign): the l-basis integer difference of point
    j minus point i is sign * e_axis, and the parallel difference matches the
    projected unit vector to 1e-6.
    """
    if len(pattern) == 0:
        raise ValueError("pattern is empty")
    n = pattern.rank
    c = _lbasis_from_a(pattern.a)
    index = {tuple(row): k for k, row in enumerate(c)}
    P = frame.par_basis
    unit_par = np.array([P @ np.eye(n)[i] for i in range(n)])
    edges = []
    for k, row in enumerate(c):
        for axis in range(n):
            nb = list(row)
            nb[axis] += 1
            j = index.get(tuple(nb))
            if j is None:
                continue
            diff = pattern.par[j] - pattern.par[k]
            if np.abs(diff - unit_par[axis]).max() > 1e-6:
                raise AssertionError("unit step does not project to the edge vector")
            edges.append((k, j, axis + 1, +1))
    return tuple(edges)


def symmetry_deviation(pattern: Pattern, k: int, margin: float | None = None) -> float:
    """Largest mismatch of the pattern under rotation by 2*pi/k.

    Points within par_radius - margin of the centroid are rotated about the
    centroid and matched to their nearest pattern point.  Defined for 2D
    parallel coordinates; margin defaults to the projected edge length.
    """
    if k < 2:
        if k == 1:
            return 0.0
        raise ValueError("rotation order must be >= 1")
    if pattern.par.shape[1] != 2:
        raise ValueError("symmetry deviation is defined for planar patterns")
    if len(pattern) == 0:
        return 0.0
    par = pattern.par
    centroid = par.mean(axis=0)
    if margin is None:
        # projected edge length is sqrt(2/n); one edge length is a safe
        # boundary band, and 1/sqrt(2) bounds it for every supported rank
        margin = 1.0 / np.sqrt(2.0)
    radius = pattern.meta.get("par_radius", float(np.linalg.norm(par - centroid, axis=1).max()))
    theta = 2.0 * np.pi / k
    rot = np.array(
        [[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]]
    )
    inner = np.linalg.norm(par - centroid, axis=1) <= radius - margin
    if not inner.any():
        return 0.0
    rotated = (par[inner] - centroid) @ rot.T + centroid
    tree = cKDTree(par)
    dists, _ = tree.query(rotated)
    return float(dists.max())


def tile_census(pattern: Pattern, frame: Frame) -> dict[str, int]:
    """Minimal tiles (triangles and parallelograms) of the bond graph.

    Bonds join pattern points whose parallel distance equals the projected
    lattice-edge length (tolerance 1e-6).  Parallelograms are keyed square /
    rhombus-<angle>; triangles are equilateral with the bond length.
    """
    par = pattern.par
    if par.shape[1] != 2:
        raise ValueError("tile census is defined for planar patterns")
    star = projected_edge_star(frame)
    s = float(np.linalg.norm(star[0]))
    tree = cKDTree(par)
    pairs = tree.query_pairs(s + 1e-6)
    bonds = {
        (i, j)
        for i, j in pairs
        if abs(np.linalg.norm(par[j] - par[i]) - s) <= 1e-6
    }
    adj: dict[int, set[int]] = {}
    for i, j in bonds:
        adj.setdefault(i, set()).add(j)
        adj.setdefault(j, set()).add(i)
    census: dict[str, int] = {}

    def bump(key: str) -> None:
        census[key] = census.get(key, 0) + 1

    # triangles: i < j < k mutually bonded
    for i, nbrs in adj.items():
        for j in nbrs:
            if j <= i:
                continue
            for k2 in adj[i] & adj[j]:
                if k2 > j:
                    bump("triangle")

    # parallelograms: corner i with bond vectors u, v and opposite vertex
    pts_index = {tuple(np.round(p / 1e-6).astype(np.int64)): k for k, p in enumerate(par)}

    def find(p: np.ndarray) -> int | None:
        return pts_index.get(tuple(np.round(p / 1e-6).astype(np.int64)))

    for i, nbrs in adj.items():
        nlist = sorted(nbrs)
        for ai in range(len(nlist)):
            for bi in range(ai + 1, len(nlist)):
                ja, jb = nlist[ai], nlist[bi]
                u = par[ja] - par[i]
                v = par[jb] - par[i]
                cosang = float(np.clip(u @ v / (s * s), -1.0, 1.0))
                if abs(cosang) > 1.0 - 1e-9:  # collinear pair, no tile
                    continue
                opp = find(par[i] + u + v)
                if opp is None:
                    continue
                if (min(ja, opp), max(ja, opp)) not in bonds:
                    continue
                if (min(jb, opp), max(jb, opp)) not in bonds:
                    continue
                # count once: smallest index is the anchor corner
                if i != min(i, ja, jb, opp):
                    continue
                ang = np.degrees(np.arccos(cosang))
                ang = min(ang, 180.0 - ang)
                if abs(ang - 90.0) <= 1e-6:
                    bump("square")
                else:
                    bump(f"rhombus-{round(ang)}")
    return census


def default_frame(rank: int, frame_id: str):
    """Resolve a frame id for the CLI: coxeter | fivefold | h3 | tbasis."""
    from .frames import b4_t_basis, b5_fivefold_frame, b6_h3_frame, coxeter_plane_frame

    datum = build_root_datum(rank)
    if frame_id == "coxeter":
        return datum, coxeter_plane_frame(datum)
    if frame_id == "fivefold":
        if rank != 5:
            raise ValueError("fivefold frame requires rank 5")
        return datum, b5_fivefold_frame()[0]
    if frame_id == "h3":
        if rank != 6:
            raise ValueError("icosahedral frame requires rank 6")
        return datum, b6_h3_frame()[0]
    if frame_id == "tbasis":
        if rank != 4:
            raise ValueError("t-basis frame requires rank 4")
        return datum, b4_t_basis()
    raise ValueError(f"unknown frame id {frame_id!r}")
