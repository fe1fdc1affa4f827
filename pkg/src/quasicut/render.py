"""Deterministic serializers: CSV for point sets, SVG for planar patterns,
OFF for 3D solids.  Numbers are written with 17 significant digits so a
round-trip through text is lossless for 64-bit floats."""

from __future__ import annotations

import json
from typing import Sequence

import numpy as np
from scipy.spatial import ConvexHull

from .strip import Pattern


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def orbit_csv(points: np.ndarray, labels: Sequence[str] | None = None) -> str:
    n = points.shape[1]
    header = ",".join(f"x{i + 1}" for i in range(n))
    lines = [header]
    for row in points:
        lines.append(",".join(fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def pattern_csv(pattern: Pattern) -> str:
    n = pattern.rank
    dp = pattern.par.shape[1]
    dw = pattern.perp.shape[1]
    cols = (
        [f"a{i + 1}" for i in range(n)]
        + [f"par{i + 1}" for i in range(dp)]
        + [f"perp{i + 1}" for i in range(dw)]
    )
    lines = [",".join(cols)]
    for k in range(len(pattern)):
        row = (
            [str(int(v)) for v in pattern.a[k]]
            + [fmt(v) for v in pattern.par[k]]
            + [fmt(v) for v in pattern.perp[k]]
        )
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def parse_pattern_csv(text: str, rank: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    lines = [ln for ln in text.strip().split("\n")]
    header = lines[0].split(",")
    n_par = sum(1 for h in header if h.startswith("par"))
    a, par, perp = [], [], []
    for ln in lines[1:]:
        vals = ln.split(",")
        a.append([int(v) for v in vals[:rank]])
        par.append([float(v) for v in vals[rank : rank + n_par]])
        perp.append([float(v) for v in vals[rank + n_par :]])
    return (
        np.array(a, dtype=int),
        np.array(par, dtype=float),
        np.array(perp, dtype=float),
    )


def pattern_meta_json(pattern: Pattern, extra: dict | None = None) -> str:
    meta = dict(pattern.meta)
    if extra:
        meta.update(extra)
    return json.dumps(meta, indent=2, sort_keys=True) + "\n"


SVG_SCALE_PER_EDGE = 40.0


def pattern_svg(
    pattern: Pattern,
    edges: Sequence[tuple[int, int, int, int]] = (),
    edge_length: float | None = None,
) -> str:
    """2D pattern as SVG: circles for points, segments for edges.

    Scale is 40 user units per lattice edge length, origin centered, y up.
    """
    par = pattern.par
    if par.shape[1] != 2:
        raise ValueError("SVG output needs planar parallel coordinates")
    if edge_length is None:
        edge_length = 1.0 / np.sqrt(2.0)
    scale = SVG_SCALE_PER_EDGE / edge_length
    xy = par * scale
    xy[:, 1] *= -1.0  # mathematical orientation
    pad = SVG_SCALE_PER_EDGE
    if len(xy):
        xmin, ymin = xy.min(axis=0) - pad
        xmax, ymax = xy.max(axis=0) + pad
    else:
        xmin = ymin = -pad
        xmax = ymax = pad
    w, h = xmax - xmin, ymax - ymin

    def c(v: float) -> str:
        return format(v, ".4f")

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{c(xmin)} {c(ymin)} '
        f'{c(w)} {c(h)}" width="{c(w)}" height="{c(h)}">',
        '<g stroke="#555555" stroke-width="1">',
    ]
    for i, j, axis, _sign in edges:
        parts.append(
            f'<line x1="{c(xy[i, 0])}" y1="{c(xy[i, 1])}" '
            f'x2="{c(xy[j, 0])}" y2="{c(xy[j, 1])}" class="e{axis}"/>'
        )
    parts.append("</g>")
    parts.append('<g fill="#202020">')
    for k in range(len(xy)):
        parts.append(f'<circle cx="{c(xy[k, 0])}" cy="{c(xy[k, 1])}" r="2.5"/>')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _merged_hull_faces(points: np.ndarray, dihedral_tol: float = 1e-6) -> list[list[int]]:
    """Convex-hull faces with coplanar triangles merged into polygons."""
    hull = ConvexHull(points)
    groups: dict[tuple, set[int]] = {}
    for simplex, eq in zip(hull.simplices, hull.equations):
        key = tuple(np.round(eq / dihedral_tol).astype(np.int64))
        groups.setdefault(key, set()).update(int(v) for v in simplex)
    faces = []
    for key, vset in sorted(groups.items()):
        normal = np.array(key[:3], dtype=float) * dihedral_tol
        normal /= np.linalg.norm(normal)
        vlist = sorted(vset)
        center = points[vlist].mean(axis=0)
        # order vertices around the face by angle in its plane
        ref = points[vlist[0]] - center
        ref -= (ref @ normal) * normal
        ref /= np.linalg.norm(ref)
        perp = np.cross(normal, ref)
        ang = [
            float(np.arctan2((points[v] - center) @ perp, (points[v] - center) @ ref))
            for v in vlist
        ]
        faces.append([v for _, v in sorted(zip(ang, vlist))])
    return faces


def off_text(points: np.ndarray, with_faces: bool = True) -> str:
    """OFF mesh of a 3D point set; faces only when every point is extreme."""
    pts = np.asarray(points, dtype=float)
    faces: list[list[int]] = []
    if with_faces and len(pts) >= 4:
        hull = ConvexHull(pts)
        if len(hull.vertices) == len(pts):
            faces = _merged_hull_faces(pts)
    lines = ["OFF", f"{len(pts)} {len(faces)} 0"]
    for p in pts:
        lines.append(" ".join(fmt(v) for v in p))
    for f in faces:
        lines.append(str(len(f)) + " " + " ".join(str(v) for v in f))
    return "\n".join(lines) + "\n"
