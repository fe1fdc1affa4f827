"""Command-line interface.

Subcommands: orbit, solids, patch, icosa-patch, check.  Options may come
from flags or from a JSON config file (flags win).  Exit codes: 0 ok,
1 check failure, 2 usage error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import cells, checks, frames, render, strip, weyl

EXIT_OK = 0
EXIT_CHECK = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _parse_shift(text: str):
    if text in ("omega", "zero"):
        return text
    try:
        return [float(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad shift {text!r}")


def _parse_weight(text: str) -> tuple[int, ...]:
    toks = text.split(",") if "," in text else list(text)
    try:
        return tuple(int(t) for t in toks)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight tuple {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quasicut")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--rank", type=int)
        p.add_argument("--config", type=Path, help="JSON config; flags override")
        p.add_argument("--out", type=Path, default=Path("."))
        p.add_argument("--format", choices=("csv", "json", "svg", "off"))

    p = sub.add_parser("orbit", help="orbit of a highest weight as CSV")
    common(p)
    p.add_argument("--weight", type=_parse_weight)

    p = sub.add_parser("solids", help="projected Voronoi solids as OFF + report")
    common(p)

    p = sub.add_parser("patch", help="planar strip-projection pattern")
    common(p)
    p.add_argument("--frame", choices=("coxeter", "fivefold", "h3", "tbasis"))
    p.add_argument("--window", choices=("hull", "disc"))
    p.add_argument("--shift", type=_parse_shift)
    p.add_argument("--radius", type=float)

    p = sub.add_parser("icosa-patch", help="3D icosahedral pattern")
    common(p)
    p.add_argument("--shift", type=_parse_shift)
    p.add_argument("--radius", type=float)

    p = sub.add_parser("check", help="run the invariant suite")
    common(p)
    return ap


def _merge_config(args: argparse.Namespace) -> dict:
    cfg = {}
    if args.config:
        cfg.update(json.loads(args.config.read_text()))
    for key, val in vars(args).items():
        if key in ("config",) or val is None:
            continue
        cfg[key] = val
    return cfg


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def cmd_orbit(cfg: dict) -> int:
    rank = int(cfg.get("rank", 0))
    weight = cfg.get("weight")
    if weight is None:
        print("orbit: --weight is required", file=sys.stderr)
        return EXIT_USAGE
    weight = tuple(int(w) for w in weight)
    try:
        datum = weyl.build_root_datum(rank)
    except weyl.RankRangeError as exc:
        print(f"orbit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if len(weight) != rank or any(w < 0 for w in weight):
        print(f"orbit: weight must be {rank} nonnegative integers", file=sys.stderr)
        return EXIT_USAGE
    orb = weyl.orbit(datum, weight)
    label = "".join(str(w) for w in weight)
    header = ",".join([f"a{i + 1}" for i in range(rank)]) + ",label," + ",".join(
        f"x{i + 1}" for i in range(rank)
    )
    lines = [header]
    for p in orb.points:
        lines.append(
            ",".join(str(w) for w in weight)
            + f",{label},"
            + ",".join(render.fmt(float(c)) for c in p)
        )
    out = Path(cfg.get("out", "."))
    _write(out / f"orbit_b{rank}_{label}.csv", "\n".join(lines) + "\n")
    return EXIT_OK


def _solid_jobs(rank: int):
    datum = weyl.build_root_datum(rank)
    cube = cells.voronoi_cell(datum).vertices_array()
    if rank == 4:
        P = frames.b4_t_basis().par_basis
        pts, mult = cells.project_points(cube, P)
        # two cube vertices land on the origin; the solid is the other 14
        keep = np.linalg.norm(pts, axis=1) > 1e-9
        yield "rhombic_dodecahedron", pts[keep]
    elif rank == 5:
        fr, _ = frames.b5_fivefold_frame()
        P = np.vstack([fr.basis[0], fr.basis[3], fr.basis[4]])
        shorts = weyl.orbit(datum, (1, 0, 0, 0, 0)).as_array()
        pts, _ = cells.project_points(shorts, P)
        yield "pentagonal_antiprism", pts
        dec = cells.b5_cube_decomposition()
        rico = np.array(dec["poles"] + dec["belt"], dtype=float)
        pts, _ = cells.project_points(rico, P)
        yield "rhombic_icosahedron", pts
    elif rank == 6:
        fr, _ = frames.b6_h3_frame()
        P = fr.par_basis
        shorts = weyl.orbit(datum, (1, 0, 0, 0, 0, 0)).as_array()
        pts, _ = cells.project_points(shorts, P)
        yield "icosahedron", pts
        dec = cells.b6_cube_decomposition()
        tri = np.array(dec["I"] + dec["III"], dtype=float)
        pts, _ = cells.project_points(tri, P)
        yield "rhombic_triacontahedron", pts
        star = np.array(dec["II"] + dec["IV"], dtype=float)
        pts, _ = cells.project_points(star, P)
        yield "dodecahedral_star", pts
    else:
        raise ValueError(f"solids supports ranks 4, 5, 6; got {rank}")


def cmd_solids(cfg: dict) -> int:
    rank = int(cfg.get("rank", 0))
    out = Path(cfg.get("out", "."))
    try:
        jobs = list(_solid_jobs(rank))
    except (ValueError, weyl.RankRangeError) as exc:
        print(f"solids: {exc}", file=sys.stderr)
        return EXIT_USAGE
    reports = []
    for name, pts in jobs:
        report = cells.classify_solid(pts)
        _write(out / f"{name}_b{rank}.off", render.off_text(pts))
        reports.append(
            {
                "file": f"{name}_b{rank}.off",
                "label": report.label,
                "vertex_count": report.vertex_count,
                "norm_classes": [[n, m] for n, m in report.norm_classes],
            }
        )
    _write(
        out / f"solids_b{rank}.json",
        json.dumps(reports, indent=2, sort_keys=True) + "\n",
    )
    return EXIT_OK


def _patch_pattern(cfg: dict):
    rank = int(cfg.get("rank", 0))
    frame_id = cfg.get("frame", "coxeter")
    mode = cfg.get("window")
    shift = cfg.get("shift", "omega")
    radius = float(cfg.get("radius", 8.0))
    datum, frame = strip.default_frame(rank, frame_id)
    if mode is None:
        mode = "disc" if len(frame.perp) != 2 or rank == 4 else "hull"
        if frame_id == "fivefold" or frame_id == "h3":
            mode = "hull"
        if rank == 6 and frame_id == "coxeter":
            mode = "disc"
    window = strip.build_window(datum, frame, mode, shift)
    pattern = strip.generate_patch(datum, frame, window, radius)
    return datum, frame, window, pattern


def cmd_patch(cfg: dict) -> int:
    try:
        datum, frame, window, pattern = _patch_pattern(cfg)
    except strip.BudgetExceededError as exc:
        print(f"patch: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, weyl.RankRangeError) as exc:
        print(f"patch: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rank = datum.rank
    out = Path(cfg.get("out", "."))
    stem = f"patch_b{rank}_{frame.label}_{window.mode}"
    edges = strip.extract_edges(pattern, frame) if len(pattern) else ()
    edge_census: dict[str, int] = {}
    for _, _, axis, _ in edges:
        edge_census[f"axis{axis}"] = edge_census.get(f"axis{axis}", 0) + 1
    meta_extra = {"edge_census": edge_census}
    if pattern.par.shape[1] == 2 and len(pattern):
        meta_extra["tile_census"] = strip.tile_census(pattern, frame)
        star = strip.projected_edge_star(frame)
        angles = sorted(
            {round(float(np.degrees(np.arctan2(v[1], v[0]))) % 360.0, 6) for v in star}
        )
        meta_extra["edge_directions_deg"] = angles
    _write(out / f"{stem}.csv", render.pattern_csv(pattern))
    _write(out / f"{stem}.json", render.pattern_meta_json(pattern, meta_extra))
    if pattern.par.shape[1] == 2:
        edge_len = float(np.linalg.norm(strip.projected_edge_star(frame)[0]))
        _write(
            out / f"{stem}.svg",
            render.pattern_svg(pattern, edges, edge_length=edge_len),
        )
    return EXIT_OK


def cmd_icosa_patch(cfg: dict) -> int:
    shift = cfg.get("shift", "zero")
    radius = float(cfg.get("radius", 3.0))
    try:
        pattern = strip.generate_icosahedral_patch(radius, shift)
    except strip.BudgetExceededError as exc:
        print(f"icosa-patch: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    out = Path(cfg.get("out", "."))
    _write(out / "icosa_patch.csv", render.pattern_csv(pattern))
    _write(out / "icosa_patch.json", render.pattern_meta_json(pattern))
    _write(out / "icosa_patch.off", render.off_text(pattern.par, with_faces=False))
    return EXIT_OK


def cmd_check(cfg: dict) -> int:
    results = checks.run_checks()
    ok = all(r["passed"] for r in results)
    report = {"passed": ok, "checks": results}
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    out = cfg.get("out")
    if out and str(out) != ".":
        _write(Path(out) / "check_report.json", text)
    sys.stdout.write(text)
    for r in results:
        if not r["passed"]:
            print(f"FAILED: {r['name']}: {r['detail']}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_CHECK


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    cfg = _merge_config(args)
    handler = {
        "orbit": cmd_orbit,
        "solids": cmd_solids,
        "patch": cmd_patch,
        "icosa-patch": cmd_icosa_patch,
        "check": cmd_check,
    }[args.command]
    return handler(cfg)


if __name__ == "__main__":
    sys.exit(main())
