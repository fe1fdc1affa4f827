"""Command-line interface: subcommands, exit codes, file outputs."""

import json

from quasicut import cli


def run(argv):
    return cli.main(argv)


def test_orbit_writes_csv(tmp_path):
    code = run(["orbit", "--rank", "4", "--weight", "0001", "--out", str(tmp_path)])
    assert code == 0
    path = tmp_path / "orbit_b4_0001.csv"
    lines = path.read_text().strip().split("\n")
    assert len(lines) == 1 + 16


def test_orbit_requires_weight(tmp_path, capsys):
    assert run(["orbit", "--rank", "4", "--out", str(tmp_path)]) == 2


def test_orbit_rejects_bad_rank(tmp_path):
    assert run(["orbit", "--rank", "1", "--weight", "1", "--out", str(tmp_path)]) == 2


def test_orbit_rejects_mismatched_weight(tmp_path):
    assert run(["orbit", "--rank", "4", "--weight", "001", "--out", str(tmp_path)]) == 2


def test_usage_error_on_unknown_subcommand():
    assert run(["frobnicate"]) == 2


def test_solids_rank6(tmp_path):
    assert run(["solids", "--rank", "6", "--out", str(tmp_path)]) == 0
    report = json.loads((tmp_path / "solids_b6.json").read_text())
    labels = {r["file"]: r["label"] for r in report}
    assert labels["icosahedron_b6.off"] == "icosahedron"
    assert labels["rhombic_triacontahedron_b6.off"] == "rhombic triacontahedron"
    assert labels["dodecahedral_star_b6.off"] == "dodecahedral star"
    off = (tmp_path / "rhombic_triacontahedron_b6.off").read_text().split("\n")
    nv, nf, _ = (int(x) for x in off[1].split())
    assert nv == 32 and nf == 30


def test_solids_rank4(tmp_path):
    assert run(["solids", "--rank", "4", "--out", str(tmp_path)]) == 0
    off = (tmp_path / "rhombic_dodecahedron_b4.off").read_text().split("\n")
    nv, nf, _ = (int(x) for x in off[1].split())
    assert nv == 14 and nf == 12


def test_solids_rejects_unsupported_rank(tmp_path):
    assert run(["solids", "--rank", "7", "--out", str(tmp_path)]) == 2


def test_patch_outputs_and_determinism(tmp_path):
    args = [
        "patch", "--rank", "4", "--frame", "coxeter", "--window", "disc",
        "--shift", "omega", "--radius", "4",
    ]
    out1 = tmp_path / "one"
    out2 = tmp_path / "two"
    assert run(args + ["--out", str(out1)]) == 0
    assert run(args + ["--out", str(out2)]) == 0
    for name in (
        "patch_b4_coxeter_disc.csv",
        "patch_b4_coxeter_disc.json",
        "patch_b4_coxeter_disc.svg",
    ):
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()
    meta = json.loads((out1 / "patch_b4_coxeter_disc.json").read_text())
    assert meta["rank"] == 4
    assert meta["count"] > 0
    assert set(meta["tile_census"]) == {"square", "rhombus-45"}
    assert len(meta["edge_directions_deg"]) == 8


def test_patch_budget_exit_code(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"rank": 6, "radius": 80.0}))
    code = run(["patch", "--config", str(cfg), "--out", str(tmp_path)])
    assert code == 3


def test_patch_config_merge(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps({"rank": 4, "window": "hull", "shift": "zero", "radius": 3.0})
    )
    # the flag overrides the config value
    assert run(
        ["patch", "--config", str(cfg), "--window", "disc", "--out", str(tmp_path)]
    ) == 0
    assert (tmp_path / "patch_b4_coxeter_disc.csv").exists()


def test_icosa_patch(tmp_path):
    assert run(["icosa-patch", "--radius", "1.5", "--out", str(tmp_path)]) == 0
    off = (tmp_path / "icosa_patch.off").read_text().split("\n")
    nv = int(off[1].split()[0])
    csv_rows = (tmp_path / "icosa_patch.csv").read_text().strip().split("\n")
    assert nv == len(csv_rows) - 1 > 0


def test_check_passes(tmp_path, capsys):
    assert run(["check", "--out", str(tmp_path)]) == 0
    report = json.loads((tmp_path / "check_report.json").read_text())
    assert report["passed"] is True
    assert all(c["passed"] for c in report["checks"])
    capsys.readouterr()
