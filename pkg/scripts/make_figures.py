"""Reproduce every figure-style artifact from the committed run configs.

Usage: python scripts/make_figures.py [outdir]

Writes pattern CSV/JSON/SVG files for each config in configs/ plus the
projected-solid OFF meshes for ranks 4, 5, 6 into outdir (default: out/).
"""

import json
import sys
from pathlib import Path

from quasicut import cli

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "out"
    for cfg_path in sorted((ROOT / "configs").glob("*.json")):
        command = json.loads(cfg_path.read_text()).get("command", "patch")
        dest = outdir / cfg_path.stem
        code = cli.main(
            [command, "--config", str(cfg_path), "--out", str(dest)]
        )
        if code != 0:
            print(f"{cfg_path.name}: exit {code}", file=sys.stderr)
            return code
        print(f"{cfg_path.name} -> {dest}")
    for rank in (4, 5, 6):
        dest = outdir / f"solids_b{rank}"
        code = cli.main(["solids", "--rank", str(rank), "--out", str(dest)])
        if code != 0:
            return code
        print(f"solids rank {rank} -> {dest}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
