"""Print the projected-cube orbit structure for ranks 5 and 6.

Shows, for each vertex class of the 5- and 6-cube, the class size, the fine
orbit sizes under the acting point group, and the 3D norms of the projected
points.  Useful as a quick numeric companion to the solid classification.
"""

import numpy as np

from quasicut import cells, frames, weyl


def report_rank5() -> None:
    datum = weyl.build_root_datum(5)
    gens = list(weyl.d5d_generators(datum))
    dec = cells.b5_cube_decomposition()
    fr, _ = frames.b5_fivefold_frame()
    P = np.vstack([fr.basis[0], fr.basis[3], fr.basis[4]])
    print("rank 5 cube classes under the order-20 antiprismatic group")
    for key, pts in dec.items():
        parts = cells.decompose_orbits(list(pts), gens)
        sizes = sorted(len(p) for p in parts)
        norms = sorted(
            {
                round(float(np.linalg.norm(np.array(p, dtype=float) @ P.T, axis=1)[0]), 6)
                for p in parts
            }
        )
        print(f"  {key:10s} size {len(pts):2d}  fine orbits {sizes}  norms {norms}")


def report_rank6() -> None:
    datum = weyl.build_root_datum(6)
    gens = list(weyl.h3_generators(datum))
    dec = cells.b6_cube_decomposition()
    fr, _ = frames.b6_h3_frame()
    P = fr.par_basis
    print("rank 6 cube classes under the order-120 icosahedral group")
    for key, pts in dec.items():
        parts = cells.decompose_orbits(list(pts), gens)
        norm = float(np.linalg.norm(np.array(pts, dtype=float) @ P.T, axis=1)[0])
        print(f"  {key:4s} size {len(pts):2d}  fine orbits {[len(p) for p in parts]}  norm {norm:.6f}")


if __name__ == "__main__":
    report_rank5()
    report_rank6()
