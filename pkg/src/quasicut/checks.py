"""Machine-checkable invariant suite behind the `check` subcommand.

Each check returns (name, passed, detail); the CLI reports them as JSON and
exits nonzero when any fails.
"""

from __future__ import annotations

import numpy as np

from . import cells, frames, weyl


def _check(name, cond, detail=""):
    return {"name": name, "passed": bool(cond), "detail": str(detail)}


def run_checks() -> list[dict]:
    out = []

    # orbit cardinalities
    for n in (4, 5, 6):
        datum = weyl.build_root_datum(n)
        e1 = (1,) + (0,) * (n - 1)
        e2 = (0, 1) + (0,) * (n - 2)
        en = (0,) * (n - 1) + (1,)
        sizes = (
            len(weyl.orbit(datum, e1)),
            len(weyl.orbit(datum, e2)),
            len(weyl.orbit(datum, en)),
        )
        expect = (2 * n, 2 * n * (n - 1), 2**n)
        out.append(
            _check(f"orbit-cardinalities-n{n}", sizes == expect, f"{sizes} vs {expect}")
        )

    # Cartan spectrum
    for n in (4, 5, 6):
        datum = weyl.build_root_datum(n)
        lams = np.array([lam for lam, _ in frames.cartan_eigensystem(datum)])
        expect = np.array(
            [2.0 * (1.0 - np.cos((2 * i + 1) * np.pi / (2 * n))) for i in range(n)]
        )
        err = float(np.abs(lams - expect).max())
        out.append(_check(f"cartan-spectrum-n{n}", err <= 1e-9, f"max err {err:.2e}"))

    # icosahedral relations, reported individually
    datum6 = weyl.build_root_datum(6)
    R1, R2, R3 = weyl.h3_generators(datum6)
    e = weyl.GroupElement.identity(6)
    for name, g, k in (
        ("R1^2", R1, 2),
        ("R2^2", R2, 2),
        ("R3^2", R3, 2),
        ("(R1R3)^2", R1 * R3, 2),
        ("(R1R2)^3", R1 * R2, 3),
        ("(R2R3)^5", R2 * R3, 5),
    ):
        out.append(_check(f"icosahedral-relation-{name}", g**k == e))
    out.append(
        _check(
            "icosahedral-closure-120",
            len(weyl.closure([R1, R2, R3])) == 120,
        )
    )

    datum5 = weyl.build_root_datum(5)
    d5 = weyl.d5d_generators(datum5)
    out.append(_check("antiprismatic-closure-20", len(weyl.closure(list(d5))) == 20))
    for n in (4, 5, 6):
        datum = weyl.build_root_datum(n)
        r1, r2 = weyl.dihedral_generators(datum)
        out.append(
            _check(
                f"coxeter-element-order-n{n}",
                (r1 * r2).order() == 2 * n,
                f"order {(r1 * r2).order()}",
            )
        )

    # frame orthogonality
    _, B = frames.b5_fivefold_frame()
    out.append(
        _check(
            "fivefold-matrix-orthogonal",
            np.abs(B @ B.T - np.eye(5)).max() <= 1e-12,
        )
    )
    _, M = frames.b6_h3_frame()
    out.append(
        _check(
            "icosahedral-matrix-orthogonal",
            np.abs(M @ M.T - np.eye(6)).max() <= 1e-12,
        )
    )
    for n in (4, 5, 6):
        datum = weyl.build_root_datum(n)
        fr = frames.coxeter_plane_frame(datum)
        gram = fr.basis @ fr.basis.T
        out.append(
            _check(
                f"eigenframe-orthonormal-n{n}",
                np.abs(gram - np.eye(n)).max() <= 1e-12,
            )
        )

    # projected-norm values, reported with deltas
    fr6, _ = frames.b6_h3_frame()
    P = fr6.par_basis
    dec = cells.b6_cube_decomposition()
    tau, sig = frames.TAU, frames.SIGMA
    expect_norms = {
        "III": tau / np.sqrt(2.0),
        "I": np.sqrt(0.3 * (2.0 + tau)),
        "IV": np.sqrt(0.3 * (2.0 + sig)),
        "II": -sig / np.sqrt(2.0),
    }
    for key, want in expect_norms.items():
        pts = np.array(dec[key], dtype=float) @ P.T
        norms = np.linalg.norm(pts, axis=1)
        delta = float(np.abs(norms - want).max())
        out.append(
            _check(
                f"cube-orbit-norm-{key}",
                delta <= 1e-9,
                f"norm {norms[0]:.9f}, expected {want:.9f}, delta {delta:.2e}",
            )
        )

    # decomposition sizes
    gens = weyl.h3_generators(datum6)
    parts = cells.decompose_orbits(
        [p for key in dec for p in dec[key]], list(gens)
    )
    sizes = sorted(len(p) for p in parts)
    out.append(
        _check("cube-decomposition-sizes-n6", sizes == [12, 12, 20, 20], f"{sizes}")
    )
    return out
