"""Voronoi cells, projected solids, and orbit decompositions."""

from fractions import Fraction

import numpy as np
import pytest

from quasicut import cells, frames, weyl

TAU = frames.TAU
SIGMA = frames.SIGMA


def test_voronoi_cell_is_unit_cube():
    datum = weyl.build_root_datum(4)
    cell = cells.voronoi_cell(datum)
    V = cell.vertices_array()
    assert V.shape == (16, 4)
    assert np.all(np.abs(V) == 0.5)
    # every vertex is inside or on each wall bisector
    for orb in cell.facet_normals:
        for c in orb.points:
            center = np.array(c, dtype=float)
            proj = V @ center / (center @ center)
            assert proj.max() <= 1.0 + 1e-12


def test_project_points_merges_duplicates():
    pts = np.array([[1.0, 0.0], [1.0 + 1e-12, 0.0], [0.0, 1.0]])
    basis = np.eye(2)
    uniq, mult = cells.project_points(pts, basis)
    assert len(uniq) == 2
    assert sorted(mult.tolist()) == [1, 2]


def test_project_points_rejects_non_orthonormal_basis():
    with pytest.raises(ValueError):
        cells.project_points(np.eye(3), np.array([[1.0, 1.0, 0.0]]))


def test_b4_cube_shadow_is_rhombic_dodecahedron():
    datum = weyl.build_root_datum(4)
    cube = cells.voronoi_cell(datum).vertices_array()
    P = frames.b4_t_basis().par_basis
    pts, mult = cells.project_points(cube, P)
    origins = np.linalg.norm(pts, axis=1) <= 1e-9
    assert origins.sum() == 1 and mult[origins][0] == 2
    outer = pts[~origins]
    assert len(outer) == 14
    assert cells.classify_solid(outer).label == "rhombic dodecahedron"


def test_b5_cube_classes():
    dec = cells.b5_cube_decomposition()
    assert {k: len(v) for k, v in dec.items()} == {
        "poles": 2,
        "antiprism": 10,
        "belt": 20,
    }
    # the classes together are exactly the 32 cube vertices
    allv = [tuple(p) for k in dec for p in dec[k]]
    assert len(set(allv)) == 32
    assert all(all(abs(x) == Fraction(1, 2) for x in p) for p in allv)


def test_b5_poles_plus_belt_is_rhombic_icosahedron():
    dec = cells.b5_cube_decomposition()
    fr, _ = frames.b5_fivefold_frame()
    P = np.vstack([fr.basis[0], fr.basis[3], fr.basis[4]])
    pts, _ = cells.project_points(
        np.array(dec["poles"] + dec["belt"], dtype=float), P
    )
    assert len(pts) == 22
    assert cells.classify_solid(pts).label == "rhombic icosahedron"


def test_b5_fine_orbits_refine_the_classes():
    # the antiprismatic group splits the belt class into two 10-point orbits
    datum = weyl.build_root_datum(5)
    gens = list(weyl.d5d_generators(datum))
    dec = cells.b5_cube_decomposition()
    cube = [p for k in dec for p in dec[k]]
    parts = cells.decompose_orbits(cube, gens)
    assert sorted(len(p) for p in parts) == [2, 10, 10, 10]
    belt = {tuple(p) for p in dec["belt"]}
    belt_parts = [p for p in parts if set(map(tuple, p)) <= belt]
    assert len(belt_parts) == 2
    fr, _ = frames.b5_fivefold_frame()
    P = np.vstack([fr.basis[0], fr.basis[3], fr.basis[4]])
    norms = sorted(
        float(np.linalg.norm(np.array(p, dtype=float) @ P.T, axis=1).mean())
        for p in belt_parts
    )
    # the two suborbits sit on distinct spheres
    assert norms[1] - norms[0] > 0.5


def test_b6_cube_decomposition_sets():
    dec = cells.b6_cube_decomposition()
    assert {k: len(v) for k, v in dec.items()} == {
        "I": 20,
        "II": 12,
        "III": 12,
        "IV": 20,
    }
    allv = [tuple(p) for k in dec for p in dec[k]]
    assert len(set(allv)) == 64
    # parity split: I, II have an even number of minus signs
    for key, want in (("I", 0), ("II", 0), ("III", 1), ("IV", 1)):
        for p in dec[key]:
            assert sum(1 for x in p if x < 0) % 2 == want


def test_b6_classes_are_orbits_of_the_icosahedral_group():
    datum = weyl.build_root_datum(6)
    gens = list(weyl.h3_generators(datum))
    dec = cells.b6_cube_decomposition()
    cube = [p for k in dec for p in dec[k]]
    parts = cells.decompose_orbits(cube, gens)
    part_sets = [frozenset(map(tuple, p)) for p in parts]
    for key in dec:
        assert frozenset(map(tuple, dec[key])) in part_sets


def test_b6_projected_norms_and_ratios():
    fr, _ = frames.b6_h3_frame()
    P = fr.par_basis
    dec = cells.b6_cube_decomposition()
    want = {
        "III": TAU / np.sqrt(2.0),
        "I": np.sqrt(0.3 * (2.0 + TAU)),
        "IV": np.sqrt(0.3 * (2.0 + SIGMA)),
        "II": -SIGMA / np.sqrt(2.0),
    }
    got = {}
    for key in dec:
        norms = np.linalg.norm(np.array(dec[key], dtype=float) @ P.T, axis=1)
        assert np.ptp(norms) <= 1e-9
        got[key] = float(norms[0])
        assert abs(got[key] - want[key]) <= 1e-9
    assert abs(got["III"] / got["II"] - TAU**2) <= 1e-9
    assert abs(got["I"] / got["IV"] - TAU) <= 1e-9


def test_b6_solid_labels():
    fr, _ = frames.b6_h3_frame()
    P = fr.par_basis
    dec = cells.b6_cube_decomposition()
    datum = weyl.build_root_datum(6)
    shorts = weyl.orbit(datum, (1, 0, 0, 0, 0, 0)).as_array()
    pts, _ = cells.project_points(shorts, P)
    assert cells.classify_solid(pts).label == "icosahedron"
    tri, _ = cells.project_points(np.array(dec["I"] + dec["III"], dtype=float), P)
    assert cells.classify_solid(tri).label == "rhombic triacontahedron"
    star, _ = cells.project_points(np.array(dec["II"] + dec["IV"], dtype=float), P)
    assert cells.classify_solid(star).label == "dodecahedral star"


def test_long_root_shadow_is_two_icosidodecahedra():
    datum = weyl.build_root_datum(6)
    fr, _ = frames.b6_h3_frame()
    longs = weyl.orbit(datum, (0, 1, 0, 0, 0, 0)).as_array()
    pts, _ = cells.project_points(longs, fr.par_basis)
    norms = np.round(np.linalg.norm(pts, axis=1), 9)
    classes = {}
    for v in norms:
        classes[v] = classes.get(v, 0) + 1
    assert sorted(classes.values()) == [30, 30]
    lo, hi = sorted(classes)
    assert abs(lo - 0.743) <= 5e-4
    assert abs(hi - 1.203) <= 5e-4
    inner = pts[np.isclose(norms, lo)]
    assert cells.classify_solid(inner).label == "icosidodecahedron"


def test_decompose_orbits_requires_closure():
    datum = weyl.build_root_datum(5)
    gens = list(weyl.d5d_generators(datum))
    with pytest.raises(cells.ClosureViolationError):
        cells.decompose_orbits([(Fraction(1, 2),) * 5], gens)


def test_rhombohedra():
    fr, _ = frames.b6_h3_frame()
    acute, obtuse = cells.rhombohedra_from_axes(fr)
    for edges in (acute, obtuse):
        lens = np.linalg.norm(edges, axis=1)
        assert np.abs(lens - 1.0 / np.sqrt(2.0)).max() <= 1e-9
    va = cells.parallelepiped_volume(acute)
    vo = cells.parallelepiped_volume(obtuse)
    assert abs(va / vo - TAU) <= 1e-9
