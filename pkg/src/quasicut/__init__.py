"""Hypercubic-lattice quasicrystal toolkit.

Signed-permutation reflection groups of the n-cube, their Coxeter-plane and
icosahedral projection frames, Voronoi-cell shadows, and a strip-projection
engine producing 8-, 10- and 12-fold planar patterns and 3D icosahedral
point sets.
"""

from .weyl import (
    GroupElement,
    OrbitSet,
    RootDatum,
    apply_generator,
    build_root_datum,
    closure,
    d5d_generators,
    dihedral_generators,
    dn_generators,
    generator,
    h3_generators,
    h3_generators_alternate,
    lattice_vector,
    orbit,
    weight_coords,
)
from .frames import (
    Frame,
    PlaneRoots,
    TAU,
    SIGMA,
    b4_t_basis,
    b5_fivefold_frame,
    b6_h3_frame,
    b6_integer_coords,
    cartan_eigensystem,
    coxeter_plane_frame,
    h3_symmetry_planes,
    lattice_components,
    plane_roots,
)
from .cells import (
    SolidReport,
    VoronoiCell,
    b5_cube_decomposition,
    b6_cube_decomposition,
    classify_solid,
    decompose_orbits,
    project_points,
    rhombohedra_from_axes,
    voronoi_cell,
)
from .strip import (
    BudgetExceededError,
    Pattern,
    Window,
    accept,
    build_window,
    default_frame,
    extract_edges,
    generate_icosahedral_patch,
    generate_patch,
    symmetry_deviation,
    tile_census,
)

__all__ = [name for name in dir() if not name.startswith("_")]
