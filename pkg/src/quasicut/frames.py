"""Orthonormal projection frames.

The generic frame diagonalizes the Cartan matrix and splits n-space into the
Coxeter plane (parallel space), the remaining eigenplanes (perpendicular
space) and, for odd rank, one invariant direction.  The fixed frames for
ranks 4, 5 and 6 give the octahedral t-basis, the five-fold frame and the
icosahedral block-diagonal frame.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .weyl import RootDatum, build_root_datum, lattice_vector

SQRT5 = np.sqrt(5.0)
TAU = (1.0 + SQRT5) / 2.0
SIGMA = (1.0 - SQRT5) / 2.0

ORTHO_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Frame:
    """Ordered orthonormal basis of n-space with a par/perp/invariant split.

    Rows of ``basis`` are the unit vectors in the l-basis.  ``par``, ``perp``
    and ``invariant`` are disjoint 0-based row indices covering the rank.
    """

    basis: np.ndarray
    par: tuple[int, ...]
    perp: tuple[int, ...]
    invariant: tuple[int, ...] = ()
    exponents: tuple[int, ...] | None = None
    # Cartan eigendata (eigenvalues, eigenvector matrix with last row 1),
    # present only on frames built from the eigensystem.
    eigen: tuple[np.ndarray, np.ndarray] | None = None
    label: str = "frame"

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    @property
    def par_basis(self) -> np.ndarray:
        return self.basis[list(self.par)]

    @property
    def perp_basis(self) -> np.ndarray:
        return self.basis[list(self.perp)]

    @property
    def window_basis(self) -> np.ndarray:
        """Rows spanning the acceptance-window space: perp then invariant."""
        return self.basis[list(self.perp) + list(self.invariant)]

    def validate(self) -> None:
        n = self.rank
        gram = self.basis @ self.basis.T
        if not np.allclose(gram, np.eye(n), atol=ORTHO_TOL):
            raise ValueError("frame basis is not orthonormal to 1e-12")
        if sorted(self.par + self.perp + self.invariant) != list(range(n)):
            raise ValueError("par/perp/invariant do not partition the indices")


@dataclass(frozen=True, eq=False)
class PlaneRoots:
    """Two norm-sqrt(2) vectors spanning one eigenplane of the Coxeter element."""

    beta_low: np.ndarray
    beta_high: np.ndarray
    exponent: int


def cartan_eigensystem(datum: RootDatum) -> list[tuple[float, np.ndarray]]:
    """(eigenvalue, eigenvector) pairs of the Cartan matrix.

    Sorted by increasing eigenvalue, i.e. by exponent m = 1, 3, ..., 2n-1;
    each eigenvector is scaled so that its last component equals 1.
    """
    A = datum.cartan.astype(float)
    w, V = np.linalg.eig(A)
    if np.abs(w.imag).max() > 1e-9:
        raise ArithmeticError("Cartan eigensystem unexpectedly complex")
    order = np.argsort(w.real)
    out = []
    for k in order:
        lam = float(w.real[k])
        X = V.real[:, k]
        if abs(X[-1]) < 1e-12:
            raise ArithmeticError("eigenvector has vanishing last component")
        X = X / X[-1]
        resid = np.linalg.norm(A @ X - lam * X)
        if resid > 1e-9:
            raise ArithmeticError(f"eigenpair residual {resid:.2e} exceeds 1e-9")
        out.append((lam, X))
    return out


def _coroots(datum: RootDatum) -> np.ndarray:
    al = datum.simple_roots_array()
    return np.array([2.0 * al[j] / (al[j] @ al[j]) for j in range(datum.rank)])


def coxeter_plane_frame(datum: RootDatum) -> Frame:
    """Unit vectors x_i built from the Cartan eigenvectors.

    x_i = (1/sqrt(h lam_i)) sum_j coroot_j X_ji.  The plane of exponents
    (1, 2n-1) is parallel space; the remaining eigenplanes are perpendicular
    space; for odd rank the unpaired middle direction is invariant.
    """
    n = datum.rank
    h = 2 * n
    pairs = cartan_eigensystem(datum)
    cor = _coroots(datum)
    basis = np.empty((n, n))
    X = np.empty((n, n))
    lams = np.empty(n)
    for i, (lam, vec) in enumerate(pairs):
        lams[i] = lam
        X[:, i] = vec
        basis[i] = (cor.T @ vec) / np.sqrt(h * lam)
    par = (0, n - 1)
    perp = tuple(i for i in range(1, n - 1) if (n % 2 == 0) or i != n // 2)
    inv = (n // 2,) if n % 2 == 1 else ()
    exps = tuple(2 * i + 1 for i in range(n))
    frame = Frame(basis, par, perp, inv, exps, (lams, X), label="coxeter")
    frame.validate()
    return frame


def plane_roots(frame: Frame, i: int) -> PlaneRoots:
    """Norm-sqrt(2) spanning pair of the i-th eigenplane (1-based, i <= n/2).

    beta_i     = sqrt2 (sin(m_i pi/2h) x_i + cos(m_i pi/2h) x_{n+1-i})
    beta_{n+1-i} = sqrt2 (sin(m_i pi/2h) x_i - cos(m_i pi/2h) x_{n+1-i})
    """
    n = frame.rank
    if frame.exponents is None:
        raise ValueError("plane_roots needs an exponent-labelled frame")
    if not 1 <= i <= n // 2:
        raise ValueError(f"plane index {i} is not a paired index for rank {n}")
    h = 2 * n
    m = frame.exponents[i - 1]
    s, c = np.sin(m * np.pi / (2 * h)), np.cos(m * np.pi / (2 * h))
    lo = np.sqrt(2.0) * (s * frame.basis[i - 1] + c * frame.basis[n - i])
    hi = np.sqrt(2.0) * (s * frame.basis[i - 1] - c * frame.basis[n - i])
    return PlaneRoots(lo, hi, m)


def lattice_components(datum: RootDatum, frame: Frame, a: Sequence[int]) -> np.ndarray:
    """Components p_i of the lattice vector along the eigenframe directions.

    p_i = (1/sqrt(h lam_i)) (sum_{j<n} a_j X_ji + 2 a_n), using the
    last-component-1 normalization of the eigenvectors.
    """
    if frame.eigen is None:
        raise ValueError("lattice_components needs an eigenframe")
    n = datum.rank
    lams, X = frame.eigen
    coeff = np.asarray(list(a[:-1]) + [2 * a[-1]], dtype=float)
    return (coeff @ X) / np.sqrt(2 * n * lams)


def b4_t_basis() -> Frame:
    """The octahedral 4D frame: t_0 invariant, (t_1, t_2, t_3) parallel."""
    t = 0.5 * np.array(
        [
            [1.0, 1.0, 1.0, 1.0],
            [1.0, -1.0, 1.0, -1.0],
            [-1.0, 1.0, 1.0, -1.0],
            [1.0, 1.0, -1.0, -1.0],
        ]
    )
    frame = Frame(t, par=(1, 2, 3), perp=(), invariant=(0,), label="tbasis")
    frame.validate()
    return frame


def b5_fivefold_frame() -> tuple[Frame, np.ndarray]:
    """Five-fold frame of rank 5 and the change-of-basis matrix B.

    The first four unit vectors come from root combinations with golden-ratio
    coefficients; the fifth is the body diagonal.  B expresses
    l_i = sum_j B_ij x_j; parallel space is (x_1, x_4), the window space is
    (x_2, x_3, x_5).
    """
    datum = build_root_datum(5)
    al = datum.simple_roots_array()
    combos = [
        al[0] + TAU * al[1] + TAU * al[2] + al[3],
        al[0] - SIGMA * al[1] + SIGMA * al[2] - al[3],
        al[0] + SIGMA * al[1] + SIGMA * al[2] + al[3],
        al[0] - TAU * al[1] + TAU * al[2] - al[3],
        al[0] + 2 * al[1] + 3 * al[2] + 4 * al[3] + 5 * al[4],
    ]
    basis = np.array([v / np.linalg.norm(v) for v in combos])
    frame = Frame(basis, par=(0, 3), perp=(1, 2, 4), label="fivefold")
    frame.validate()
    B = basis.T.copy()  # B_ij = l_i . x_j
    return frame, B


def _b6_matrix() -> np.ndarray:
    """Orthogonal matrix with l = M xhat; columns are the frame vectors."""
    M = np.array(
        [
            [-1.0, -TAU, 0.0, -TAU, 1.0, 0.0],
            [1.0, -TAU, 0.0, TAU, 1.0, 0.0],
            [0.0, -1.0, -TAU, 0.0, -TAU, 1.0],
            [0.0, -1.0, TAU, 0.0, -TAU, -1.0],
            [-TAU, 0.0, -1.0, 1.0, 0.0, -TAU],
            [TAU, 0.0, -1.0, -1.0, 0.0, -TAU],
        ]
    )
    return M / np.sqrt(2.0 * (2.0 + TAU))


def b6_h3_frame() -> tuple[Frame, np.ndarray]:
    """Icosahedral block-diagonal frame of rank 6 and its matrix M (l = M x).

    Parallel space is the unprimed triple (rows 0..2), perpendicular space the
    primed triple (rows 3..5); the icosahedral generators act block-diagonally.
    """
    M = _b6_matrix()
    frame = Frame(M.T.copy(), par=(0, 1, 2), perp=(3, 4, 5), label="h3")
    frame.validate()
    return frame, M


def b6_integer_coords(a: Sequence[int]) -> tuple[tuple[int, ...], np.ndarray]:
    """Golden-integer coordinates n_1..n_6 of a rank-6 lattice vector.

    Returns (n, components) where components are the six frame coordinates
    reconstructed from the n_i:
    sqrt(2(2+tau)) p = (n1+n2 tau, n3+n4 tau, n5+n6 tau,
                        tau(n1+n2 sig), tau(n3+n4 sig), tau(n5+n6 sig)).
    """
    a1, a2, a3, a4, a5, a6 = (int(x) for x in a)
    n = (
        -a1,
        -a5,
        -(a3 + 2 * a4 + 2 * a5 + 2 * a6),
        -(a1 + 2 * a2 + 2 * a3 + 2 * a4 + 2 * a5 + 2 * a6),
        -(a5 + 2 * a6),
        -a3,
    )
    n1, n2, n3, n4, n5, n6 = n
    comps = np.array(
        [
            n1 + n2 * TAU,
            n3 + n4 * TAU,
            n5 + n6 * TAU,
            TAU * (n1 + n2 * SIGMA),
            TAU * (n3 + n4 * SIGMA),
            TAU * (n5 + n6 * SIGMA),
        ]
    ) / np.sqrt(2.0 * (2.0 + TAU))
    return n, comps


def h3_symmetry_planes(frame: Frame | None = None) -> dict[str, np.ndarray]:
    """Orthonormal 2D bases of the 2-, 3- and 5-fold planes in parallel space.

    Coordinates are in the parallel triple (x_1, x_2, x_3) = (e1, e2, e3).
    """
    if frame is not None and frame.label != "h3":
        raise ValueError("symmetry planes are defined for the icosahedral frame")
    x1 = np.array([1.0, 0.0, 0.0])
    x2 = np.array([0.0, 1.0, 0.0])
    x3 = np.array([0.0, 0.0, 1.0])
    y1 = 0.5 * (-x1 + SIGMA * x2 + TAU * x3)
    y2 = (-1.0 / (2.0 * np.sqrt(3.0))) * (3.0 * x1 + SIGMA * x2 + TAU * x3)
    z1 = 0.5 * (TAU * x1 - x2 + SIGMA * x3)
    z2 = (1.0 / (2.0 * np.sqrt(2.0 + TAU))) * (x1 + SIGMA * x2 + (2.0 + TAU) * x3)
    return {
        "2fold": np.array([x1, x3]),
        "3fold": np.array([y1, y2]),
        "5fold": np.array([z1, z2]),
    }


def h3_plane_roots() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Simple-root triple of the icosahedral diagram in parallel coordinates."""
    x1 = np.array([1.0, 0.0, 0.0])
    x2 = np.array([0.0, 1.0, 0.0])
    x3 = np.array([0.0, 0.0, 1.0])
    b1 = -np.sqrt(2.0) * x1
    b2 = (x1 + SIGMA * x2 + TAU * x3) / np.sqrt(2.0)
    b3 = -np.sqrt(2.0) * x3
    return b1, b2, b3


def lattice_vector_array(datum: RootDatum, a: Sequence[int]) -> np.ndarray:
    """Float l-basis coordinates of the lattice vector of a weight tuple."""
    return np.array(lattice_vector(datum, a), dtype=float)
