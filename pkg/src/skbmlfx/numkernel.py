"""Dense linear-algebra kernels: symmetric eigendecomposition (cyclic Jacobi),
Moore-Penrose pseudo-inverse, row-space projector, and a Sylvester solver for
symmetric PSD coefficient pairs."""

from dataclasses import dataclass

import numpy as np

from ._kernels import jacobi_sweeps
from .errors import DimensionMismatch, NonFinite, NotSymmetric, SingularPencil

SYM_RTOL = 1e-10
RANK_RTOL = 1e-10
JACOBI_RTOL = 1e-12
JACOBI_MAX_SWEEPS = 100


def check_matrix(a, name="matrix"):
    """Validate and return a float64 2-d array with finite entries."""
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise DimensionMismatch(f"{name}: expected a non-empty 2-d array, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonFinite(f"{name}: contains NaN or Inf")
    return a


def check_vector(x, name="vector"):
    """Validate and return a finite float64 1-d array."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1 or x.size < 1:
        raise DimensionMismatch(f"{name}: expected a non-empty 1-d array, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise NonFinite(f"{name}: contains NaN or Inf")
    return x


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues sorted descending with matching orthonormal column vectors."""

    values: np.ndarray
    vectors: np.ndarray


def _require_symmetric(a, name):
    a = check_matrix(a, name)
    if a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"{name}: not square, shape {a.shape}")
    norm = np.linalg.norm(a)
    if np.linalg.norm(a - a.T) > SYM_RTOL * max(1.0, norm):
        raise NotSymmetric(f"{name}: asymmetry exceeds {SYM_RTOL} * ||a||_F")
    return 0.5 * (a + a.T), norm


def eigh_sym(a):
    """Full eigendecomposition of a symmetric matrix via cyclic Jacobi.

    Sign convention: in each eigenvector the entry of largest magnitude
    (lowest index on ties) is made non-negative. Eigenvalues descend; ties
    keep the Jacobi output order stably.
    """
    sym, norm = _require_symmetric(a, "eigh_sym")
    n = sym.shape[0]
    work = np.ascontiguousarray(sym)
    vecs = np.eye(n)
    jacobi_sweeps(work, vecs, JACOBI_RTOL * max(1.0, norm), JACOBI_MAX_SWEEPS)
    vals = np.diag(work).copy()
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    for j in range(n):
        col = vecs[:, j]
        if col[np.argmax(np.abs(col))] < 0:
            vecs[:, j] = -col
    return EigenDecomposition(values=vals, vectors=vecs)


def pinv(a):
    """Moore-Penrose pseudo-inverse via eigendecomposition of the smaller
    Gram matrix; singular values below RANK_RTOL * sigma_max are truncated."""
    a = check_matrix(a, "pinv")
    m, n = a.shape
    if m <= n:
        gram = a @ a.T
        eig = eigh_sym(gram)
        s = _kept_sigma(eig.values, gram.shape[0])
        if s is None:
            return np.zeros((n, m))
        u = eig.vectors[:, : s.size]
        v = (a.T @ u) / s
        return v @ (u.T / s[:, None])
    gram = a.T @ a
    eig = eigh_sym(gram)
    s = _kept_sigma(eig.values, gram.shape[0])
    if s is None:
        return np.zeros((n, m))
    v = eig.vectors[:, : s.size]
    u = (a @ v) / s
    return (v / s) @ u.T


def _kept_sigma(values, n):
    """Singular values surviving rank truncation, from Gram eigenvalues.

    Besides the relative cutoff, eigenvalues below the Gram computation's
    round-off floor (n * eps * lambda_max) are indistinguishable from zero
    and must be dropped too, or their rounding noise poisons the inverse.
    """
    lam_max = values[0] if values.size else 0.0
    floor = max((RANK_RTOL * np.sqrt(max(lam_max, 0.0))) ** 2,
                n * np.finfo(np.float64).eps * max(lam_max, 0.0))
    keep = values > floor
    if not np.any(keep):
        return None
    # eigenvalues are sorted descending, so kept ones form a prefix
    return np.sqrt(values[: int(np.count_nonzero(keep))])


def row_space_projection(v):
    """Projector H = pinv(v) @ v onto the row space of v (symmetric, idempotent)."""
    v = check_matrix(v, "row_space_projection")
    h = pinv(v) @ v
    return 0.5 * (h + h.T)


def sylvester_spd(a, b, c):
    """Solve aX + Xb = c for symmetric PSD a, b via double eigendecomposition.

    X = Q1 Y Q2^T with Y_ij = (Q1^T c Q2)_ij / (alpha_i + beta_j); requires
    every eigenvalue-pair sum to clear a scaled singularity floor."""
    ea_input, norm_a = _require_symmetric(a, "sylvester_spd a")
    eb_input, norm_b = _require_symmetric(b, "sylvester_spd b")
    c = check_matrix(c, "sylvester_spd c")
    if c.shape != (ea_input.shape[0], eb_input.shape[0]):
        raise DimensionMismatch(
            f"sylvester_spd: c shape {c.shape} incompatible with "
            f"{ea_input.shape[0]}x{eb_input.shape[0]}"
        )
    ea = eigh_sym(ea_input)
    eb = eigh_sym(eb_input)
    denom = ea.values[:, None] + eb.values[None, :]
    eps = 1e-12 * (norm_a + norm_b)
    if np.any(denom <= eps):
        raise SingularPencil("sylvester_spd: eigenvalue pair sum at or below singularity floor")
    y = (ea.vectors.T @ c @ eb.vectors) / denom
    return ea.vectors @ y @ eb.vectors.T
