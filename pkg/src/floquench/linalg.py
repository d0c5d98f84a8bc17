"""Dense complex linear algebra for the quench engine.

Everything here works on plain square numpy arrays. Hermitian and unitary
inputs are validated against explicit tolerances before use, and the
unitary eigendecomposition is built from two Hermitian solves so that no
general nonsymmetric eigensolver is needed.
"""

from dataclasses import dataclass

import numpy as np

HERMITIAN_RTOL = 1e-12
UNITARY_TOL = 1e-10
# cluster width used when splitting degenerate eigenvalue groups
CLUSTER_TOL = 1e-8
ANCHOR_TOL = 1e-8


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class UnitaryEigenDecomposition:
    """Unimodular eigenvalues and orthonormal eigenvectors of a unitary matrix.

    Columns are ordered by ascending -arg(lambda) in [-pi, pi), the same key
    the quasienergy sort uses downstream.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _as_square(a, name):
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError(f"{name} must have dimension >= 1")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return a.astype(complex)


def require_hermitian(h, name="matrix"):
    """Validate Hermiticity to 1e-12 relative to the spectral scale."""
    h = _as_square(h, name)
    scale = max(np.max(np.abs(h)), 1.0)
    dev = np.max(np.abs(h - h.conj().T))
    if dev > HERMITIAN_RTOL * scale:
        raise ValueError(
            f"{name} is not Hermitian: max |A - A^dag| = {dev:.3e} "
            f"exceeds {HERMITIAN_RTOL:.1e} * {scale:.3e}"
        )
    return h


def require_unitary(u, name="matrix"):
    h = _as_square(u, name)
    dev = np.linalg.norm(h.conj().T @ h - np.eye(h.shape[0]), 2)
    if dev > UNITARY_TOL:
        raise ValueError(
            f"{name} is not unitary: ||U^dag U - I||_2 = {dev:.3e} exceeds {UNITARY_TOL:.1e}"
        )
    return h


def _canonicalize_columns(w, v, cluster_tol):
    """Deterministic basis within degenerate clusters.

    Phase-fix every column so its first component with modulus above
    ANCHOR_TOL is real positive, then order columns inside each cluster of
    the sort key `w` by descending modulus of that component.
    """
    v = v.copy()
    dim = v.shape[0]
    anchors = np.empty(v.shape[1])
    for j in range(v.shape[1]):
        col = v[:, j]
        idx = np.flatnonzero(np.abs(col) > ANCHOR_TOL)
        k = idx[0] if idx.size else int(np.argmax(np.abs(col)))
        a = col[k]
        anchors[j] = np.abs(a)
        if anchors[j] > 0:
            v[:, j] = col * (a.conj() / np.abs(a))
    start = 0
    for j in range(1, v.shape[1] + 1):
        if j == v.shape[1] or w[j] - w[j - 1] > cluster_tol * dim:
            if j - start > 1:
                sub = np.argsort(-anchors[start:j], kind="stable")
                v[:, start:j] = v[:, start + sub]
            start = j
    return v


def eig_hermitian(h, name="matrix"):
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    h = require_hermitian(h, name)
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise ArithmeticError(f"eigendecomposition of {name} failed: {exc}") from exc
    scale = max(np.abs(w[0]), np.abs(w[-1]), 1.0)
    v = _canonicalize_columns(w, v, CLUSTER_TOL * scale)
    return SpectralDecomposition(eigenvalues=w, eigenvectors=v)


def expm_i_hermitian(h, c, name="matrix"):
    """exp(-i c H) for Hermitian H via spectral decomposition."""
    if not np.isfinite(c):
        raise ValueError(f"scalar c must be finite, got {c}")
    dec = eig_hermitian(h, name)
    phases = np.exp(-1j * c * dec.eigenvalues)
    return (dec.eigenvectors * phases[None, :]) @ dec.eigenvectors.conj().T


def eig_unitary(u, name="matrix"):
    """Eigendecomposition of a unitary matrix.

    Diagonalizes the Hermitian part (U + U^dag)/2 first; inside eigenvalue
    clusters the projected anti-Hermitian part (U - U^dag)/(2i) is
    diagonalized to separate states that share cos(arg) but differ in
    sin(arg). U is normal, so the two parts commute and the combined basis
    diagonalizes U itself.
    """
    u = require_unitary(u, name)
    dim = u.shape[0]
    re = (u + u.conj().T) / 2
    im = (u - u.conj().T) / 2j
    wc, v = np.linalg.eigh(re)
    start = 0
    for j in range(1, dim + 1):
        if j == dim or wc[j] - wc[j - 1] > CLUSTER_TOL * dim:
            if j - start > 1:
                block = v[:, start:j]
                sub = block.conj().T @ im @ block
                sub = (sub + sub.conj().T) / 2
                _, q = np.linalg.eigh(sub)
                v[:, start:j] = block @ q
            start = j
    lam = np.einsum("ij,ij->j", v.conj(), u @ v)
    mod = np.abs(lam)
    if np.any(np.abs(mod - 1.0) > UNITARY_TOL):
        raise ArithmeticError(
            f"degenerate-cluster resolution failed for {name}: "
            f"max ||lambda|-1| = {np.max(np.abs(mod - 1.0)):.3e}"
        )
    lam = lam / mod
    # numpy angle lands in (-pi, pi], so -angle is already in [-pi, pi)
    key = -np.angle(lam)
    order = np.argsort(key, kind="stable")
    lam = lam[order]
    v = v[:, order]
    v = _canonicalize_columns(key[order], v, CLUSTER_TOL)
    return UnitaryEigenDecomposition(eigenvalues=lam, eigenvectors=v)


def spectral_norm(a):
    """Largest singular value, sqrt(lambda_max(A^dag A))."""
    a = _as_square(a, "matrix")
    return float(np.linalg.norm(a, 2))


def commutator(a, b):
    a = _as_square(a, "first operand")
    b = _as_square(b, "second operand")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a
