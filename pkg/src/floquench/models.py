"""Concrete Hamiltonian pairs for the quench protocol.

Two families are provided. The collective-spin pair puts a linear Sz term
against a quadratic Sx^2 term on the maximal-spin sector of N spin-1/2
particles (dimension N+1). The atom-diatom pair couples an atomic mode to
a diatomic-molecule mode on the number-conserving sector n_a + 2 n_b = M
(dimension M/2 + 1). Natural units: hbar = 1, energies in units of the
frequency constant carried by the parameters.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import eig_hermitian, require_hermitian


@dataclass(frozen=True)
class LmgParams:
    """Collective-spin model parameters. N must be even so S = N/2 is integer."""

    n: int
    omega: float = 1.0

    def __post_init__(self):
        if self.n < 2 or self.n % 2 != 0:
            raise ValueError(f"particle number N must be even and >= 2, got {self.n}")
        if self.omega <= 0:
            raise ValueError(f"frequency must be positive, got {self.omega}")


@dataclass(frozen=True)
class AtomDiatomParams:
    """Atom-diatom model parameters for the sector n_a + 2 n_b = M."""

    m: int
    omega0: float = 2.0
    omega: float = 1.0
    coupling: float = 1.0

    def __post_init__(self):
        if self.m < 2 or self.m % 2 != 0:
            raise ValueError(f"total atom number M must be even and >= 2, got {self.m}")
        if self.coupling <= 0:
            raise ValueError(f"coupling must be positive, got {self.coupling}")


@dataclass(frozen=True)
class ModelPair:
    """A Hamiltonian pair (h1, h2) plus the optional order-parameter observable."""

    h1: np.ndarray
    h2: np.ndarray
    dim: int
    label: str
    observable_sx: np.ndarray | None = None


def collective_spin_ops(n):
    """Spin matrices Sx, Sy, Sz on the maximal-spin sector S = n/2.

    Basis states are |S, m> with m = -S ... S ascending, so Sz is diagonal
    with entries m. Ladder elements are sqrt(S(S+1) - m(m+1)).
    """
    if n < 1:
        raise ValueError(f"particle number must be >= 1, got {n}")
    s = n / 2.0
    m = np.arange(-s, s + 1)
    sz = np.diag(m)
    up = np.sqrt(s * (s + 1) - m[:-1] * (m[:-1] + 1))
    sp = np.diag(up, -1)  # S+ |m> = c |m+1>, and m is ascending along the basis
    sm = sp.T
    sx = (sp + sm) / 2
    sy = (sp - sm) / 2j
    return sx, sy, sz


def lmg_pair(p):
    """Collective-spin pair h1 = omega Sz / (2S), h2 = -omega Sx^2 / S^2."""
    sx, _, sz = collective_spin_ops(p.n)
    s = p.n / 2.0
    h1 = p.omega * sz / (2 * s)
    h2 = -p.omega * (sx @ sx) / s**2
    return ModelPair(
        h1=require_hermitian(h1, "h1"),
        h2=require_hermitian(h2, "h2"),
        dim=p.n + 1,
        label="lmg",
        observable_sx=sx,
    )


def atom_diatom_pair(p):
    """Atom-diatom pair on the basis n_b = 0 ... M/2 with n_a = M - 2 n_b.

    h1 is diagonal with entries (omega0 n_a + 2 omega n_b) / (2M). h2 hops
    one molecule: <n_b + 1| h2 |n_b> = coupling * sqrt((n_b+1) n_a (n_a-1))
    / M^(3/2), where n_a counts atoms in the source state.
    """
    dim = p.m // 2 + 1
    nb = np.arange(dim)
    na = p.m - 2 * nb
    h1 = np.diag((p.omega0 * na + 2 * p.omega * nb) / (2 * p.m))
    hop = p.coupling * np.sqrt((nb[:-1] + 1) * na[:-1] * (na[:-1] - 1)) / p.m**1.5
    h2 = np.diag(hop, -1) + np.diag(hop, 1)
    return ModelPair(
        h1=require_hermitian(h1, "h1"),
        h2=require_hermitian(h2, "h2"),
        dim=dim,
        label="atom-diatom",
    )


def static_hamiltonian(pair, xi):
    """Interpolated Hamiltonian xi * h2 + (1 - xi) * h1 for xi in [0, 1]."""
    if not 0.0 <= xi <= 1.0:
        raise ValueError(f"mixing parameter must lie in [0, 1], got {xi}")
    return xi * pair.h2 + (1.0 - xi) * pair.h1


def static_spectrum(pair, xi):
    """Ascending eigenvalues of the interpolated Hamiltonian."""
    return eig_hermitian(static_hamiltonian(pair, xi), "static hamiltonian").eigenvalues
