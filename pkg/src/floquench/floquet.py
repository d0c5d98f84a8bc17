"""Floquet analysis of the two-step quench protocol.

The drive holds h2 on [0, t0) and h1 on [t0, T), so every propagator is a
product of at most two matrix exponentials. Quasienergies come from the
principal logarithm of the one-period operator's eigenvalues; mean
energies use the closed two-term form obtained by splitting the time
average at t0, and geometric phases follow from the splitting identity
eps_j = Ebar_j - hbar phi_j / T. The quadrature operations exist only as
independent cross-checks of those closed forms.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import eig_hermitian, eig_unitary, expm_i_hermitian, require_hermitian
from .models import ModelPair


@dataclass(frozen=True)
class QuenchProtocol:
    """Model pair driven with quench time t0 inside each period of length T."""

    pair: ModelPair
    t0: float
    period: float

    def __post_init__(self):
        if self.period <= 0:
            raise ValueError(f"period must be positive, got {self.period}")
        if not 0.0 <= self.t0 <= self.period:
            raise ValueError(
                f"quench time must lie in [0, {self.period}], got {self.t0}"
            )


@dataclass(frozen=True)
class FloquetSolution:
    """Quasienergies (ascending, first Brillouin zone), modes at t=0, and
    the index-aligned mean energies and geometric phases."""

    quasienergies: np.ndarray
    modes0: np.ndarray
    mean_energies: np.ndarray
    geometric_phases: np.ndarray
    protocol: QuenchProtocol


@dataclass(frozen=True)
class CorrelatorResult:
    """Two-time correlator values f_j, index-aligned with a FloquetSolution."""

    values: np.ndarray


def propagator(q, t):
    """Evolution operator U(t, 0) for t in [0, T]."""
    if not 0.0 <= t <= q.period:
        raise ValueError(f"time must lie in [0, {q.period}], got {t}")
    if t < q.t0:
        return expm_i_hermitian(q.pair.h2, t, "h2")
    u2 = expm_i_hermitian(q.pair.h2, q.t0, "h2")
    return expm_i_hermitian(q.pair.h1, t - q.t0, "h1") @ u2


def monodromy(q):
    """One-period operator U(T, 0)."""
    u2 = expm_i_hermitian(q.pair.h2, q.t0, "h2")
    u1 = expm_i_hermitian(q.pair.h1, q.period - q.t0, "h1")
    return u1 @ u2


def floquet_solve(q):
    """Diagonalize the one-period operator and assemble the full solution."""
    t0, T = q.t0, q.period
    dec = eig_unitary(monodromy(q), "monodromy")
    # eig_unitary sorts by -arg(lambda) in [-pi, pi), so eps is already
    # ascending inside [-pi/T, pi/T)
    eps = -np.angle(dec.eigenvalues) / T
    v = dec.eigenvectors
    u2 = expm_i_hermitian(q.pair.h2, t0, "h2")
    h1_rot = u2.conj().T @ q.pair.h1 @ u2
    mean = (t0 / T) * np.real(np.einsum("ij,ij->j", v.conj(), q.pair.h2 @ v)) + (
        (T - t0) / T
    ) * np.real(np.einsum("ij,ij->j", v.conj(), h1_rot @ v))
    phases = (mean - eps) * T
    return FloquetSolution(
        quasienergies=eps,
        modes0=v,
        mean_energies=mean,
        geometric_phases=phases,
        protocol=q,
    )


def _state_path(q, phi0, ts):
    """Columns U(t, 0) phi0 for each t in ts, via the spectral form."""
    dec2 = eig_hermitian(q.pair.h2, "h2")
    dec1 = eig_hermitian(q.pair.h1, "h1")
    ts = np.asarray(ts, dtype=float)
    out = np.empty((phi0.size, ts.size), dtype=complex)
    early = ts < q.t0
    if np.any(early):
        amp2 = dec2.eigenvectors.conj().T @ phi0
        ph = np.exp(-1j * np.outer(dec2.eigenvalues, ts[early]))
        out[:, early] = dec2.eigenvectors @ (ph * amp2[:, None])
    if np.any(~early):
        chi = expm_i_hermitian(q.pair.h2, q.t0, "h2") @ phi0
        amp1 = dec1.eigenvectors.conj().T @ chi
        ph = np.exp(-1j * np.outer(dec1.eigenvalues, ts[~early] - q.t0))
        out[:, ~early] = dec1.eigenvectors @ (ph * amp1[:, None])
    return out


def floquet_mode_at(sol, j, t):
    """Floquet mode |Phi_j(t)> = e^{i t eps_j} U(t, 0) |Phi_j(0)>."""
    dim = sol.modes0.shape[0]
    if not 0 <= j < dim:
        raise IndexError(f"mode index {j} out of range for dimension {dim}")
    q = sol.protocol
    if not 0.0 <= t <= q.period:
        raise ValueError(f"time must lie in [0, {q.period}], got {t}")
    psi = _state_path(q, sol.modes0[:, j], [t])[:, 0]
    return np.exp(1j * t * sol.quasienergies[j]) * psi


def mean_energy_quadrature_check(sol, j, steps):
    """Composite-midpoint time average of <Phi_j(t)| H(t) |Phi_j(t)>.

    The partition is split at t0 so each piece sees a time-independent
    Hamiltonian; step counts are allotted proportionally to piece length.
    Converges to sol.mean_energies[j] and exists as a cross-check only.
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    q = sol.protocol
    t0, T = q.t0, q.period
    phi0 = sol.modes0[:, j]
    total = 0.0
    if t0 > 0 and t0 < T:
        n2 = min(max(int(round(steps * t0 / T)), 1), steps - 1)
    elif t0 == 0:
        n2 = 0
    else:
        n2 = steps
    pieces = []
    if n2 > 0:
        pieces.append((0.0, t0, n2, q.pair.h2))
    if n2 < steps:
        pieces.append((t0, T, steps - n2, q.pair.h1))
    for lo, hi, n, h in pieces:
        dt = (hi - lo) / n
        mids = lo + dt * (np.arange(n) + 0.5)
        psi = _state_path(q, phi0, mids)
        vals = np.real(np.einsum("ij,ij->j", psi.conj(), h @ psi))
        total += dt * np.sum(vals)
    return total / T


def geometric_phase_quadrature_check(sol, j, steps):
    """Discrete Berry phase -Im sum_k log <Phi_j(t_k)|Phi_j(t_{k+1})>.

    Uses a uniform closed partition of [0, T]; gauge-invariant because the
    trajectory returns to its start. Converges to sol.geometric_phases[j].
    """
    if steps < 8:
        raise ValueError(f"steps must be >= 8, got {steps}")
    q = sol.protocol
    ts = np.linspace(0.0, q.period, steps + 1)
    psi = _state_path(q, sol.modes0[:, j], ts)
    modes = psi * np.exp(1j * sol.quasienergies[j] * ts)[None, :]
    ov = np.einsum("ij,ij->j", modes[:, :-1].conj(), modes[:, 1:])
    small = np.abs(ov).min()
    if small < 1e-6:
        raise ArithmeticError(
            f"overlap magnitude {small:.3e} below 1e-6, partition too coarse"
        )
    return float(-np.sum(np.log(ov)).imag)


def two_time_correlator(sol, observable):
    """f_j = <Phi_j(0)| U(T,0)^dag O U(T,0) O |Phi_j(0)> in hbar^2 units."""
    obs = require_hermitian(observable, "observable")
    dim = sol.modes0.shape[0]
    if obs.shape[0] != dim:
        raise ValueError(
            f"observable dimension {obs.shape[0]} does not match modes dimension {dim}"
        )
    u = monodromy(sol.protocol)
    heis = u.conj().T @ obs @ u @ obs
    vals = np.einsum("ij,ij->j", sol.modes0.conj(), heis @ sol.modes0)
    return CorrelatorResult(values=vals)
