"""Validity diagnostics and phase-transition markers.

Characteristic times bound the period below which the stroboscopic
dynamics tracks the static interpolated Hamiltonian; the commutator term
quantifies the leading error of that identification, and the deviation
metric measures it directly on a quench-time grid. The transition markers
read the ground-state transition off the correlator order parameter and
the excited-state transition off the pairwise-degeneracy structure of the
quasienergy spectrum.
"""

from dataclasses import dataclass

import numpy as np

from .floquet import QuenchProtocol, floquet_solve, two_time_correlator
from .linalg import commutator, eig_hermitian, spectral_norm
from .models import static_hamiltonian

# a doublet region exists when the smallest even-index gap is this far
# below the largest one
DOUBLET_RATIO = 0.01


@dataclass(frozen=True)
class CharacteristicTimes:
    """Validity time scales and the spectral extrema they derive from."""

    t_c: float
    t_c_prime: float
    e1_max: float
    e1_min: float
    e2_max: float
    e2_min: float


@dataclass(frozen=True)
class BchBoundReport:
    """Sampled commutator-term norms against the (T / t_c)^2 bound."""

    period: float
    bound: float
    max_norm: float
    argmax_t0: float
    t0_grid: np.ndarray
    norms: np.ndarray


@dataclass(frozen=True)
class DeviationReport:
    """Maximum Floquet-vs-static deviation over a quench-time grid."""

    period: float
    mode: str
    zone_policy: str
    d_value: float
    argmax_state: int
    argmax_t0: float


@dataclass(frozen=True)
class EsqptResult:
    """Even-index gap structure of one quasienergy column.

    critical_excitation is None when the column shows no pairwise
    degeneracy, i.e. no separatrix crosses it.
    """

    critical_excitation: float | None
    excitations: np.ndarray
    even_indices: np.ndarray
    even_gaps: np.ndarray
    re_profile: np.ndarray | None

    @property
    def detected(self):
        return self.critical_excitation is not None


def characteristic_times(pair):
    """Spread-based time t_c and norm-based time t_c_prime of the pair."""
    w1 = eig_hermitian(pair.h1, "h1").eigenvalues
    w2 = eig_hermitian(pair.h2, "h2").eigenvalues
    spread = (w1[-1] - w1[0]) * (w2[-1] - w2[0])
    if spread <= 0:
        raise ValueError("both Hamiltonians need a nonzero spectral spread")
    peak = max(abs(w1[-1]), abs(w1[0]), abs(w2[-1]), abs(w2[0]))
    return CharacteristicTimes(
        t_c=4.0 / np.sqrt(spread),
        t_c_prime=1.0 / peak,
        e1_max=float(w1[-1]),
        e1_min=float(w1[0]),
        e2_max=float(w2[-1]),
        e2_min=float(w2[0]),
    )


def bch_delta(pair, t0, period):
    """Leading commutator term -((T - t0) t0 / 2) [h1, h2] of the
    stroboscopic expansion."""
    if not 0.0 <= t0 <= period:
        raise ValueError(f"quench time must lie in [0, {period}], got {t0}")
    return -((period - t0) * t0 / 2.0) * commutator(pair.h1, pair.h2)


def bch_bound_check(pair, period, t0_grid):
    """Verify ||Delta(t0)||_2 <= (T / t_c)^2 on every sample.

    The inequality is a theorem, so a violation is raised as a hard
    failure rather than reported in the result.
    """
    t0_grid = np.asarray(t0_grid, dtype=float)
    if t0_grid.size == 0:
        raise ValueError("quench-time grid must be nonempty")
    ct = characteristic_times(pair)
    bound = (period / ct.t_c) ** 2
    norms = np.array([spectral_norm(bch_delta(pair, t0, period)) for t0 in t0_grid])
    worst = int(np.argmax(norms))
    if norms[worst] > bound:
        raise ArithmeticError(
            f"commutator bound violated: ||Delta||_2 = {norms[worst]:.6e} > "
            f"(T/t_c)^2 = {bound:.6e} at t0 = {t0_grid[worst]}"
        )
    return BchBoundReport(
        period=period,
        bound=bound,
        max_norm=float(norms[worst]),
        argmax_t0=float(t0_grid[worst]),
        t0_grid=t0_grid,
        norms=norms,
    )


def _overlap_assignment(static_vecs, modes0):
    """Greedy one-to-one pairing by descending |<phi_n|Phi_j>|^2.

    Returns assign with assign[n] = j, the Floquet mode paired with static
    level n.
    """
    ov = np.abs(static_vecs.conj().T @ modes0) ** 2
    dim = ov.shape[0]
    flat = np.argsort(-ov, axis=None, kind="stable")
    assign = np.full(dim, -1)
    row_used = np.zeros(dim, dtype=bool)
    col_used = np.zeros(dim, dtype=bool)
    left = dim
    for pos in flat:
        r, c = divmod(int(pos), dim)
        if row_used[r] or col_used[c]:
            continue
        assign[r] = c
        row_used[r] = True
        col_used[c] = True
        left -= 1
        if left == 0:
            break
    return assign


def _deviation_terms(pair, period, t0):
    """Per-state |floquet - static| differences for one quench time.

    Returns the four arrays (restricted quasi, restricted mean, extended
    quasi, extended mean). Restricted pairs by sorted index; extended
    pairs by overlap and unfolds each quasienergy into the Brillouin zone
    copy nearest its static partner.
    """
    sol = floquet_solve(QuenchProtocol(pair, t0, period))
    dec = eig_hermitian(static_hamiltonian(pair, t0 / period), "static hamiltonian")
    ws = dec.eigenvalues
    d_rq = np.abs(sol.quasienergies - ws)
    d_rm = np.abs(sol.mean_energies - ws)
    assign = _overlap_assignment(dec.eigenvectors, sol.modes0)
    zone = 2.0 * np.pi / period
    eps = sol.quasienergies[assign]
    k = np.round((ws - eps) / zone)
    d_eq = np.abs(eps + k * zone - ws)
    d_em = np.abs(sol.mean_energies[assign] - ws)
    return d_rq, d_rm, d_eq, d_em


def unfolded_solution(pair, period, t0):
    """Floquet solution relabeled by static level with unfolded quasienergies.

    Pairs each static eigenstate with a Floquet mode by overlap, then
    shifts each quasienergy by the zone width multiple that lands it
    nearest its static partner. Rows follow the static (ascending energy)
    order, which keeps curves continuous when folding scrambles the
    first-zone sort.
    """
    sol = floquet_solve(QuenchProtocol(pair, t0, period))
    dec = eig_hermitian(static_hamiltonian(pair, t0 / period), "static hamiltonian")
    assign = _overlap_assignment(dec.eigenvectors, sol.modes0)
    zone = 2.0 * np.pi / period
    eps = sol.quasienergies[assign]
    k = np.round((dec.eigenvalues - eps) / zone)
    return eps + k * zone, sol.mean_energies[assign], sol.geometric_phases[assign]


def deviation_metric(pair, period, t0_grid, mode="quasienergy", zone_policy="restricted"):
    """Maximum deviation D(T) over states and quench times."""
    if mode not in ("quasienergy", "mean_energy"):
        raise ValueError(f"unknown mode {mode!r}")
    if zone_policy not in ("restricted", "extended"):
        raise ValueError(f"unknown zone policy {zone_policy!r}")
    t0_grid = np.asarray(t0_grid, dtype=float)
    if t0_grid.size == 0:
        raise ValueError("quench-time grid must be nonempty")
    which = {
        ("quasienergy", "restricted"): 0,
        ("mean_energy", "restricted"): 1,
        ("quasienergy", "extended"): 2,
        ("mean_energy", "extended"): 3,
    }[(mode, zone_policy)]
    best = -1.0
    argmax_state = 0
    argmax_t0 = float(t0_grid[0])
    for t0 in t0_grid:
        diffs = _deviation_terms(pair, period, t0)[which]
        n = int(np.argmax(diffs))
        if diffs[n] > best:
            best = float(diffs[n])
            argmax_state = n
            argmax_t0 = float(t0)
    return DeviationReport(
        period=period,
        mode=mode,
        zone_policy=zone_policy,
        d_value=best,
        argmax_state=argmax_state,
        argmax_t0=argmax_t0,
    )


def deviation_summary(pair, period, t0_grid):
    """The three deviation maxima (restricted quasi, extended quasi,
    extended mean) sharing one Floquet solve per grid point."""
    t0_grid = np.asarray(t0_grid, dtype=float)
    if t0_grid.size == 0:
        raise ValueError("quench-time grid must be nonempty")
    d_rq = d_eq = d_em = 0.0
    for t0 in t0_grid:
        rq, _, eq, em = _deviation_terms(pair, period, t0)
        d_rq = max(d_rq, float(np.max(rq)))
        d_eq = max(d_eq, float(np.max(eq)))
        d_em = max(d_em, float(np.max(em)))
    return d_rq, d_eq, d_em


def gsqpt_scan(pair, period, t0_grid):
    """Re f_0 of the lowest-quasienergy mode across the quench-time grid.

    Returns an array of rows (t0 / T, Re f_0).
    """
    if pair.observable_sx is None:
        raise ValueError(f"model {pair.label!r} has no order-parameter observable")
    t0_grid = np.asarray(t0_grid, dtype=float)
    if t0_grid.size == 0:
        raise ValueError("quench-time grid must be nonempty")
    rows = np.empty((t0_grid.size, 2))
    for i, t0 in enumerate(t0_grid):
        sol = floquet_solve(QuenchProtocol(pair, t0, period))
        f = two_time_correlator(sol, pair.observable_sx).values
        rows[i] = (t0 / period, f[0].real)
    return rows


def gsqpt_crossing(scan, rel_threshold=0.05):
    """First t0/T where |Re f_0| reaches rel_threshold of the scan maximum."""
    mags = np.abs(scan[:, 1])
    thr = rel_threshold * np.max(mags)
    hits = np.flatnonzero(mags >= thr)
    return float(scan[hits[0], 0]) if hits.size else None


def correlator_roughness(values):
    """Largest discrete second difference of a profile, relative to its
    largest magnitude. Small values mean the profile is smooth."""
    values = np.asarray(values, dtype=float)
    if values.size < 3:
        return 0.0
    scale = np.max(np.abs(values))
    if scale == 0:
        return 0.0
    return float(np.max(np.abs(np.diff(values, 2))) / scale)


def esqpt_locate(pair, period, t0):
    """Critical excitation quasienergy of the separatrix crossing one column.

    Below the separatrix the spectrum forms near-degenerate pairs, so the
    even-index gaps eps_{n+1} - eps_n sit at the splitting floor and then
    open up across it. The estimate places n* at the top of the steepest
    rise of that even-gap profile and returns eps_{n*+1} - eps_0. When the
    profile has no near-degenerate region there is no separatrix and
    critical_excitation is None.
    """
    sol = floquet_solve(QuenchProtocol(pair, t0, period))
    eps = sol.quasienergies
    dim = eps.size
    even = np.arange(0, dim - 1, 2)
    gaps = eps[even + 1] - eps[even]
    profile = None
    if pair.observable_sx is not None:
        profile = two_time_correlator(sol, pair.observable_sx).values.real
    critical = None
    if gaps.size >= 2 and np.min(gaps) < DOUBLET_RATIO * np.max(gaps):
        rise = np.diff(gaps)
        nstar = int(even[int(np.argmax(rise)) + 1])
        critical = float(eps[nstar + 1] - eps[0])
    return EsqptResult(
        critical_excitation=critical,
        excitations=eps - eps[0],
        even_indices=even,
        even_gaps=gaps,
        re_profile=profile,
    )
