"""Floquet analysis of periodically quenched two-Hamiltonian protocols.

The drive alternates between two non-commuting Hamiltonians inside each
period. This package builds the model pairs, diagonalizes the one-period
evolution operator, and extracts quasienergies, mean energies, geometric
phases, and a two-time correlator that serves as a phase-transition order
parameter, together with the validity bounds that tie the driven spectrum
to its static counterpart. Units: hbar = 1, energies in units of the
model frequency, times in its inverse.
"""

from .analysis import (
    BchBoundReport,
    CharacteristicTimes,
    DeviationReport,
    EsqptResult,
    bch_bound_check,
    bch_delta,
    characteristic_times,
    correlator_roughness,
    deviation_metric,
    deviation_summary,
    esqpt_locate,
    gsqpt_crossing,
    gsqpt_scan,
    unfolded_solution,
)
from .floquet import (
    CorrelatorResult,
    FloquetSolution,
    QuenchProtocol,
    floquet_mode_at,
    floquet_solve,
    geometric_phase_quadrature_check,
    mean_energy_quadrature_check,
    monodromy,
    propagator,
    two_time_correlator,
)
from .linalg import (
    SpectralDecomposition,
    UnitaryEigenDecomposition,
    commutator,
    eig_hermitian,
    eig_unitary,
    expm_i_hermitian,
    spectral_norm,
)
from .models import (
    AtomDiatomParams,
    LmgParams,
    ModelPair,
    atom_diatom_pair,
    collective_spin_ops,
    lmg_pair,
    static_hamiltonian,
    static_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "AtomDiatomParams",
    "BchBoundReport",
    "CharacteristicTimes",
    "CorrelatorResult",
    "DeviationReport",
    "EsqptResult",
    "FloquetSolution",
    "LmgParams",
    "ModelPair",
    "QuenchProtocol",
    "SpectralDecomposition",
    "UnitaryEigenDecomposition",
    "atom_diatom_pair",
    "bch_bound_check",
    "bch_delta",
    "characteristic_times",
    "collective_spin_ops",
    "commutator",
    "correlator_roughness",
    "deviation_metric",
    "deviation_summary",
    "eig_hermitian",
    "eig_unitary",
    "esqpt_locate",
    "expm_i_hermitian",
    "floquet_mode_at",
    "floquet_solve",
    "geometric_phase_quadrature_check",
    "gsqpt_crossing",
    "gsqpt_scan",
    "lmg_pair",
    "mean_energy_quadrature_check",
    "monodromy",
    "propagator",
    "spectral_norm",
    "static_hamiltonian",
    "static_spectrum",
    "two_time_correlator",
    "unfolded_solution",
]
