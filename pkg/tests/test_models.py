import numpy as np
import pytest

from floquench.linalg import commutator, eig_hermitian
from floquench.models import (
    AtomDiatomParams,
    LmgParams,
    atom_diatom_pair,
    collective_spin_ops,
    lmg_pair,
    static_hamiltonian,
    static_spectrum,
)

from oracles import eigh_jacobi


def test_spin_half_matrices():
    sx, sy, sz = collective_spin_ops(1)
    assert np.allclose(sx, [[0.0, 0.5], [0.5, 0.0]])
    assert np.allclose(sy, [[0.0, 0.5j], [-0.5j, 0.0]])
    assert np.allclose(sz, np.diag([-0.5, 0.5]))


def test_spin_one_algebra():
    sx, sy, sz = collective_spin_ops(2)
    assert np.max(np.abs(commutator(sx, sy) - 1j * sz)) < 1e-12


def test_spin_algebra_large_sectors():
    for n in (10, 50):
        sx, sy, sz = collective_spin_ops(n)
        assert np.max(np.abs(commutator(sx, sy) - 1j * sz)) < 1e-12
        assert np.max(np.abs(commutator(sy, sz) - 1j * sx)) < 1e-12
        assert np.max(np.abs(commutator(sz, sx) - 1j * sy)) < 1e-12


def test_spin_traceless():
    for n in (1, 2, 7, 20):
        sx, _, sz = collective_spin_ops(n)
        assert abs(np.trace(sx)) < 1e-12
        assert abs(np.trace(sz)) < 1e-12


def test_spin_rejects_bad_n():
    with pytest.raises(ValueError):
        collective_spin_ops(0)


def test_lmg_level_spacing():
    pair = lmg_pair(LmgParams(n=20))
    w = eig_hermitian(pair.h1).eigenvalues
    assert np.allclose(np.diff(w), 0.05)
    assert pair.dim == 21
    assert pair.observable_sx is not None


def test_lmg_spectral_spreads():
    # both spreads equal one energy quantum, which pins t_c downstream
    pair = lmg_pair(LmgParams(n=20))
    w1 = eig_hermitian(pair.h1).eigenvalues
    w2 = eig_hermitian(pair.h2).eigenvalues
    assert w1[-1] - w1[0] == pytest.approx(1.0, abs=1e-12)
    assert w2[-1] - w2[0] == pytest.approx(1.0, abs=1e-12)


def test_lmg_small_quadratic_spectrum():
    # closed form -omega m^2 / S^2 for m = -2..2
    pair = lmg_pair(LmgParams(n=4))
    w = eig_hermitian(pair.h2).eigenvalues
    assert np.allclose(w, sorted([-1.0, -0.25, 0.0, -0.25, -1.0]), atol=1e-12)


def test_lmg_quadratic_trace():
    pair = lmg_pair(LmgParams(n=12))
    s = 6.0
    m = np.arange(-s, s + 1)
    assert np.trace(pair.h2).real == pytest.approx(np.sum(-(m**2)) / s**2, abs=1e-12)


def test_lmg_rejects_odd_or_small_n():
    with pytest.raises(ValueError, match="even"):
        LmgParams(n=7)
    with pytest.raises(ValueError, match="even"):
        LmgParams(n=0)


def test_atom_diatom_diagonal_entries():
    pair = atom_diatom_pair(AtomDiatomParams(m=20))
    nb = np.arange(11)
    assert pair.dim == 11
    assert np.allclose(np.diag(pair.h1), 1.0 - nb / 20.0)
    w = np.diag(pair.h1)
    assert w.max() - w.min() == pytest.approx(0.5)


def test_atom_diatom_smallest_sector():
    pair = atom_diatom_pair(AtomDiatomParams(m=2))
    assert pair.dim == 2
    assert pair.h2[1, 0] == pytest.approx(0.5)
    assert pair.observable_sx is None


def test_atom_diatom_bandwidth_one():
    pair = atom_diatom_pair(AtomDiatomParams(m=20))
    off = pair.h2.copy()
    off[np.arange(10), np.arange(1, 11)] = 0.0
    off[np.arange(1, 11), np.arange(10)] = 0.0
    assert np.max(np.abs(off)) == 0.0
    assert np.max(np.abs(np.diag(pair.h2))) == 0.0


def test_atom_diatom_rejects_odd_m():
    with pytest.raises(ValueError, match="even"):
        AtomDiatomParams(m=9)


def test_static_endpoints():
    pair = lmg_pair(LmgParams(n=8))
    assert np.array_equal(static_hamiltonian(pair, 0.0), pair.h1)
    assert np.array_equal(static_hamiltonian(pair, 1.0), pair.h2)


def test_static_affine_in_xi():
    pair = lmg_pair(LmgParams(n=10))
    rng = np.random.default_rng(5)
    for _ in range(5):
        xa, xb = rng.uniform(0, 0.5, size=2)
        lhs = static_hamiltonian(pair, xa) + static_hamiltonian(pair, xb)
        rhs = static_hamiltonian(pair, xa + xb) + static_hamiltonian(pair, 0.0)
        assert np.max(np.abs(lhs - rhs)) < 1e-14


def test_static_rejects_xi_out_of_range():
    pair = lmg_pair(LmgParams(n=4))
    with pytest.raises(ValueError, match=r"\[0, 1\]"):
        static_hamiltonian(pair, 1.2)


def test_static_spectrum_diagonal_limit():
    w = static_spectrum(lmg_pair(LmgParams(n=20)), 0.0)
    assert np.allclose(w - w[0], np.arange(21) * 0.05)


def test_static_spectrum_matches_jacobi_oracle():
    pair = lmg_pair(LmgParams(n=20))
    h = static_hamiltonian(pair, 0.5)
    w = static_spectrum(pair, 0.5)
    wj, vj = eigh_jacobi(h)
    assert np.max(np.abs(w - wj)) < 1e-9
    assert np.max(np.abs(h @ vj - vj * wj[None, :])) < 1e-9


def test_static_ground_gap_flattens_past_transition():
    # the lowest excitation shrinks once the quadratic term dominates
    pair = lmg_pair(LmgParams(n=20))
    gap0 = np.diff(static_spectrum(pair, 0.0))[0]
    gap_broken = np.diff(static_spectrum(pair, 0.4))[0]
    assert gap_broken < 0.2 * gap0


def test_hermiticity_of_constructed_operators():
    for pair in (
        lmg_pair(LmgParams(n=30)),
        atom_diatom_pair(AtomDiatomParams(m=14)),
    ):
        for h in (pair.h1, pair.h2):
            assert np.max(np.abs(h - h.conj().T)) < 1e-12
