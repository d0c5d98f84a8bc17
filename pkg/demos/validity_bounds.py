"""Commutator bound on the stroboscopic expansion's leading correction.

The first Magnus correction to the effective Hamiltonian is
Delta(t0) = -((T - t0) t0 / 2) [H1, H2], and its spectral norm obeys
||Delta||_2 <= (T/T_c)^2 with T_c the characteristic time built from the
spectral spreads. This demo plots ||Delta(t0)||_2 against the bound for
several periods and prints the worst margin; the bound is a theorem, so
the curves must stay below it for every model.

Run: python3 demos/validity_bounds.py
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from floquench.analysis import bch_bound_check, characteristic_times
from floquench.models import (
    AtomDiatomParams,
    LmgParams,
    atom_diatom_pair,
    lmg_pair,
)

cases = [
    ("collective spin N = 20", lmg_pair(LmgParams(n=20))),
    ("atom-diatom M = 20", atom_diatom_pair(AtomDiatomParams(m=20))),
]
periods = (0.25, 1.0, 4.0)

fig, axes = plt.subplots(1, len(cases), figsize=(9.0, 4.0))
for ax, (name, pair) in zip(axes, cases):
    ct = characteristic_times(pair)
    worst = 0.0
    for period in periods:
        rep = bch_bound_check(pair, period, np.linspace(0.0, period, 101))
        ax.plot(rep.t0_grid / period, rep.norms / rep.bound, lw=1.0,
                label=f"T = {period}/$\\Omega$")
        worst = max(worst, rep.max_norm / rep.bound)
    ax.axhline(1.0, color="k", lw=0.8, ls="--")
    ax.set_xlabel(r"$t_0/T$")
    ax.set_ylabel(r"$\|\Delta\|_2 \,/\, (T/T_c)^2$")
    ax.set_title(f"{name}, $T_c$ = {ct.t_c:.3f}")
    ax.legend(fontsize=8)
    print(f"{name}: worst margin {worst:.3f} of the bound "
          f"(t_c = {ct.t_c:.4f}, t_c' = {ct.t_c_prime:.4f})")
fig.tight_layout()
fig.savefig("validity_bounds.png", dpi=150)
print("wrote validity_bounds.png")
