"""Configuration-driven command-line front end.

Commands sweep the model over a quench-time or period grid and emit CSV
with fixed headers and 12-significant-digit lowercase scientific numbers.
All rows are assembled in memory in grid order before anything is
written, so output is byte-identical for any thread count and no partial
files appear on failure. Exit codes: 0 success, 2 configuration error,
3 numerical failure.
"""

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import analysis
from .floquet import QuenchProtocol, floquet_solve, two_time_correlator
from .models import (
    AtomDiatomParams,
    LmgParams,
    atom_diatom_pair,
    lmg_pair,
    static_spectrum,
)


class ConfigError(Exception):
    pass


HEADER_STATIC = "xi,n,parity,excitation_energy_hbar_omega"
HEADER_FLOQUET = (
    "t0_over_T,n,parity,quasienergy_diff_hbar_omega,"
    "mean_energy_diff_hbar_omega,geometric_phase_rad"
)
HEADER_CORRELATOR = "t0_over_T,n,quasienergy_diff_hbar_omega,re_correlator_hbar_sq"
HEADER_DEVIATION = "T_over_Tc,d_quasi_restricted,d_quasi_extended,d_mean"

DEFAULTS = {
    "model.kind": "lmg",
    "model.n": "20",
    "model.m": "20",
    "model.omega0": "2.0",
    "model.omega": "1.0",
    "model.coupling": "1.0",
    "sweep.period": "1.0",
    "sweep.points": "201",
    "sweep.slices": "0.1,0.4,0.6",
    "sweep.zone": "restricted",
    "sweep.t_min": "0.1",
    "sweep.t_max": "4.5",
    "sweep.t_points": "60",
    "run.threads": "1",
    "run.out": ".",
    "run.seed": "",
}

FLAG_TO_KEY = {
    "model": "model.kind",
    "n": "model.n",
    "m": "model.m",
    "period": "sweep.period",
    "points": "sweep.points",
    "slices": "sweep.slices",
    "zone": "sweep.zone",
    "threads": "run.threads",
    "out": "run.out",
    "seed": "run.seed",
}


def fmt(x):
    """12 significant digits, lowercase scientific."""
    return f"{x:.11e}"


def parse_config_file(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(
                f"{path}:{lineno}: expected 'section.key = value', got {raw.strip()!r}"
            )
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in DEFAULTS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        entries[key] = value
    return entries


def _to_int(raw, key):
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"key {key!r}: expected integer, got {raw!r}") from None


def _to_float(raw, key):
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"key {key!r}: expected number, got {raw!r}") from None


class RunConfig:
    """Typed view of the merged defaults, config file, and flag overrides."""

    def __init__(self, entries):
        self.kind = entries["model.kind"]
        if self.kind not in ("lmg", "atom-diatom"):
            raise ConfigError(f"key 'model.kind': unknown model {self.kind!r}")
        self.n = _to_int(entries["model.n"], "model.n")
        self.m = _to_int(entries["model.m"], "model.m")
        self.omega0 = _to_float(entries["model.omega0"], "model.omega0")
        self.omega = _to_float(entries["model.omega"], "model.omega")
        self.coupling = _to_float(entries["model.coupling"], "model.coupling")
        self.period = _to_float(entries["sweep.period"], "sweep.period")
        self.points = _to_int(entries["sweep.points"], "sweep.points")
        self.zone = entries["sweep.zone"]
        self.t_min = _to_float(entries["sweep.t_min"], "sweep.t_min")
        self.t_max = _to_float(entries["sweep.t_max"], "sweep.t_max")
        self.t_points = _to_int(entries["sweep.t_points"], "sweep.t_points")
        self.threads = _to_int(entries["run.threads"], "run.threads")
        self.out = entries["run.out"]
        self.seed = (
            _to_int(entries["run.seed"], "run.seed") if entries["run.seed"] else None
        )
        raw_slices = entries["sweep.slices"]
        try:
            self.slices = [float(s) for s in raw_slices.split(",") if s.strip()]
        except ValueError:
            raise ConfigError(
                f"key 'sweep.slices': expected comma-separated numbers, got {raw_slices!r}"
            ) from None
        if self.period <= 0:
            raise ConfigError(f"key 'sweep.period': must be positive, got {self.period}")
        if self.points < 2:
            raise ConfigError(f"key 'sweep.points': must be >= 2, got {self.points}")
        if self.zone not in ("restricted", "extended"):
            raise ConfigError(f"key 'sweep.zone': unknown policy {self.zone!r}")
        if not 0 < self.t_min < self.t_max:
            raise ConfigError(
                f"keys 'sweep.t_min'/'sweep.t_max': need 0 < t_min < t_max, "
                f"got {self.t_min} and {self.t_max}"
            )
        if self.t_points < 2:
            raise ConfigError(f"key 'sweep.t_points': must be >= 2, got {self.t_points}")
        if self.threads < 1:
            raise ConfigError(f"key 'run.threads': must be >= 1, got {self.threads}")
        for s in self.slices:
            if not 0.0 <= s <= 1.0:
                raise ConfigError(f"key 'sweep.slices': slice {s} outside [0, 1]")

    def build_pair(self):
        try:
            if self.kind == "lmg":
                return lmg_pair(LmgParams(n=self.n))
            return atom_diatom_pair(
                AtomDiatomParams(
                    m=self.m,
                    omega0=self.omega0,
                    omega=self.omega,
                    coupling=self.coupling,
                )
            )
        except ValueError as exc:
            raise ConfigError(f"invalid model parameters: {exc}") from exc


def load_config(args):
    entries = dict(DEFAULTS)
    if args.config is not None:
        entries.update(parse_config_file(args.config))
    for flag, key in FLAG_TO_KEY.items():
        value = getattr(args, flag.replace("-", "_"), None)
        if value is not None:
            entries[key] = str(value)
    return RunConfig(entries)


def _parallel_blocks(worker, count, threads):
    """Evaluate worker(i) for i in range(count), preserving index order."""
    if threads == 1:
        return [worker(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(worker, range(count)))


def _write_all(files):
    for path, text in files.items():
        path.parent.mkdir(parents=True, exist_ok=True)
        try:
            path.write_text(text)
        except OSError as exc:
            raise ConfigError(f"cannot write output file {path}: {exc}") from exc


def cmd_static(cfg):
    pair = cfg.build_pair()
    xis = np.linspace(0.0, 1.0, cfg.points)

    def block(i):
        w = static_spectrum(pair, xis[i])
        parity = ["even", "odd"]
        return [
            f"{fmt(xis[i])},{n},{parity[n % 2]},{fmt(w[n] - w[0])}"
            for n in range(pair.dim)
        ]

    blocks = _parallel_blocks(block, cfg.points, cfg.threads)
    lines = [HEADER_STATIC] + [row for b in blocks for row in b]
    _write_all({Path(cfg.out) / "static.csv": "\n".join(lines) + "\n"})


def _floquet_columns(pair, period, t0, zone):
    if zone == "extended":
        eps, mean, phases = analysis.unfolded_solution(pair, period, t0)
    else:
        sol = floquet_solve(QuenchProtocol(pair, t0, period))
        eps, mean, phases = sol.quasienergies, sol.mean_energies, sol.geometric_phases
    return eps, mean, phases


def cmd_floquet(cfg):
    pair = cfg.build_pair()
    fracs = np.linspace(0.0, 1.0, cfg.points)

    def block(i):
        t0 = fracs[i] * cfg.period
        eps, mean, phases = _floquet_columns(pair, cfg.period, t0, cfg.zone)
        parity = ["even", "odd"]
        return [
            f"{fmt(fracs[i])},{n},{parity[n % 2]},{fmt(eps[n] - eps[0])},"
            f"{fmt(mean[n] - mean[0])},{fmt(phases[n])}"
            for n in range(pair.dim)
        ]

    blocks = _parallel_blocks(block, cfg.points, cfg.threads)
    lines = [HEADER_FLOQUET] + [row for b in blocks for row in b]
    _write_all({Path(cfg.out) / "floquet.csv": "\n".join(lines) + "\n"})


def _correlator_rows(pair, period, frac):
    sol = floquet_solve(QuenchProtocol(pair, frac * period, period))
    f = two_time_correlator(sol, pair.observable_sx).values
    eps = sol.quasienergies
    return [
        f"{fmt(frac)},{n},{fmt(eps[n] - eps[0])},{fmt(f[n].real)}"
        for n in range(pair.dim)
    ]


def cmd_correlator(cfg):
    pair = cfg.build_pair()
    if pair.observable_sx is None:
        raise ConfigError(
            f"model {pair.label!r} has no order-parameter observable; "
            "the correlator command needs one"
        )
    fracs = np.linspace(0.0, 1.0, cfg.points)
    blocks = _parallel_blocks(
        lambda i: _correlator_rows(pair, cfg.period, fracs[i]), cfg.points, cfg.threads
    )
    files = {
        Path(cfg.out)
        / "correlator.csv": "\n".join(
            [HEADER_CORRELATOR] + [row for b in blocks for row in b]
        )
        + "\n"
    }
    for s in cfg.slices:
        rows = _correlator_rows(pair, cfg.period, s)
        files[Path(cfg.out) / f"correlator_t0_{s:g}.csv"] = (
            "\n".join([HEADER_CORRELATOR] + rows) + "\n"
        )
    _write_all(files)


def cmd_deviation(cfg):
    pair = cfg.build_pair()
    ct = analysis.characteristic_times(pair)
    periods = np.linspace(cfg.t_min, cfg.t_max, cfg.t_points)

    def row(i):
        grid = np.linspace(0.0, periods[i], cfg.points)
        d_rq, d_eq, d_em = analysis.deviation_summary(pair, periods[i], grid)
        return f"{fmt(periods[i] / ct.t_c)},{fmt(d_rq)},{fmt(d_eq)},{fmt(d_em)}"

    rows = _parallel_blocks(row, cfg.t_points, cfg.threads)
    marks = {
        "t_c": ct.t_c,
        "t_c_prime": ct.t_c_prime,
        "reference_periods": [
            {"label": "T_c/4", "period": ct.t_c / 4, "T_over_Tc": 0.25},
            {"label": "pi*T_c/4", "period": np.pi * ct.t_c / 4, "T_over_Tc": np.pi / 4},
            {"label": "T_c", "period": ct.t_c, "T_over_Tc": 1.0},
        ],
    }
    _write_all(
        {
            Path(cfg.out) / "deviation.csv": "\n".join([HEADER_DEVIATION] + rows) + "\n",
            Path(cfg.out) / "deviation_marks.json": json.dumps(marks, indent=2) + "\n",
        }
    )


def cmd_info(cfg):
    pair = cfg.build_pair()
    ct = analysis.characteristic_times(pair)
    ratio_c = cfg.period / ct.t_c
    ratio_p = cfg.period / ct.t_c_prime
    zone_ok = ratio_p <= np.pi
    lines = [
        f"model: {pair.label} (dimension {pair.dim})",
        f"period T = {cfg.period:.12g} (units 1/Omega)",
        f"t_c = {ct.t_c:.12g} (units 1/Omega)",
        f"t_c_prime = {ct.t_c_prime:.12g} (units 1/Omega)",
        f"T / t_c = {ratio_c:.12g}",
        f"T / t_c_prime = {ratio_p:.12g}",
        f"zone condition T / t_c_prime <= pi: {'pass' if zone_ok else 'FAIL'}",
    ]
    if not zone_ok:
        lines.append(
            "warning: the period exceeds pi * t_c_prime, so quasienergies fold "
            "out of the first Brillouin zone"
        )
    print("\n".join(lines))
    summary = {
        "model": pair.label,
        "dimension": pair.dim,
        "period": cfg.period,
        "t_c": ct.t_c,
        "t_c_prime": ct.t_c_prime,
        "ratio_t_c": ratio_c,
        "ratio_t_c_prime": ratio_p,
        "zone_condition_pass": bool(zone_ok),
        "spectral_extrema": {
            "e1_max": ct.e1_max,
            "e1_min": ct.e1_min,
            "e2_max": ct.e2_max,
            "e2_min": ct.e2_min,
        },
    }
    _write_all({Path(cfg.out) / "info.json": json.dumps(summary, indent=2) + "\n"})


COMMANDS = {
    "static": cmd_static,
    "floquet": cmd_floquet,
    "correlator": cmd_correlator,
    "deviation": cmd_deviation,
    "info": cmd_info,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="floquench",
        description="Quench-protocol sweeps: static spectra, Floquet solutions, "
        "correlator order parameters, and validity diagnostics (units: hbar = 1, "
        "energies in hbar*Omega, times in 1/Omega).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=f"run the {name} sweep")
        p.add_argument("--model", choices=["lmg", "atom-diatom"], default=None)
        p.add_argument("--n", type=int, default=None, help="particle number (lmg)")
        p.add_argument("--m", type=int, default=None, help="total atoms (atom-diatom)")
        p.add_argument("--period", type=float, default=None, help="drive period T")
        p.add_argument("--points", type=int, default=None, help="grid points")
        p.add_argument("--slices", default=None, help="comma-separated t0/T slices")
        p.add_argument("--zone", choices=["restricted", "extended"], default=None)
        p.add_argument("--threads", type=int, default=None)
        p.add_argument("--out", default=None, help="output directory")
        p.add_argument("--config", default=None, help="key-value config file")
        p.add_argument("--seed", type=int, default=None)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        COMMANDS[args.command](cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, np.linalg.LinAlgError, ValueError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
