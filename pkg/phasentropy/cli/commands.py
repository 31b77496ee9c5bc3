# phasentropy/cli/commands.py

"""
Command implementations behind ``phasentropy --command ...``.

Each ``cmd_*`` takes a validated RunConfig, writes its output through
``phasentropy.core.io`` and returns a process exit code. Progress lines
go to stderr so that stdout stays machine readable.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np
import pandas as pd

from phasentropy.cli.figures import FIGURES
from phasentropy.core import io
from phasentropy.core.config import (
    CONJECTURE_DIM,
    CONJECTURE_Q_POINTS,
    CONJECTURE_Q_RANGE,
    CONJECTURE_SPECTRA,
    DEFAULT_ORACLE_Q,
    DEFAULT_Q_GRID,
    DEFAULT_SCHUR_DIMS,
    DEFAULT_SCHUR_Q,
    EXIT_OK,
    EXIT_ORACLE,
    EXIT_SCHUR,
    SCHUR_SLACK,
    SIGMA_GATE,
)
from phasentropy.core.errors import DomainError, StateValidationError
from phasentropy.core.schema import RunConfig, validate_pair_input, validate_state_input
from phasentropy.entropies.monotones import (
    husimi_moment,
    wehrl_entropy_bi,
    wehrl_entropy_mono,
)
from phasentropy.entropies.report import conjecture_diagnostics, q_scan
from phasentropy.husimi.integrate import mc_moment_bi, mc_moment_mono, mc_wehrl
from phasentropy.majorization.order import MajorizationPair
from phasentropy.majorization.suite import (
    SchurReport,
    check_pair,
    schur_concavity_suite,
    standard_monotones,
)
from phasentropy.spectra.decompose import (
    eigen_spectrum,
    reduced_density,
    schmidt_form,
    schmidt_spectrum,
)
from phasentropy.spectra.random import derive_seed, random_pure_bipartite, random_spectrum
from phasentropy.spectra.types import BipartitePureState, HermitianState, Spectrum
from phasentropy.symfun.kernels import mu
from phasentropy.symfun.oracle import mu_simplex_oracle


def progress(message: str) -> None:
    print(message, file=sys.stderr)


# -----------------------------------------------------------------------------
# State loading
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class LoadedState:
    """An input state in all three representations."""

    spectrum: Spectrum
    rho: HermitianState
    psi: BipartitePureState
    source: str


def state_from_input(obj: dict) -> LoadedState:
    """Validate a state input dict and derive its spectrum, density and purification."""
    state = validate_state_input(obj)

    if state.kind == "spectrum":
        lam = Spectrum(state.spectrum)
        return LoadedState(lam, HermitianState.from_spectrum(lam), schmidt_form(lam), "spectrum")

    if state.kind == "density":
        rho = HermitianState(state.density.to_numpy())
        lam = eigen_spectrum(rho)
        return LoadedState(lam, rho, schmidt_form(lam), "density")

    psi = BipartitePureState(state.bipartite.to_numpy())
    return LoadedState(schmidt_spectrum(psi), reduced_density(psi), psi, "bipartite")


def read_input(url: str) -> dict:
    if url != "-" and not io.exists(url):
        raise FileNotFoundError(f"input {url} does not exist")
    return io.read_json(url)


def load_state(cfg: RunConfig) -> LoadedState:
    if cfg.input_path is None:
        raise StateValidationError(f"command '{cfg.command}' needs --input")
    return state_from_input(read_input(cfg.input_path))


def random_state(n: int, seed: int) -> LoadedState:
    psi = random_pure_bipartite(n, seed)
    return LoadedState(schmidt_spectrum(psi), reduced_density(psi), psi, "random")


def _write(cfg: RunConfig, payload: dict, table: pd.DataFrame) -> None:
    if cfg.format == "csv":
        io.write_csv(cfg.output_path, table)
    else:
        io.write_json(cfg.output_path, payload)


# -----------------------------------------------------------------------------
# compute / scan
# -----------------------------------------------------------------------------


def cmd_compute(cfg: RunConfig) -> int:
    loaded = load_state(cfg)
    q_grid = cfg.q_grid if cfg.q_grid is not None else list(DEFAULT_Q_GRID)
    progress(f"Computing entropies of {loaded.spectrum!r} on {len(q_grid)} orders")

    report = q_scan(loaded.spectrum, q_grid, source=loaded.source)
    _write(cfg, report.to_dict(), report.to_dataframe())
    return EXIT_OK


def conjecture_q_grid() -> np.ndarray:
    lo, hi = CONJECTURE_Q_RANGE
    return np.linspace(lo, hi, CONJECTURE_Q_POINTS)


def cmd_scan(cfg: RunConfig) -> int:
    q_grid = cfg.q_grid if cfg.q_grid is not None else list(DEFAULT_Q_GRID)
    dims = cfg.dims if cfg.dims is not None else [CONJECTURE_DIM]

    report = None
    if cfg.input_path is not None:
        loaded = load_state(cfg)
        progress(f"Scanning {loaded.spectrum!r} on {len(q_grid)} orders")
        report = q_scan(loaded.spectrum, q_grid, source=loaded.source)
        if cfg.format == "csv":
            progress("CSV output holds the conjecture table; use --command compute for the scan table")

    grid = conjecture_q_grid()
    conjectures = []
    for n in dims:
        progress(f"Checking Q_q in q for {CONJECTURE_SPECTRA} random spectra with N={n}")
        spectra = (
            random_spectrum(n, derive_seed(cfg.seed, n, k))
            for k in range(CONJECTURE_SPECTRA)
        )
        conj = conjecture_diagnostics(spectra, grid)
        conjectures.append({"n": int(n), **conj.to_dict()})

    payload = {
        "report": None if report is None else report.to_dict(),
        "conjecture": conjectures,
    }
    table = pd.DataFrame(
        [
            {
                "n": c["n"],
                "n_spectra": c["n_spectra"],
                "fraction_nondecreasing": c["fraction_nondecreasing"],
                "fraction_concave": c["fraction_concave"],
                "fraction_both": c["fraction_both"],
                "counterexamples": json.dumps(c["counterexamples"]),
            }
            for c in conjectures
        ]
    )
    _write(cfg, payload, table)
    return EXIT_OK


# -----------------------------------------------------------------------------
# oracle
# -----------------------------------------------------------------------------


def _oracle_row(check: str, q, closed_form: float, estimate) -> dict:
    distance = estimate.sigma_distance(closed_form)
    row = {
        "check": check,
        "q": q,
        "closed_form": closed_form,
        "estimate": estimate.mean,
        "std_error": estimate.std_error,
        "sigma_distance": distance,
        "passed": bool(distance < SIGMA_GATE),
    }
    progress(
        f"{check:<12} q={'-' if q is None else f'{q:g}':<6} closed={closed_form:.6f} "
        f"mc={estimate.mean:.6f} +/- {estimate.std_error:.2e} ({distance:.2f} sigma)"
    )
    return row


def oracle_rows(loaded: LoadedState, q_values: Sequence[float], samples: int, seed: int) -> List[dict]:
    """Compare every Monte-Carlo estimator with its closed form."""
    lam, n = loaded.spectrum, len(loaded.spectrum)
    rows = []
    key = 0

    def next_seed() -> int:
        nonlocal key
        key += 1
        return derive_seed(seed, key)

    for q in q_values:
        q = float(q)
        rows.append(_oracle_row(
            "moment_mono", q, husimi_moment(q, lam, n, "mono"),
            mc_moment_mono(loaded.rho, q, samples, next_seed()),
        ))
        rows.append(_oracle_row(
            "moment_bi", q, husimi_moment(q, lam, n, "bi"),
            mc_moment_bi(loaded.psi, q, samples, next_seed()),
        ))
        rows.append(_oracle_row(
            "mu_simplex", q, mu(q, lam),
            mu_simplex_oracle(q, lam, samples, next_seed()),
        ))

    rows.append(_oracle_row(
        "wehrl_mono", None, wehrl_entropy_mono(lam, n),
        mc_wehrl(loaded.rho, samples, next_seed()),
    ))
    rows.append(_oracle_row(
        "wehrl_bi", None, wehrl_entropy_bi(lam, n),
        mc_wehrl(loaded.psi, samples, next_seed()),
    ))
    return rows


def cmd_oracle(cfg: RunConfig) -> int:
    q_values = cfg.q_grid if cfg.q_grid is not None else list(DEFAULT_ORACLE_Q)
    if cfg.input_path is not None:
        loaded = load_state(cfg)
    else:
        n = cfg.dims[0] if cfg.dims else 2
        loaded = random_state(n, derive_seed(cfg.seed, 0))
    if loaded.spectrum.ambient_dim < 2:
        raise DomainError("phase-space oracles need N >= 2")

    progress(f"Sampling husimi moments of {loaded.spectrum!r} with {cfg.samples} samples")
    rows = oracle_rows(loaded, q_values, cfg.samples, cfg.seed)
    passed = all(row["passed"] for row in rows)

    payload = {
        "n": len(loaded.spectrum),
        "spectrum": loaded.spectrum.tolist(),
        "source": loaded.source,
        "samples": cfg.samples,
        "seed": cfg.seed,
        "passed": passed,
        "rows": rows,
    }
    _write(cfg, payload, pd.DataFrame(rows))
    return EXIT_OK if passed else EXIT_ORACLE


# -----------------------------------------------------------------------------
# schur
# -----------------------------------------------------------------------------


def single_pair_reports(pair: MajorizationPair, q_values: Sequence[float]) -> List[SchurReport]:
    reports = []
    for name, (monotone, direction) in standard_monotones(q_values).items():
        slack = check_pair(monotone, pair, direction)
        reports.append(
            SchurReport(
                monotone_name=name,
                pairs_tested=1,
                violations=int(slack < -SCHUR_SLACK),
                worst_slack=slack,
                direction=direction,
                dims=(pair.n,),
                worst_pair=pair,
            )
        )
    return reports


def cmd_schur(cfg: RunConfig) -> int:
    q_values = cfg.q_grid if cfg.q_grid is not None else list(DEFAULT_SCHUR_Q)

    if cfg.input_path is not None:
        obj = validate_pair_input(read_input(cfg.input_path))
        pair = MajorizationPair(lower=Spectrum(obj.lower), upper=Spectrum(obj.upper))
        progress(f"Checking the pair {pair.upper!r} > {pair.lower!r}")
        reports = single_pair_reports(pair, q_values)
    else:
        dims = cfg.dims if cfg.dims is not None else list(DEFAULT_SCHUR_DIMS)
        reports = []
        for k, (name, (monotone, direction)) in enumerate(standard_monotones(q_values).items()):
            progress(f"Schur suite for {name} ({direction}) on N={dims}")
            reports.append(
                schur_concavity_suite(
                    monotone, dims, cfg.pairs, derive_seed(cfg.seed, k),
                    direction=direction, name=name,
                )
            )

    violations = sum(r.violations for r in reports)
    payload = {"violations": violations, "reports": [r.to_dict() for r in reports]}
    table = pd.DataFrame(
        [{k: v for k, v in r.to_dict().items() if k != "worst_pair"} for r in reports]
    )
    table["dims"] = [" ".join(str(n) for n in r.dims) for r in reports]
    _write(cfg, payload, table)
    return EXIT_OK if violations == 0 else EXIT_SCHUR


# -----------------------------------------------------------------------------
# figures
# -----------------------------------------------------------------------------


def cmd_figures(cfg: RunConfig) -> int:
    """Write fig1.csv .. fig4.csv into the output directory (cwd for ``-``)."""
    outdir = "." if cfg.output_path == "-" else cfg.output_path
    io.makedirs(outdir)
    for filename, build in FIGURES.items():
        progress(f"Writing {io.join(outdir, filename)}")
        io.write_csv(io.join(outdir, filename), build())
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "scan": cmd_scan,
    "oracle": cmd_oracle,
    "schur": cmd_schur,
    "figures": cmd_figures,
}
