# phasentropy/entropies/report.py

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Literal, Sequence, Tuple

import numpy as np
import pandas as pd
import xarray as xr

from phasentropy.core.config import DIAGNOSTIC_TOL
from phasentropy.core.errors import DomainError
from phasentropy.entropies.constants import _require_q
from phasentropy.entropies.monotones import (
    _as_spectrum,
    renyi_entropy,
    renyi_subentropy,
    renyi_wehrl,
    rescaled_moment,
    subentropy,
    von_neumann,
    wehrl_entropy_bi,
    wehrl_entropy_mono,
)
from phasentropy.spectra.types import Spectrum

Source = Literal["spectrum", "density", "bipartite"]

SCAN_COLUMNS = (
    "renyi",
    "renyi_sub",
    "tsallis_moment",
    "renyi_wehrl_mono",
    "renyi_wehrl_bi",
)
SCALAR_FIELDS = ("von_neumann", "subentropy", "wehrl_mono", "wehrl_bi", "excess")


# -----------------------------------------------------------------------------
# Column checks
# -----------------------------------------------------------------------------


def is_nonincreasing(values: Sequence[float], tol: float = DIAGNOSTIC_TOL) -> bool:
    return bool(np.all(np.diff(np.asarray(values, dtype=float)) <= tol))


def is_nondecreasing(values: Sequence[float], tol: float = DIAGNOSTIC_TOL) -> bool:
    return bool(np.all(np.diff(np.asarray(values, dtype=float)) >= -tol))


def concavity_failures(
    q: Sequence[float], values: Sequence[float], tol: float = DIAGNOSTIC_TOL
) -> np.ndarray:
    """Interior grid indices where the secant slope increases.

    Works on non-uniform grids: a concave column has non-increasing slopes.
    """
    q = np.asarray(q, dtype=float)
    v = np.asarray(values, dtype=float)
    if q.size < 3:
        return np.array([], dtype=int)
    slopes = np.diff(v) / np.diff(q)
    return np.flatnonzero(np.diff(slopes) > tol) + 1


def _check_grid(q_grid: Iterable[float]) -> np.ndarray:
    grid = np.asarray([_require_q(q) for q in q_grid], dtype=float)
    if np.unique(grid).size != grid.size:
        raise DomainError(f"q grid contains repeated values: {grid.tolist()}")
    return grid


# -----------------------------------------------------------------------------
# EntropyReport
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanRow:
    q: float
    renyi: float
    renyi_sub: float
    tsallis_moment: float
    renyi_wehrl_mono: float
    renyi_wehrl_bi: float

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "renyi": self.renyi,
            "renyi_sub": self.renyi_sub,
            "tsallis_moment": self.tsallis_moment,
            "renyi_wehrl_mono": self.renyi_wehrl_mono,
            "renyi_wehrl_bi": self.renyi_wehrl_bi,
        }


@dataclass(frozen=True)
class EntropyReport:
    """Scalar entropies of one spectrum plus a table over a q grid.

    ``diagnostics`` holds monotone-in-q checks of the table; they are
    reported, never enforced.
    """

    n: int
    spectrum: Spectrum
    von_neumann: float
    subentropy: float
    wehrl_mono: float
    wehrl_bi: float
    excess: float
    scan: Tuple[ScanRow, ...] = ()
    source: Source = "spectrum"
    diagnostics: Dict[str, bool] = field(default_factory=dict)

    @property
    def renyi_q_values(self) -> List[Tuple[float, float, float, float, float]]:
        """(q, S_q, Q_q, M_q, S_Wq) tuples, monopartite Renyi-Wehrl entropy."""
        return [
            (r.q, r.renyi, r.renyi_sub, r.tsallis_moment, r.renyi_wehrl_mono)
            for r in self.scan
        ]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "spectrum": self.spectrum.tolist(),
            "von_neumann": self.von_neumann,
            "subentropy": self.subentropy,
            "wehrl_mono": self.wehrl_mono,
            "wehrl_bi": self.wehrl_bi,
            "excess": self.excess,
            "scan": [row.to_dict() for row in self.scan],
            "source": self.source,
            "diagnostics": dict(self.diagnostics),
        }

    def to_dataset(self) -> xr.Dataset:
        q = [row.q for row in self.scan]
        data_vars = {
            name: ("q", np.array([getattr(row, name) for row in self.scan], dtype=float))
            for name in SCAN_COLUMNS
        }
        data_vars.update({name: ((), getattr(self, name)) for name in SCALAR_FIELDS})
        ds = xr.Dataset(data_vars, coords={"q": np.asarray(q, dtype=float)})
        ds.attrs.update(
            n=self.n,
            spectrum=self.spectrum.tolist(),
            source=self.source,
        )
        return ds

    def to_dataframe(self) -> pd.DataFrame:
        """One row per grid point; scalar entropies repeated on every row."""
        df = self.to_dataset().to_dataframe().reset_index()
        return df[["q", *SCAN_COLUMNS, *SCALAR_FIELDS]]


def _scan_row(q: float, lam: Spectrum) -> ScanRow:
    n = len(lam)
    return ScanRow(
        q=float(q),
        renyi=renyi_entropy(q, lam),
        renyi_sub=renyi_subentropy(q, lam),
        tsallis_moment=rescaled_moment(q, lam),
        renyi_wehrl_mono=renyi_wehrl(q, lam, n, "mono"),
        renyi_wehrl_bi=renyi_wehrl(q, lam, n, "bi"),
    )


def scan_diagnostics(lam: Spectrum, rows: Sequence[ScanRow]) -> Dict[str, bool]:
    rows = sorted(rows, key=lambda r: r.q)
    q = [r.q for r in rows]
    renyi = np.array([r.renyi for r in rows])
    renyi_sub = np.array([r.renyi_sub for r in rows])
    return {
        "renyi_nonincreasing": is_nonincreasing(renyi),
        "renyi_sub_nondecreasing": is_nondecreasing(renyi_sub),
        "renyi_sub_concave": concavity_failures(q, renyi_sub).size == 0,
        "renyi_sub_below_renyi": bool(np.all(renyi_sub <= renyi + DIAGNOSTIC_TOL)),
        "subentropy_below_von_neumann": bool(
            subentropy(lam) <= von_neumann(lam) + DIAGNOSTIC_TOL
        ),
    }


def q_scan(
    lam: Spectrum, q_grid: Iterable[float], source: Source = "spectrum"
) -> EntropyReport:
    """
    Tabulate S_q, Q_q, M_q and S_{W,q} over ``q_grid``.

    Parameters
    ----------
    lam : Spectrum
        Eigenvalues of a density matrix or Schmidt coefficients of a pure
        bipartite state; its ambient length is the dimension N.
    q_grid : iterable of float
        Moment orders, all > 0. Rows keep the given order.
    source : {"spectrum", "density", "bipartite"}
        Provenance recorded in the report.

    Returns
    -------
    EntropyReport
    """
    lam = _as_spectrum(lam)
    grid = _check_grid(q_grid)
    n = len(lam)
    rows = tuple(_scan_row(q, lam) for q in grid)
    sub = subentropy(lam)

    return EntropyReport(
        n=n,
        spectrum=lam,
        von_neumann=von_neumann(lam),
        subentropy=sub,
        wehrl_mono=wehrl_entropy_mono(lam, n),
        wehrl_bi=wehrl_entropy_bi(lam, n),
        excess=sub,
        scan=rows,
        source=source,
        diagnostics=scan_diagnostics(lam, rows),
    )


# -----------------------------------------------------------------------------
# Monotonicity-in-q conjecture
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    spectrum: Tuple[float, ...]
    failed: str  # "nondecreasing" or "concave"
    q_indices: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "spectrum": list(self.spectrum),
            "failed": self.failed,
            "q_indices": list(self.q_indices),
        }


@dataclass(frozen=True)
class ConjectureReport:
    """How often Q_q is non-decreasing and concave in q over a set of spectra."""

    n_spectra: int
    q_grid: Tuple[float, ...]
    nondecreasing: int
    concave: int
    both: int
    counterexamples: Tuple[Counterexample, ...] = ()

    def _fraction(self, count: int) -> float:
        return count / self.n_spectra if self.n_spectra else float("nan")

    @property
    def fraction_nondecreasing(self) -> float:
        return self._fraction(self.nondecreasing)

    @property
    def fraction_concave(self) -> float:
        return self._fraction(self.concave)

    @property
    def fraction_both(self) -> float:
        return self._fraction(self.both)

    def to_dict(self) -> dict:
        return {
            "n_spectra": self.n_spectra,
            "q_grid": list(self.q_grid),
            "fraction_nondecreasing": self.fraction_nondecreasing,
            "fraction_concave": self.fraction_concave,
            "fraction_both": self.fraction_both,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }


def conjecture_diagnostics(
    spectra: Iterable[Spectrum], q_grid: Iterable[float]
) -> ConjectureReport:
    """Check Q_q for monotonicity and concavity in q on a sorted grid.

    Every failing spectrum is kept as a counterexample.
    """
    grid = np.sort(_check_grid(q_grid))
    n_spectra = nondecreasing = concave = both = 0
    counterexamples: List[Counterexample] = []

    for lam in spectra:
        lam = _as_spectrum(lam)
        n_spectra += 1
        values = np.array([renyi_subentropy(q, lam) for q in grid])

        drops = np.flatnonzero(np.diff(values) < -DIAGNOSTIC_TOL) + 1
        bends = concavity_failures(grid, values)
        nondecreasing += drops.size == 0
        concave += bends.size == 0
        both += drops.size == 0 and bends.size == 0

        for failed, idx in (("nondecreasing", drops), ("concave", bends)):
            if idx.size:
                counterexamples.append(
                    Counterexample(
                        spectrum=tuple(lam.tolist()),
                        failed=failed,
                        q_indices=tuple(int(i) for i in idx),
                    )
                )

    return ConjectureReport(
        n_spectra=n_spectra,
        q_grid=tuple(float(q) for q in grid),
        nondecreasing=nondecreasing,
        concave=concave,
        both=both,
        counterexamples=tuple(counterexamples),
    )
