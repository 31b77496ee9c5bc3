# phasentropy/cli/figures.py

"""
Data behind the standard plots of Renyi entropies and subentropies.

Each builder returns a pandas DataFrame. Tables are assembled as
xarray Datasets and flattened; columns indexed by q are spread out as
``<quantity>[q=<q>]``.
"""

from __future__ import annotations

from typing import Callable, Dict, Sequence

import numpy as np
import pandas as pd
import xarray as xr

from phasentropy.core.config import (
    CONJECTURE_Q_POINTS,
    CONJECTURE_Q_RANGE,
    FIGURE_GRID,
)
from phasentropy.entropies.monotones import (
    renyi_entropy,
    renyi_subentropy,
    rescaled_moment,
)
from phasentropy.spectra.types import Spectrum

FIG1_Q = (0.5, 1.0, 2.0, 10.0)
FIG23_Q = (0.5, 1.0, 2.0, 5.0)
FIG4_KAPPA = (1.5, 3.0)
FIG4_DIM = 4

SpectralFn = Callable[[float, Spectrum], float]


def _tabulate(
    spectra: Sequence[Spectrum],
    q_values: Sequence[float],
    quantities: Dict[str, SpectralFn],
    point_dim: str,
    coords: Dict[str, np.ndarray],
) -> xr.Dataset:
    data = {
        name: (
            (point_dim, "q"),
            np.array([[fn(q, lam) for q in q_values] for lam in spectra]),
        )
        for name, fn in quantities.items()
    }
    coords = {name: (point_dim, values) for name, values in coords.items()}
    coords["q"] = np.asarray(q_values, dtype=float)
    return xr.Dataset(data, coords=coords)


def _spread_q(ds: xr.Dataset, index: Sequence[str]) -> pd.DataFrame:
    """One row per point, one column per (quantity, q)."""
    columns = {name: ds[name].values for name in index}
    for name in ds.data_vars:
        for k, q in enumerate(ds["q"].values):
            columns[f"{name}[q={q:g}]"] = ds[name].values[:, k]
    return pd.DataFrame(columns)


def fig1_frame(grid: int = FIGURE_GRID) -> pd.DataFrame:
    """N = 2 spectra (x, 1 - x): S_q and Q_q against x."""
    x = np.linspace(0.0, 1.0, grid)
    spectra = [Spectrum([xi, 1.0 - xi]) for xi in x]
    ds = _tabulate(
        spectra,
        FIG1_Q,
        {"renyi": renyi_entropy, "renyi_sub": renyi_subentropy},
        "x",
        {"x": x},
    )
    return _spread_q(ds, ["x"])


def _barycentric(grid: int) -> np.ndarray:
    steps = grid - 1
    pts = [
        (i / steps, j / steps, (steps - i - j) / steps)
        for i in range(grid)
        for j in range(grid - i)
    ]
    return np.array(pts)


def _simplex_frame(fn: SpectralFn, name: str, grid: int) -> pd.DataFrame:
    pts = _barycentric(grid)
    spectra = [Spectrum(p) for p in pts]
    ds = _tabulate(
        spectra,
        FIG23_Q,
        {name: fn},
        "point",
        {"lambda1": pts[:, 0], "lambda2": pts[:, 1], "lambda3": pts[:, 2]},
    )
    return _spread_q(ds, ["lambda1", "lambda2", "lambda3"])


def fig2_frame(grid: int = FIGURE_GRID) -> pd.DataFrame:
    """Q_q over the N = 3 probability simplex."""
    return _simplex_frame(renyi_subentropy, "renyi_sub", grid)


def fig3_frame(grid: int = FIGURE_GRID) -> pd.DataFrame:
    """M_q over the N = 3 probability simplex."""
    return _simplex_frame(rescaled_moment, "tsallis_moment", grid)


def power_law_spectrum(kappa: float, n: int = FIG4_DIM) -> Spectrum:
    """p_j proportional to j^kappa, j = 1..n."""
    weights = np.arange(1, n + 1, dtype=float) ** kappa
    return Spectrum(weights / weights.sum())


def fig4_q_grid() -> np.ndarray:
    """Evenly spaced orders in [0.1, 20] with q = 1 added."""
    lo, hi = CONJECTURE_Q_RANGE
    return np.union1d(np.linspace(lo, hi, CONJECTURE_Q_POINTS), [1.0])


def fig4_frame() -> pd.DataFrame:
    """S_q and Q_q of N = 4 power-law spectra, one row per (kappa, q)."""
    q = fig4_q_grid()
    spectra = [power_law_spectrum(k) for k in FIG4_KAPPA]
    ds = _tabulate(
        spectra,
        q,
        {"renyi": renyi_entropy, "renyi_sub": renyi_subentropy},
        "kappa",
        {"kappa": np.asarray(FIG4_KAPPA)},
    )
    return ds.to_dataframe().reset_index()[["kappa", "q", "renyi", "renyi_sub"]]


FIGURES: Dict[str, Callable[[], pd.DataFrame]] = {
    "fig1.csv": fig1_frame,
    "fig2.csv": fig2_frame,
    "fig3.csv": fig3_frame,
    "fig4.csv": fig4_frame,
}
