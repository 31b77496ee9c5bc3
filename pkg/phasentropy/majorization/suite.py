# phasentropy/majorization/suite.py

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Literal, Optional, Tuple

import dask

from phasentropy.core.config import SCHUR_SLACK
from phasentropy.core.errors import DomainError
from phasentropy.entropies.monotones import (
    renyi_entropy,
    renyi_subentropy,
    rescaled_moment,
    subentropy,
    von_neumann,
)
from phasentropy.majorization.order import MajorizationPair, random_majorized_pair
from phasentropy.spectra.random import derive_seed
from phasentropy.spectra.types import RngSeed, Spectrum
from phasentropy.symfun.kernels import mu

Monotone = Callable[[Spectrum], float]
Direction = Literal["concave", "convex"]


@dataclass(frozen=True)
class SchurReport:
    """Outcome of testing one monotone on a set of majorization pairs."""

    monotone_name: str
    pairs_tested: int
    violations: int
    worst_slack: float
    direction: Direction = "concave"
    dims: Tuple[int, ...] = ()
    worst_pair: Optional[MajorizationPair] = None

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "monotone_name": self.monotone_name,
            "direction": self.direction,
            "dims": list(self.dims),
            "pairs_tested": self.pairs_tested,
            "violations": self.violations,
            "worst_slack": self.worst_slack,
            "worst_pair": None if self.worst_pair is None else self.worst_pair.to_dict(),
        }


def _check_direction(direction: str) -> None:
    if direction not in ("concave", "convex"):
        raise DomainError(
            f"Unknown direction '{direction}'. Available directions: concave, convex"
        )


def check_pair(
    monotone: Monotone, pair: MajorizationPair, direction: Direction = "concave"
) -> float:
    """Slack of the Schur inequality on one pair; negative means violated.

    concave: monotone(lower) - monotone(upper); convex: the reverse.
    """
    _check_direction(direction)
    gap = float(monotone(pair.lower)) - float(monotone(pair.upper))
    return gap if direction == "concave" else -gap


def _run_dim(
    monotone: Monotone, n: int, pairs: int, seed: RngSeed, direction: Direction
) -> List[Tuple[float, MajorizationPair]]:
    out = []
    for k in range(pairs):
        pair = random_majorized_pair(n, derive_seed(seed, n, k))
        out.append((check_pair(monotone, pair, direction), pair))
    return out


def schur_concavity_suite(
    monotone: Monotone,
    n_values: Iterable[int],
    pairs_per_n: int,
    seed: RngSeed,
    direction: Direction = "concave",
    name: Optional[str] = None,
) -> SchurReport:
    """
    Test a monotone for Schur concavity (or convexity) on random pairs.

    Parameters
    ----------
    monotone : callable
        Function of a Spectrum returning a real number.
    n_values : iterable of int
        Dimensions to test; each must be >= 2.
    pairs_per_n : int
        Number of Birkhoff-generated pairs per dimension.
    seed : int
        Root seed; pair k of dimension n uses ``derive_seed(seed, n, k)``.
    direction : {"concave", "convex"}
        Expected order of monotone(lower) and monotone(upper).
    name : str, optional
        Label in the report; defaults to the function name.

    Returns
    -------
    SchurReport
        Violations are counted with a slack tolerance of 1e-12; they are
        reported, not raised.
    """
    _check_direction(direction)
    dims = tuple(sorted({int(n) for n in n_values}))
    if pairs_per_n < 0:
        raise DomainError(f"pairs_per_n must be >= 0, got {pairs_per_n}")

    tasks = [
        dask.delayed(_run_dim)(monotone, n, int(pairs_per_n), seed, direction)
        for n in dims
    ]
    results = [item for chunk in dask.compute(*tasks, scheduler="threads") for item in chunk]

    violations = sum(slack < -SCHUR_SLACK for slack, _ in results)
    worst_slack, worst_pair = 0.0, None
    if results:
        worst_slack, worst_pair = min(results, key=lambda item: item[0])

    if name is None:
        name = getattr(monotone, "__name__", repr(monotone))

    return SchurReport(
        monotone_name=name,
        pairs_tested=len(results),
        violations=int(violations),
        worst_slack=float(worst_slack),
        direction=direction,
        dims=dims,
        worst_pair=worst_pair,
    )


# -----------------------------------------------------------------------------
# Standard monotones
# -----------------------------------------------------------------------------


def standard_monotones(q_values: Iterable[float]) -> Dict[str, Tuple[Monotone, Direction]]:
    """Named monotones with their expected Schur direction.

    Covers Q, Q_q and M_q for every q, plus mu_q itself, which is
    Schur-convex for q > 1 and Schur-concave for 0 < q < 1.
    """
    suites: Dict[str, Tuple[Monotone, Direction]] = {
        "subentropy": (subentropy, "concave"),
        "von_neumann": (von_neumann, "concave"),
    }
    for q in q_values:
        q = float(q)
        suites[f"renyi_subentropy[q={q:g}]"] = (
            functools.partial(renyi_subentropy, q),
            "concave",
        )
        suites[f"rescaled_moment[q={q:g}]"] = (
            functools.partial(rescaled_moment, q),
            "concave",
        )
        suites[f"renyi_entropy[q={q:g}]"] = (
            functools.partial(renyi_entropy, q),
            "concave",
        )
        if q != 1.0:
            suites[f"mu[q={q:g}]"] = (
                functools.partial(mu, q),
                "convex" if q > 1.0 else "concave",
            )
    return suites
