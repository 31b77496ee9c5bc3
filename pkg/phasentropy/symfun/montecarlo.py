# phasentropy/symfun/montecarlo.py

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Tuple

import dask
import numpy as np

from phasentropy.core.config import MC_CHUNK_SIZE, MIN_SAMPLES, SIGMA_GATE
from phasentropy.core.errors import SamplingConfigError
from phasentropy.spectra.types import RngSeed

# draw(rng, size) -> array of shape (size, ...) holding one integrand value per sample
Draw = Callable[[np.random.Generator, int], np.ndarray]


@dataclass(frozen=True)
class McEstimate:
    """Monte-Carlo estimate with the standard error of the mean."""

    mean: float
    std_error: float
    samples: int
    seed: RngSeed

    def __post_init__(self) -> None:
        if not self.std_error >= 0.0:
            raise SamplingConfigError(f"std_error must be >= 0, got {self.std_error}")
        if self.samples < 2:
            raise SamplingConfigError(f"samples must be >= 2, got {self.samples}")

    def sigma_distance(self, reference: float) -> float:
        """|mean - reference| in units of the standard error."""
        gap = abs(self.mean - reference)
        if self.std_error == 0.0:
            return 0.0 if gap <= 1e-12 * max(1.0, abs(reference)) else float("inf")
        return gap / self.std_error

    def within(self, reference: float, n_sigma: float = SIGMA_GATE) -> bool:
        return self.sigma_distance(reference) < n_sigma

    def to_dict(self) -> dict:
        return {
            "mean": self.mean,
            "std_error": self.std_error,
            "samples": self.samples,
            "seed": self.seed,
        }


# -----------------------------------------------------------------------------
# Chunked estimation
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class _Moments:
    count: int
    mean: np.ndarray
    m2: np.ndarray

    def merge(self, other: "_Moments") -> "_Moments":
        # pairwise update (Chan et al.)
        count = self.count + other.count
        delta = other.mean - self.mean
        mean = self.mean + delta * (other.count / count)
        m2 = self.m2 + other.m2 + delta**2 * (self.count * other.count / count)
        return _Moments(count, mean, m2)


def _chunk_moments(draw: Draw, seed_seq: np.random.SeedSequence, size: int) -> _Moments:
    values = np.asarray(draw(np.random.default_rng(seed_seq), size), dtype=float)
    mean = values.mean(axis=0)
    m2 = ((values - mean) ** 2).sum(axis=0)
    return _Moments(size, mean, m2)


def check_samples(samples: int, minimum: int = MIN_SAMPLES) -> int:
    samples = int(samples)
    if samples < minimum:
        raise SamplingConfigError(
            f"Monte-Carlo estimators need samples >= {minimum}, got {samples}"
        )
    return samples


def chunk_sizes(samples: int, chunk: int = MC_CHUNK_SIZE) -> List[int]:
    full, rest = divmod(samples, chunk)
    return [chunk] * full + ([rest] if rest else [])


def chunked_moments(
    draw: Draw, samples: int, seed: RngSeed
) -> Tuple[np.ndarray, np.ndarray]:
    """Sample mean and standard error of ``draw`` over ``samples`` draws.

    The budget is split into fixed-size chunks, each with its own
    SeedSequence child of ``seed``. Chunks run as dask tasks on the threaded
    scheduler and are merged in chunk order, so the result does not depend
    on how many workers evaluate them.
    """
    samples = check_samples(samples)
    sizes = chunk_sizes(samples)
    children = np.random.SeedSequence(int(seed)).spawn(len(sizes))

    tasks = [
        dask.delayed(_chunk_moments)(draw, child, size)
        for child, size in zip(children, sizes)
    ]
    parts = dask.compute(*tasks, scheduler="threads")

    total = parts[0]
    for part in parts[1:]:
        total = total.merge(part)

    std_error = np.sqrt(total.m2 / (total.count - 1) / total.count)
    return total.mean, std_error


def chunked_estimate(
    draw: Draw, samples: int, seed: RngSeed, scale: float = 1.0
) -> McEstimate:
    """Scalar version of :func:`chunked_moments`, multiplied by ``scale``."""
    mean, std_error = chunked_moments(draw, samples, seed)
    return McEstimate(
        mean=float(scale * mean),
        std_error=float(abs(scale) * std_error),
        samples=int(samples),
        seed=int(seed),
    )
