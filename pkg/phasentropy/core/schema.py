"""Pydantic schemas for command-line configuration and JSON state input.

Validates every external input up front so typos, missing fields and
malformed matrices surface with the offending field named.
"""

from __future__ import annotations

from typing import List, Literal, Optional

import numpy as np
from pydantic import BaseModel, field_validator, model_validator

from phasentropy.core.config import (
    DEFAULT_PAIRS,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    MIN_SAMPLES,
)

Command = Literal["compute", "scan", "oracle", "schur", "figures"]


class ComplexMatrixConfig(BaseModel, extra="forbid"):
    """A complex matrix given as separate real and imaginary parts."""

    re: List[List[float]]
    im: Optional[List[List[float]]] = None

    @field_validator("re")
    @classmethod
    def re_is_rectangular(cls, v: List[List[float]]) -> List[List[float]]:
        if not v or not v[0]:
            raise ValueError("matrix must have at least one row and one column")
        widths = {len(row) for row in v}
        if len(widths) != 1:
            raise ValueError(f"matrix rows have unequal lengths {sorted(widths)}")
        return v

    @model_validator(mode="after")
    def im_matches_re(self) -> "ComplexMatrixConfig":
        if self.im is None:
            return self
        re_shape = (len(self.re), len(self.re[0]))
        im_shape = (len(self.im), len(self.im[0]) if self.im else 0)
        if re_shape != im_shape or len({len(row) for row in self.im}) != 1:
            raise ValueError(
                f"'im' has shape {im_shape} but 're' has shape {re_shape}"
            )
        return self

    def to_numpy(self) -> np.ndarray:
        re = np.asarray(self.re, dtype=float)
        im = np.zeros_like(re) if self.im is None else np.asarray(self.im, dtype=float)
        return re + 1j * im


class StateInput(BaseModel, extra="forbid"):
    """Schema for a state input file.

    Exactly one of ``spectrum``, ``density`` or ``bipartite`` must be given.
    """

    spectrum: Optional[List[float]] = None
    density: Optional[ComplexMatrixConfig] = None
    bipartite: Optional[ComplexMatrixConfig] = None

    @field_validator("spectrum")
    @classmethod
    def spectrum_not_empty(cls, v: Optional[List[float]]) -> Optional[List[float]]:
        if v is not None and not v:
            raise ValueError("spectrum must not be empty")
        return v

    @field_validator("density")
    @classmethod
    def density_is_square(
        cls, v: Optional[ComplexMatrixConfig]
    ) -> Optional[ComplexMatrixConfig]:
        if v is not None and len(v.re) != len(v.re[0]):
            raise ValueError(
                f"density matrix must be square, got {len(v.re)}x{len(v.re[0])}"
            )
        return v

    @model_validator(mode="after")
    def exactly_one_state(self) -> "StateInput":
        given = [k for k in ("spectrum", "density", "bipartite") if getattr(self, k) is not None]
        if len(given) != 1:
            raise ValueError(
                "state input must contain exactly one of 'spectrum', 'density', "
                f"'bipartite'; got {given or 'none'}"
            )
        return self

    @property
    def kind(self) -> str:
        for k in ("spectrum", "density", "bipartite"):
            if getattr(self, k) is not None:
                return k
        raise AssertionError("unreachable")


class PairInput(BaseModel, extra="forbid"):
    """Schema for single-pair Schur mode: ``upper`` should majorize ``lower``."""

    upper: List[float]
    lower: List[float]

    @model_validator(mode="after")
    def equal_lengths(self) -> "PairInput":
        if len(self.upper) != len(self.lower):
            raise ValueError(
                f"'upper' has {len(self.upper)} entries but 'lower' has {len(self.lower)}"
            )
        return self


class RunConfig(BaseModel, extra="forbid"):
    """Validated command-line configuration."""

    command: Command
    input_path: Optional[str] = None
    q_grid: Optional[List[float]] = None  # None: per-command default
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    output_path: str = "-"
    format: Literal["json", "csv"] = "json"
    dims: Optional[List[int]] = None
    pairs: int = DEFAULT_PAIRS

    @field_validator("q_grid")
    @classmethod
    def q_positive(cls, v: Optional[List[float]]) -> Optional[List[float]]:
        if v is None:
            return v
        bad = [q for q in v if not np.isfinite(q) or q <= 0]
        if bad:
            raise ValueError(f"q values must be finite and > 0, got {bad}")
        return v

    @field_validator("seed")
    @classmethod
    def seed_is_uint64(cls, v: int) -> int:
        if not 0 <= v < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {v}")
        return v

    @field_validator("dims")
    @classmethod
    def dims_at_least_two(cls, v: Optional[List[int]]) -> Optional[List[int]]:
        if v is None:
            return v
        bad = [n for n in v if n < 2]
        if bad:
            raise ValueError(f"dimensions must be >= 2, got {bad}")
        return v

    @field_validator("pairs")
    @classmethod
    def pairs_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"pairs must be >= 1, got {v}")
        return v

    @model_validator(mode="after")
    def oracle_sample_budget(self) -> "RunConfig":
        if self.command == "oracle" and self.samples < MIN_SAMPLES:
            raise ValueError(
                f"oracle needs samples >= {MIN_SAMPLES}, got {self.samples}"
            )
        return self


def validate_state_input(obj: dict) -> StateInput:
    """Validate a state input dict. Raises ValidationError on failure."""
    return StateInput.model_validate(obj)


def validate_pair_input(obj: dict) -> PairInput:
    """Validate a single-pair input dict. Raises ValidationError on failure."""
    return PairInput.model_validate(obj)
