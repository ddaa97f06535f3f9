"""Single p-bit update rule and device-variability sampling.

A p-bit fires +1 with probability (1 + tanh(lam * (inp + delta))) / 2,
realized by thresholding tanh against uniform noise r in [-1, 1).  The
(lam, delta, period) triple per p-bit models device-to-device variation
in response intensity, input offset, and update timing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class VariabilityConfig:
    """Standard deviations of the three device-variation channels."""

    sigma_lambda: float = 0.0
    sigma_delta: float = 0.0
    sigma_nu: float = 0.0
    t_res: int = 10

    def __post_init__(self) -> None:
        for name in ("sigma_lambda", "sigma_delta", "sigma_nu"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.t_res < 1:
            raise ValueError("t_res must be >= 1")


@dataclass
class VariabilityProfile:
    """Per-p-bit realization: intensity lam, offset delta, update period."""

    lam: np.ndarray     # (n,) float64, nominal 1.0
    delta: np.ndarray   # (n,) float64, nominal 0.0
    period: np.ndarray  # (n,) int64, >= 1, nominal t_res
    t_res: int

    @property
    def n(self) -> int:
        return int(self.lam.size)

    @classmethod
    def ideal(cls, n: int, t_res: int = 10) -> "VariabilityProfile":
        return cls(
            lam=np.ones(n),
            delta=np.zeros(n),
            period=np.full(n, t_res, dtype=np.int64),
            t_res=t_res,
        )


def sample_variability(
    config: VariabilityConfig, n: int, rng: np.random.Generator
) -> VariabilityProfile:
    """Draw one profile: lam ~ N(1, sigma_lambda^2), delta ~ N(0, sigma_delta^2),
    period = max(1, round(t_res * (1 + nu))) with nu ~ N(0, sigma_nu^2).

    lam and delta are not clamped; a strongly negative timing draw can
    floor the period at 1 (an update every sub-step).  Driving any sigma
    to zero reproduces the nominal value exactly, and the three normal
    draws are always consumed in the same order, so profiles stay paired
    across sweeps that share a seed.
    """
    if n < 1:
        raise ValueError("need at least one p-bit")
    lam = 1.0 + config.sigma_lambda * rng.standard_normal(n)
    delta = config.sigma_delta * rng.standard_normal(n)
    nu = config.sigma_nu * rng.standard_normal(n)
    period = np.maximum(1, np.rint(config.t_res * (1.0 + nu))).astype(np.int64)
    return VariabilityProfile(lam=lam, delta=delta, period=period, t_res=config.t_res)


def pbit_update(inp: float, r: float, lam: float = 1.0, delta: float = 0.0) -> int:
    """Next spin: sign of r + tanh(lam * (inp + delta)), with sign(0) = +1."""
    return 1 if r + math.tanh(lam * (inp + delta)) >= 0.0 else -1
