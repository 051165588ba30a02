# ============================================================
# 🔔 Standard normal helpers and shift/scale perturbation bounds
# ============================================================

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy import special

from ..errors import DegenerateError, DomainError
from ..exactdist.params import EwensParams
from ..moments.sums import MomentSummary, exact_moments

SQRT_2PI = math.sqrt(2 * math.pi)
SQRT_2PIE = math.sqrt(2 * math.pi * math.e)
DEFAULT_PROBE_POINTS = 100_000
DEFAULT_PROBE_HALF_WIDTH = 10.0


def phi_cdf(x):
    """Phi(x) = erfc(-x / sqrt 2) / 2; scalars in, float out."""
    value = 0.5 * special.erfc(-np.asarray(x, dtype=np.float64) / math.sqrt(2.0))
    return float(value) if np.ndim(value) == 0 else value


def phi_pdf(x):
    x = np.asarray(x, dtype=np.float64)
    value = np.exp(-0.5 * x * x) / SQRT_2PI
    return float(value) if np.ndim(value) == 0 else value


@dataclass(frozen=True)
class LemmaA2Report:
    alpha: float
    beta: float
    shift_observed: float
    shift_bound: float
    scale_observed: float
    scale_bound: float

    @property
    def holds(self) -> bool:
        return self.shift_observed <= self.shift_bound and self.scale_observed <= self.scale_bound


def shift_bound(alpha: float) -> float:
    return abs(alpha) / SQRT_2PI


def scale_bound(beta: float) -> float:
    if not beta > 0:
        raise DomainError(f"scale beta must be positive, got {beta}")
    return max(beta, 1.0) * abs(1.0 - 1.0 / beta) / SQRT_2PIE


def default_probe_grid() -> np.ndarray:
    return np.linspace(-DEFAULT_PROBE_HALF_WIDTH, DEFAULT_PROBE_HALF_WIDTH, DEFAULT_PROBE_POINTS)


def lemma_a2_check(
    alpha: float, beta: float, probe_grid: Optional[Sequence[float]] = None
) -> LemmaA2Report:
    """Observed sups of |Phi(x+alpha) - Phi(x)| and |Phi(beta x) - Phi(x)|."""
    if not beta > 0:
        raise DomainError(f"scale beta must be positive, got {beta}")
    grid = default_probe_grid() if probe_grid is None else np.asarray(probe_grid, dtype=np.float64)
    if grid.size == 0:
        raise DomainError("probe grid must not be empty")

    # analytic extremizers: x = -alpha/2, and beta phi(beta x) = phi(x)
    extra = [-alpha / 2.0]
    if beta != 1.0:
        x_star = math.sqrt(2.0 * math.log(beta) / (beta * beta - 1.0))
        extra.extend([x_star, -x_star])
    points = np.concatenate([grid, np.asarray(extra)])

    shift_observed = float(np.max(np.abs(phi_cdf(points + alpha) - phi_cdf(points))))
    scale_observed = float(np.max(np.abs(phi_cdf(beta * points) - phi_cdf(points))))
    return LemmaA2Report(
        alpha=alpha,
        beta=beta,
        shift_observed=shift_observed,
        shift_bound=shift_bound(alpha),
        scale_observed=scale_observed,
        scale_bound=scale_bound(beta),
    )


@dataclass(frozen=True)
class Corollary2Budget:
    shift_term: float
    scale_term: float

    @property
    def total(self) -> float:
        return self.shift_term + self.scale_term


def corollary2_budget(
    params: EwensParams, moments: Optional[MomentSummary] = None
) -> Corollary2Budget:
    """Cost of moving from the exact (mu0, sigma0) to the approximate (mu_T, sigma_T)."""
    m = exact_moments(params) if moments is None else moments
    if params.n < 2 or m.sigma0 <= 0:
        raise DegenerateError("sigma0 = 0: the exact standardization is undefined for n = 1")
    ratio = m.sigma_T / m.sigma0
    return Corollary2Budget(
        shift_term=shift_bound(abs(m.mu_T - m.mu0) / m.sigma0),
        scale_term=scale_bound(ratio),
    )


def sigma_ratio_bounds(params: EwensParams, moments: Optional[MomentSummary] = None):
    """(lower, upper) bracket of sigma_T / sigma0, valid once var(K) >= 1."""
    m = exact_moments(params) if moments is None else moments
    if m.sigma0_sq < 1.0:
        raise DomainError("sigma_T / sigma0 bracket needs var(K) >= 1")
    a = params.n / (params.theta + params.n)
    lower = math.sqrt(1.0 - a / m.sigma0_sq)
    upper = math.sqrt(1.0 + (1.0 - a / 2.0) / m.sigma0_sq)
    return lower, upper
