# ============================================================
# 🧮 Power sums and central-moment sums of the Bernoulli representation
#   s_k = sum_{i=1}^n 1 / (theta + i - 1)^k
# ============================================================

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import DomainError
from ..exactdist.params import EwensParams


@dataclass(frozen=True)
class PowerSums:
    params: EwensParams
    values: Tuple[float, ...]

    def __getitem__(self, k: int) -> float:
        if k < 1 or k > len(self.values):
            raise DomainError(f"power sum s[{k}] not computed (k_max={len(self.values)})")
        return self.values[k - 1]

    @property
    def k_max(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class MomentSummary:
    params: EwensParams
    mu0: float
    sigma0_sq: float
    s3_abs: float
    s3_signed: float
    s22: float
    mu_T: float
    sigma_T_sq: float

    @property
    def sigma0(self) -> float:
        return math.sqrt(max(self.sigma0_sq, 0.0))

    @property
    def sigma_T(self) -> float:
        return math.sqrt(self.sigma_T_sq)


def _shifted(params: EwensParams) -> np.ndarray:
    return params.theta + np.arange(params.n, dtype=np.float64)


def bernoulli_probs(params: EwensParams) -> np.ndarray:
    """p_i = theta / (theta + i - 1), i = 1..n."""
    return params.theta / _shifted(params)


def power_sums(params: EwensParams, k_max: int = 4) -> PowerSums:
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max}")
    base = _shifted(params)
    values = tuple(math.fsum(base ** (-float(k))) for k in range(1, k_max + 1))
    return PowerSums(params=params, values=values)


def approx_moments(params: EwensParams) -> Tuple[float, float]:
    """(mu_T, sigma_T^2), the closed-form stand-ins for E[K] and var(K)."""
    theta = params.theta
    log_ratio = math.log1p(params.n / theta)
    mu_T = theta * log_ratio
    sigma_T_sq = theta * (log_ratio + theta / (params.n + theta) - 1.0)
    return mu_T, sigma_T_sq


def exact_moments(params: EwensParams) -> MomentSummary:
    s = power_sums(params, 4)
    t = params.theta
    t2, t3, t4 = t * t, t ** 3, t ** 4

    mu0 = t * s[1]
    sigma0_sq = t * s[1] - t2 * s[2]
    s3_abs = t * s[1] - 3 * t2 * s[2] + 4 * t3 * s[3] - 2 * t4 * s[4]
    s3_signed = t * s[1] - 3 * t2 * s[2] + 2 * t3 * s[3]
    s22 = t2 * s[2] - 2 * t3 * s[3] + t4 * s[4]
    mu_T, sigma_T_sq = approx_moments(params)

    return MomentSummary(
        params=params,
        mu0=mu0,
        sigma0_sq=sigma0_sq,
        s3_abs=s3_abs,
        s3_signed=s3_signed,
        s22=s22,
        mu_T=mu_T,
        sigma_T_sq=sigma_T_sq,
    )


def termwise_moments(params: EwensParams) -> dict:
    """The same four sums accumulated term by term from p_i."""
    p = bernoulli_probs(params)
    q = 1.0 - p
    return {
        "sigma0_sq": math.fsum(p * q),
        "s3_abs": math.fsum(p * q * (1.0 - 2.0 * p + 2.0 * p * p)),
        "s3_signed": math.fsum(p * q * (1.0 - 2.0 * p)),
        "s22": math.fsum((p * q) ** 2),
    }


def central_moment_sum(params: EwensParams, m: int) -> float:
    """sum_i E[(xi_i - p_i)^m] through the binomial expansion in powers of p_i."""
    if m < 2:
        raise DomainError(f"central moment order must be >= 2, got {m}")
    p = bernoulli_probs(params)
    power = {j: math.fsum(p ** j) for j in range(1, m + 1)}

    terms = [
        (-1) ** (j - 1) * math.comb(m, j - 1) * power[j] for j in range(1, m)
    ]
    terms.append((-1) ** (m - 1) * (m - 1) * power[m])
    return math.fsum(terms)
