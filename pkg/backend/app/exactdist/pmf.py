# ============================================================
# 📐 Law of K, the number of blocks of a Ewens partition
#   P(K = x) = s(n, x) theta^x / (theta)_n          (Stirling path)
#   K = xi_1 + ... + xi_n, xi_i ~ Bernoulli(theta / (theta + i - 1))
#                                                    (Poisson-binomial path)
# ============================================================

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from ..errors import DimensionError
from ..settings import settings
from ..utils.compensated import prefix_sums
from .params import EwensParams
from .stirling import StirlingTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LengthDistribution:
    params: EwensParams
    log_pmf: np.ndarray
    exact_pmf: Optional[Tuple[Fraction, ...]] = None
    source: str = ""

    def __post_init__(self):
        self.log_pmf.setflags(write=False)

    @property
    def n(self) -> int:
        return self.params.n

    def support(self) -> np.ndarray:
        return np.arange(1, self.params.n + 1)

    def pmf(self) -> np.ndarray:
        return np.exp(self.log_pmf)


def _exact_parts(theta: Fraction, n: int):
    """Numerator/denominator integers of theta = a/b and (theta)_n * b^n."""
    a, b = theta.numerator, theta.denominator
    denom = 1
    for i in range(1, n + 1):
        denom *= a + (i - 1) * b
    return a, b, denom


# ------------------------------------------------------------
# Stirling path
# ------------------------------------------------------------
def pmf_stirling(
    params: EwensParams,
    table: StirlingTable,
    rational_limit: Optional[int] = None,
) -> LengthDistribution:
    rational_limit = settings.RATIONAL_LIMIT if rational_limit is None else rational_limit
    n = params.n
    if n > table.n_max:
        raise DimensionError(f"n={n} exceeds Stirling table n_max={table.n_max}")

    stirling = table.row(n)
    # floats are dyadic rationals, so the integer form applies to every theta
    theta_q = params.theta_exact if params.is_rational else Fraction(params.theta)
    a, b, denom = _exact_parts(theta_q, n)

    a_pow = [1] * (n + 1)
    b_pow = [1] * (n + 1)
    for k in range(1, n + 1):
        a_pow[k] = a_pow[k - 1] * a
        b_pow[k] = b_pow[k - 1] * b

    log_denom = None
    log_pmf = np.empty(n)
    numerators: List[int] = []
    for x in range(1, n + 1):
        num = stirling[x - 1] * a_pow[x] * b_pow[n - x]
        numerators.append(num)
        ratio = num / denom
        if ratio >= 1e-300:
            log_pmf[x - 1] = math.log(ratio)
        else:
            # far tail: log s(n,x) + x log theta - sum log(theta + i - 1)
            if log_denom is None:
                log_denom = math.fsum(math.log(params.theta + i) for i in range(n))
            log_pmf[x - 1] = (
                table.log_row(n)[x - 1] + x * math.log(params.theta) - log_denom
            )

    exact = None
    if params.is_rational and n <= rational_limit:
        exact = tuple(Fraction(num, denom) for num in numerators)

    return LengthDistribution(params=params, log_pmf=log_pmf, exact_pmf=exact, source="stirling")


# ------------------------------------------------------------
# Poisson-binomial path
# ------------------------------------------------------------
def _bernoulli_dp(theta: float, n: int) -> np.ndarray:
    """Probabilities of xi_1 + ... + xi_n on 0..n."""
    i = np.arange(1, n + 1, dtype=np.float64)
    denom = theta + i - 1.0
    p = theta / denom
    q = (i - 1.0) / denom

    dist = np.zeros(n + 1)
    dist[0] = 1.0
    for k in range(n):
        tail = dist[: k + 1] * p[k]
        dist[: k + 1] *= q[k]
        dist[1 : k + 2] += tail
    return dist


def _bernoulli_dp_log(theta: float, n: int) -> np.ndarray:
    """Same convolution carried out on log-probabilities."""
    i = np.arange(1, n + 1, dtype=np.float64)
    log_denom = np.log(theta + i - 1.0)
    log_p = math.log(theta) - log_denom
    with np.errstate(divide="ignore"):
        log_q = np.log(i - 1.0) - log_denom

    ld = np.full(n + 1, -np.inf)
    ld[0] = 0.0
    with np.errstate(invalid="ignore", divide="ignore"):
        for k in range(n):
            tail = ld[: k + 1] + log_p[k]
            ld[: k + 1] += log_q[k]
            ld[1 : k + 2] = np.logaddexp(ld[1 : k + 2], tail)
    return ld


def _endpoint_log_masses(theta: float, n: int) -> Tuple[float, float]:
    """log P(K = 1) and log P(K = n), without running the convolution."""
    i = np.arange(1, n + 1, dtype=np.float64)
    log_denom = np.log(theta + i - 1.0)
    log_first = float(np.sum(np.log(i[1:] - 1.0) - log_denom[1:]))
    log_last = float(n * math.log(theta) - np.sum(log_denom))
    return log_first, log_last


def _bernoulli_dp_exact(theta: Fraction, n: int) -> Tuple[Fraction, ...]:
    """Coefficients of prod_i (a z + (i-1) b) over the common denominator."""
    a, b, denom = _exact_parts(theta, n)
    coeffs = [1]
    for i in range(1, n + 1):
        q = (i - 1) * b
        nxt = [0] * (len(coeffs) + 1)
        for x, c in enumerate(coeffs):
            nxt[x] += c * q
            nxt[x + 1] += c * a
        coeffs = nxt
    return tuple(Fraction(c, denom) for c in coeffs[1:])


def pmf_poisson_binomial(
    params: EwensParams,
    rational_limit: Optional[int] = None,
    underflow_floor: Optional[float] = None,
) -> LengthDistribution:
    rational_limit = settings.RATIONAL_LIMIT if rational_limit is None else rational_limit
    floor = settings.UNDERFLOW_FLOOR if underflow_floor is None else underflow_floor
    n, theta = params.n, params.theta

    # the law is log-concave, so its smallest entries sit at the two ends
    log_floor = math.log(floor) if floor > 0 else -math.inf
    if min(_endpoint_log_masses(theta, n)) < log_floor:
        logger.debug("[PoissonBinomial] n=%d theta=%g underflows, using log domain", n, theta)
        log_pmf = _bernoulli_dp_log(theta, n)[1:]
    else:
        log_pmf = np.log(_bernoulli_dp(theta, n)[1:])

    exact = None
    if params.is_rational and n <= rational_limit:
        exact = _bernoulli_dp_exact(params.theta_exact, n)

    return LengthDistribution(
        params=params, log_pmf=log_pmf, exact_pmf=exact, source="poisson_binomial"
    )


# ------------------------------------------------------------
# Distribution function
# ------------------------------------------------------------
def cdf(dist: LengthDistribution) -> np.ndarray:
    """F(x) for x = 1..n by compensated left-to-right summation."""
    return np.array(prefix_sums(dist.pmf().tolist()))


def exact_cdf(dist: LengthDistribution) -> Optional[List[Fraction]]:
    if dist.exact_pmf is None:
        return None
    out, acc = [], Fraction(0)
    for value in dist.exact_pmf:
        acc += value
        out.append(acc)
    return out


def length_distribution(
    params: EwensParams, table: Optional[StirlingTable] = None
) -> LengthDistribution:
    """Stirling path when a large enough table is at hand, DP path otherwise."""
    if table is not None and params.n <= table.n_max:
        return pmf_stirling(params, table)
    return pmf_poisson_binomial(params)
