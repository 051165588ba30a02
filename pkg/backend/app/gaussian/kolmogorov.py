import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from ..errors import DegenerateError
from ..exactdist.params import EwensParams
from ..exactdist.pmf import LengthDistribution, cdf, exact_cdf
from ..moments.sums import MomentSummary, exact_moments
from .normal import phi_cdf


class StandardizationKind(str, Enum):
    EXACT_MOMENTS = "X"
    APPROX_MOMENTS = "Y"
    LOG_LEADING = "Z"


class Side(str, Enum):
    LEFT_LIMIT = "left-limit"
    RIGHT_VALUE = "right-value"


@dataclass(frozen=True)
class Standardization:
    kind: StandardizationKind
    mu: float
    sigma: float

    def __post_init__(self):
        if not (self.sigma > 0 and math.isfinite(self.sigma)):
            raise DegenerateError(f"standardization {self.kind.value} has sigma={self.sigma}")


@dataclass(frozen=True)
class KolmogorovReport:
    distance: float
    argmax_point: float
    side: Side


def standardize(
    params: EwensParams,
    kind: StandardizationKind,
    moments: Optional[MomentSummary] = None,
) -> Standardization:
    """X: exact moments, Y: approximate moments, Z: theta log n leading term."""
    kind = StandardizationKind(kind)
    if kind is StandardizationKind.LOG_LEADING:
        if params.n < 2:
            raise DegenerateError("theta log n vanishes at n = 1")
        lead = params.theta * math.log(params.n)
        return Standardization(kind, lead, math.sqrt(lead))

    m = exact_moments(params) if moments is None else moments
    if kind is StandardizationKind.EXACT_MOMENTS:
        if params.n < 2:
            raise DegenerateError("var(K) = 0 at n = 1")
        return Standardization(kind, m.mu0, m.sigma0)
    return Standardization(kind, m.mu_T, m.sigma_T)


def sup_gap(
    points: Sequence[float], F: Sequence[float], mu: float, sigma: float
) -> KolmogorovReport:
    """sup_x |F(x) - Phi((x - mu) / sigma)| for a step CDF jumping at ``points``.

    Between jumps F is flat and Phi monotone, so the sup is attained at a
    jump on either its left limit or its value.
    """
    if not sigma > 0:
        raise DegenerateError(f"sigma must be positive, got {sigma}")
    x = np.asarray(points, dtype=np.float64)
    right = np.asarray(F, dtype=np.float64)
    left = np.concatenate(([0.0], right[:-1]))
    z = (x - mu) / sigma
    phi = phi_cdf(z)

    right_gap = np.abs(right - phi)
    left_gap = np.abs(left - phi)
    i_right = int(np.argmax(right_gap))
    i_left = int(np.argmax(left_gap))
    if right_gap[i_right] >= left_gap[i_left]:
        return KolmogorovReport(float(right_gap[i_right]), float(z[i_right]), Side.RIGHT_VALUE)
    return KolmogorovReport(float(left_gap[i_left]), float(z[i_left]), Side.LEFT_LIMIT)


def kolmogorov_distance(dist: LengthDistribution, std: Standardization) -> KolmogorovReport:
    exact = exact_cdf(dist)
    F = [float(v) for v in exact] if exact is not None else cdf(dist)
    return sup_gap(dist.support(), F, std.mu, std.sigma)
