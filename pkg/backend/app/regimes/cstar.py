import logging
import math
from typing import Optional

from scipy.optimize import brentq

from ..errors import DomainError, EwensError
from ..settings import settings

logger = logging.getLogger(__name__)

MIN_TOLERANCE = 1e-14


def cstar_equation(x: float) -> float:
    """log(1+x) - 2 + 3/(x+1) - 1/(x+1)^2; its positive root separates the B* branches."""
    u = 1.0 / (x + 1.0)
    return math.log1p(x) - 2.0 + 3.0 * u - u * u


def solve_cstar(tolerance: Optional[float] = None) -> float:
    tolerance = settings.CSTAR_TOLERANCE if tolerance is None else tolerance
    if not tolerance >= MIN_TOLERANCE:
        raise DomainError(f"tolerance must be >= {MIN_TOLERANCE:g}, got {tolerance:g}")

    lo, hi = settings.CSTAR_BRACKET_LO, settings.CSTAR_BRACKET_HI
    f_lo, f_hi = cstar_equation(lo), cstar_equation(hi)
    if f_lo * f_hi > 0:
        raise EwensError(f"c* bracket [{lo}, {hi}] does not change sign")

    root, info = brentq(cstar_equation, lo, hi, xtol=tolerance, full_output=True)
    if not info.converged:
        raise EwensError(f"c* root finding did not converge: {info.flag}")
    logger.debug("[CStar] root=%.12f after %d iterations", root, info.iterations)
    return root
