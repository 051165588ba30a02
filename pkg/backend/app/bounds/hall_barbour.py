import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import DegenerateError
from ..exactdist.params import EwensParams
from ..moments.sums import MomentSummary, bernoulli_probs, exact_moments


@dataclass(frozen=True)
class HallBarbourDelta:
    delta: float
    term_tail: float
    term_fourth: float
    term_third_abs: float
    sum_sigma4: float


def hall_barbour_delta(
    params: EwensParams, moments: Optional[MomentSummary] = None
) -> HallBarbourDelta:
    """delta for Y_i = (xi_i - p_i) / sigma0, resolved exactly per two-point law."""
    if params.n < 2:
        raise DegenerateError("delta needs n >= 2")
    m = exact_moments(params) if moments is None else moments
    sigma0 = m.sigma0

    p = bernoulli_probs(params)
    # Y_i = (1 - p_i)/sigma0 w.p. p_i, and -p_i/sigma0 w.p. 1 - p_i
    values = np.concatenate([(1.0 - p) / sigma0, -p / sigma0])
    weights = np.concatenate([p, 1.0 - p])

    outside = np.abs(values) > 1.0
    term_tail = math.fsum(weights[outside] * values[outside] ** 2)
    term_fourth = math.fsum(weights[~outside] * values[~outside] ** 4)
    term_third_abs = abs(math.fsum(weights[~outside] * values[~outside] ** 3))

    return HallBarbourDelta(
        delta=term_tail + term_fourth + term_third_abs,
        term_tail=term_tail,
        term_fourth=term_fourth,
        term_third_abs=term_third_abs,
        sum_sigma4=m.s22 / m.sigma0_sq ** 2,
    )


def hall_barbour_lower_surrogate(hb: HallBarbourDelta) -> float:
    """The part of delta used as its lower estimate: tail plus |third| terms."""
    return hb.term_tail + hb.term_third_abs
