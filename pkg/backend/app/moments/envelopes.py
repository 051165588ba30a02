# ============================================================
# 📏 Closed-form envelopes and asymptotic equivalents
# Integral comparison bounds for the power sums, two-sided bounds for the
# central-moment sums, and their leading terms per asymptotic case.
# ============================================================

import math
from dataclasses import dataclass
from typing import Dict, Optional

from ..errors import DomainError
from ..exactdist.params import EwensParams
from .sums import exact_moments, power_sums

SUM_IDS = ("var", "abs3", "signed3", "sq22")


@dataclass(frozen=True)
class EnvelopePair:
    lower: float
    upper: float
    value: float

    def holds(self, slack: float = 0.0) -> bool:
        return self.lower - slack <= self.value <= self.upper + slack

    @property
    def width(self) -> float:
        return self.upper - self.lower


def _blocks(params: EwensParams):
    n, t = params.n, params.theta
    log_ratio = math.log1p(n / t)
    r = t / (n + t)
    a = n / (n + t)
    return n, t, log_ratio, r, a


def lemma_a1_envelope(params: EwensParams, k: int) -> EnvelopePair:
    """k = 0 brackets s_1; k >= 1 brackets s_{k+1} by integral comparison."""
    if k < 0:
        raise DomainError(f"envelope index k must be non-negative, got {k}")
    n, t, log_ratio, _, _ = _blocks(params)

    if k == 0:
        value = power_sums(params, 1)[1]
        return EnvelopePair(
            lower=log_ratio + n / (2 * t * (n + t)),
            upper=log_ratio + n / (t * (n + t)),
            value=value,
        )

    value = power_sums(params, k + 1)[k + 1]
    integral = 1.0 / (k * t ** k) - 1.0 / (k * (n + t) ** k)
    return EnvelopePair(lower=integral, upper=1.0 / t ** (k + 1) + integral, value=value)


def mean_gap_envelope(params: EwensParams) -> EnvelopePair:
    """mu0 - mu_T lies in [n / (2(n+theta)), n / (n+theta)]."""
    _, _, _, _, a = _blocks(params)
    moments = exact_moments(params)
    return EnvelopePair(lower=a / 2, upper=a, value=moments.mu0 - moments.mu_T)


def lemma3_envelopes(params: EwensParams) -> Dict[str, EnvelopePair]:
    n, t, L, r, a = _blocks(params)
    m = exact_moments(params)

    var_core = t * (L - 1 + r)
    abs3_core = t * (L - 5 / 3 + 3 * r - 2 * r ** 2 + 2 * r ** 3 / 3)
    signed3_core = t * (L - 2 + 3 * r - r ** 2)
    sq22_upper = t * (1 / 3 - r + r ** 2 - r ** 3 / 3) + 2

    return {
        "var": EnvelopePair(var_core + a / 2 - 1, var_core + a, m.sigma0_sq),
        "abs3": EnvelopePair(abs3_core + a / 2 - 5, abs3_core + 4 + a, m.s3_abs),
        "signed3": EnvelopePair(signed3_core + a / 2 - 3, signed3_core + 2 + a, m.s3_signed),
        # only an upper bound is available for the squared-variance sum
        "sq22": EnvelopePair(0.0, sq22_upper, m.s22),
    }


def leading_equivalents(params: EwensParams) -> Dict[str, float]:
    """Leading terms of var and abs3 whenever n^2 / theta grows without bound."""
    _, t, L, r, _ = _blocks(params)
    return {
        "var": t * (L - 1 + r),
        "abs3": t * (L - 5 / 3 + 3 * r - 2 * r ** 2 + 2 * r ** 3 / 3),
        "signed3": t * (L - 2 + 3 * r - r ** 2),
    }


_CASE_ALIASES = {
    "A": "A",
    "B": "B",
    "BSTAR": "B",
    "B*": "B",
    "B-AT-CSTAR": "B",
    "C": "C",
    "C1": "C",
}


def asymptotic_equivalents(
    params: EwensParams, case: str, c: Optional[float] = None
) -> Dict[str, float]:
    key = str(getattr(case, "value", case)).upper()
    label = _CASE_ALIASES.get(key)
    if label is None:
        raise DomainError(f"unknown asymptotic case {case!r}")
    n, t = params.n, params.theta

    if label == "A":
        lead = t * math.log(n / t)
        return {"var": lead, "abs3": lead, "signed3": lead, "sq22": t / 3}

    if label == "B":
        if c is None or not c > 0:
            raise DomainError("case B needs the limit ratio c > 0")
        u = 1.0 / (c + 1)
        out = {
            "var": t * (math.log1p(c) - 1 + u),
            "abs3": t * (math.log1p(c) - 5 / 3 + 3 * u - 2 * u ** 2 + 2 * u ** 3 / 3),
            "signed3": t * (math.log1p(c) - 2 + 3 * u - u ** 2),
            "sq22": t * (1 / 3 - u + u ** 2 - u ** 3 / 3),
        }
        if key == "B-AT-CSTAR":
            # the signed third moment has no leading term at c = c*
            del out["signed3"]
        return out

    half_sq = n * n / (2 * t)
    # the additive 2 is kept as stated
    return {"var": half_sq, "abs3": half_sq, "signed3": -half_sq, "sq22": n ** 3 / (3 * t * t) + 2}
