# ============================================================
# 📊 Berry-Esseen upper bound and reverse (lower) bounds
# Every closed form below is written exactly as displayed, block by block.
# ============================================================

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional

from ..errors import ConditionViolatedError, DegenerateError, DomainError
from ..exactdist.params import EwensParams
from ..moments.sums import MomentSummary, exact_moments
from ..settings import settings


# ------------------------------------------------------------
# Displayed building blocks
# ------------------------------------------------------------
def _log_term(n: int, t: float) -> float:
    return math.log1p(n / t)


def display4(n: int, t: float) -> float:
    """theta(log(1+n/theta) - 1 + theta/(n+theta)) + n/(2(theta+n)) - 1."""
    return t * (_log_term(n, t) - 1 + t / (n + t)) + n / (2 * (t + n)) - 1


def _var_upper(n: int, t: float) -> float:
    return t * (_log_term(n, t) - 1 + t / (n + t)) + n / (t + n)


def _signed3_core(n: int, t: float) -> float:
    return t * (_log_term(n, t) - 2 + 3 * t / (n + t) - t ** 2 / (n + t) ** 2)


def display5(n: int, t: float) -> float:
    return _signed3_core(n, t) - 3 + n / (2 * (n + t))


def display6(n: int, t: float) -> float:
    return _signed3_core(n, t) + 2 + n / (n + t)


def _gamma1_numerator(n: int, t: float) -> float:
    braces = (
        _log_term(n, t)
        - 5 / 3
        + 3 * t / (n + t)
        - 2 * t ** 2 / (n + t) ** 2
        + 2 * t ** 3 / (3 * (n + t) ** 3)
    )
    return t * braces + 4 + n / (n + t)


def _gamma3_numerator(n: int, t: float) -> float:
    braces = 1 / 3 - t / (n + t) + t ** 2 / (n + t) ** 2 - t ** 3 / (3 * (n + t) ** 3)
    return t * braces + 2


# ------------------------------------------------------------
# Conditions
# ------------------------------------------------------------
@dataclass(frozen=True)
class Conditions:
    assth1: bool
    assth2i: bool
    assth2ii: bool
    var_ge_1: bool


def evaluate_conditions(
    params: EwensParams, moments: Optional[MomentSummary] = None
) -> Conditions:
    m = exact_moments(params) if moments is None else moments
    n, t = params.n, params.theta
    return Conditions(
        assth1=display4(n, t) > 0,
        assth2i=display5(n, t) > 0,
        assth2ii=display6(n, t) < 0,
        var_ge_1=m.sigma0_sq >= 1.0,
    )


# ------------------------------------------------------------
# gamma_1 .. gamma_4
# ------------------------------------------------------------
def _require_display4(n: int, t: float) -> float:
    den = display4(n, t)
    if not den > 0:
        raise ConditionViolatedError("(4)", f"display (4) is {den:.6g} <= 0 at n={n}, theta={t:g}")
    return den


def _require_var_upper(n: int, t: float) -> float:
    den = _var_upper(n, t)
    if not den > 0:
        raise ConditionViolatedError("var-upper", f"variance upper envelope is {den:.6g} <= 0")
    return den


def gamma1(params: EwensParams) -> float:
    n, t = params.n, params.theta
    return _gamma1_numerator(n, t) / _require_display4(n, t) ** 1.5


def gamma2(params: EwensParams) -> float:
    n, t = params.n, params.theta
    return display5(n, t) / _require_var_upper(n, t) ** 1.5


def gamma3(params: EwensParams) -> float:
    n, t = params.n, params.theta
    return _gamma3_numerator(n, t) / _require_display4(n, t) ** 2


def gamma4(params: EwensParams) -> float:
    n, t = params.n, params.theta
    return -display6(n, t) / _require_var_upper(n, t) ** 1.5


@dataclass(frozen=True)
class Gammas:
    gamma1: float
    gamma2: float
    gamma3: float
    gamma4: float


def gamma_values(params: EwensParams) -> Gammas:
    return Gammas(gamma1(params), gamma2(params), gamma3(params), gamma4(params))


# ------------------------------------------------------------
# Bounds
# ------------------------------------------------------------
def upper_bound(params: EwensParams, C: Optional[float] = None) -> float:
    """C * gamma_1 bounds sup |F - Phi| for the exactly standardized length."""
    C = settings.BERRY_ESSEEN_C if C is None else C
    if not display4(params.n, params.theta) > 0:
        raise ConditionViolatedError("(4)")
    return C * gamma1(params)


def lyapunov_fraction(params: EwensParams, moments: Optional[MomentSummary] = None) -> float:
    if params.n < 2:
        raise DegenerateError("the Lyapunov fraction needs n >= 2")
    m = exact_moments(params) if moments is None else moments
    return m.s3_abs / m.sigma0 ** 3


class Branch(str, Enum):
    I = "i"
    II = "ii"
    NONE = "none"


@dataclass(frozen=True)
class LowerBound:
    which: Branch
    value: Optional[float]

    @property
    def vacuous(self) -> bool:
        return self.value is None or self.value <= 0


def _check_D(D: float) -> None:
    if not (D > 0 and math.isfinite(D)):
        raise DomainError(f"D must be a positive finite constant, got {D}")


def lower_bound(
    params: EwensParams, D: float, moments: Optional[MomentSummary] = None
) -> LowerBound:
    """gamma_2/D - gamma_3 or gamma_4/D - gamma_3, whichever branch applies.

    Negative values are returned as computed.
    """
    _check_D(D)
    cond = evaluate_conditions(params, moments)
    if not (cond.assth1 and cond.var_ge_1):
        return LowerBound(Branch.NONE, None)
    if cond.assth2i:
        return LowerBound(Branch.I, gamma2(params) / D - gamma3(params))
    if cond.assth2ii:
        return LowerBound(Branch.II, gamma4(params) / D - gamma3(params))
    return LowerBound(Branch.NONE, None)


# ------------------------------------------------------------
# Report
# ------------------------------------------------------------
@dataclass(frozen=True)
class BoundReport:
    params: EwensParams
    gamma1: Optional[float]
    gamma2: Optional[float]
    gamma3: Optional[float]
    gamma4: Optional[float]
    cond_assth1: bool
    cond_assth2i: bool
    cond_assth2ii: bool
    var_ge_1: bool
    upper: Optional[float]
    lower_i: Optional[float]
    lower_ii: Optional[float]
    lyapunov: Optional[float]
    C: float
    D: float
    reasons: Dict[str, str] = field(default_factory=dict)

    def lower_i_at(self, D: float) -> Optional[float]:
        _check_D(D)
        if self.lower_i is None:
            return None
        return self.gamma2 / D - self.gamma3

    def lower_ii_at(self, D: float) -> Optional[float]:
        _check_D(D)
        if self.lower_ii is None:
            return None
        return self.gamma4 / D - self.gamma3


def _try(fn, params, reasons: Dict[str, str], key: str) -> Optional[float]:
    try:
        return fn(params)
    except DomainError as exc:
        reasons[key] = str(exc)
        return None


def bound_report(
    params: EwensParams,
    D: Optional[float] = None,
    C: Optional[float] = None,
    moments: Optional[MomentSummary] = None,
) -> BoundReport:
    C = settings.BERRY_ESSEEN_C if C is None else C
    D = settings.HALL_BARBOUR_D if D is None else D
    _check_D(D)
    m = exact_moments(params) if moments is None else moments
    cond = evaluate_conditions(params, m)
    reasons: Dict[str, str] = {}

    g1 = _try(gamma1, params, reasons, "gamma1")
    g2 = _try(gamma2, params, reasons, "gamma2")
    g3 = _try(gamma3, params, reasons, "gamma3")
    g4 = _try(gamma4, params, reasons, "gamma4")

    upper = C * g1 if cond.assth1 and g1 is not None else None
    if upper is None:
        reasons["upper"] = "condition (4) does not hold"

    low = lower_bound(params, D, m)
    lower_i = low.value if low.which is Branch.I else None
    lower_ii = low.value if low.which is Branch.II else None
    if low.which is Branch.NONE:
        if not cond.assth1:
            reasons["lower"] = "condition (4) does not hold"
        elif not cond.var_ge_1:
            reasons["lower"] = "var(K) < 1"
        else:
            reasons["lower"] = "neither condition (5) nor (6) holds"

    lyapunov = _try(lambda p: lyapunov_fraction(p, m), params, reasons, "lyapunov")

    return BoundReport(
        params=params,
        gamma1=g1,
        gamma2=g2,
        gamma3=g3,
        gamma4=g4,
        cond_assth1=cond.assth1,
        cond_assth2i=cond.assth2i,
        cond_assth2ii=cond.assth2ii,
        var_ge_1=cond.var_ge_1,
        upper=upper,
        lower_i=lower_i,
        lower_ii=lower_ii,
        lyapunov=lyapunov,
        C=C,
        D=D,
        reasons=reasons,
    )
