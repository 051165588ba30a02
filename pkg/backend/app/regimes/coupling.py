# ============================================================
# 🧭 Couplings theta = theta(n) and their asymptotic cases
# ============================================================

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

import numpy as np

from ..errors import DomainError
from ..settings import settings
from .cstar import solve_cstar


class CouplingKind(str, Enum):
    FIXED = "fixed"
    POWER = "power"
    RATIO = "ratio"


class Case(str, Enum):
    A = "A"
    B = "B"
    BSTAR = "Bstar"
    B_AT_CSTAR = "B-at-cstar"
    C1 = "C1"


_RATIO_CASES = (Case.BSTAR, Case.B_AT_CSTAR)


@dataclass(frozen=True)
class RegimeSpec:
    """Fixed(theta0): theta = theta0; Power(a, p): theta = a n^p; Ratio(c): theta = n / c.

    ``declared_case`` is filled from the coupling when omitted; a supplied
    value must agree with it (plain ``B`` stands for either ratio case).
    """

    kind: CouplingKind
    theta0: Optional[float] = None
    a: Optional[float] = None
    p: Optional[float] = None
    c: Optional[float] = None
    declared_case: Optional[Case] = None

    def __post_init__(self):
        kind = CouplingKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is CouplingKind.FIXED and not _positive(self.theta0):
            raise DomainError("fixed coupling needs theta0 > 0")
        if kind is CouplingKind.POWER:
            if not _positive(self.a):
                raise DomainError("power coupling needs a > 0")
            if self.p is None or not (self.p >= 0 and math.isfinite(self.p)):
                raise DomainError("power coupling needs p >= 0 (theta nondecreasing in n)")
            if self.p >= 2:
                raise DomainError(f"power p={self.p} >= 2 violates n^2/theta -> infinity")
        if kind is CouplingKind.RATIO and not _positive(self.c):
            raise DomainError("ratio coupling needs c > 0")

        implied = classify(self, solve_cstar() if self.ratio_limit is not None else None)
        if self.declared_case is None:
            object.__setattr__(self, "declared_case", implied)
            return
        try:
            declared = Case(self.declared_case)
        except ValueError:
            raise DomainError(f"unknown case {self.declared_case!r}") from None
        if declared is not implied and not (declared is Case.B and implied in _RATIO_CASES):
            raise DomainError(
                f"declared case {declared.value} contradicts {self.describe()} (case {implied.value})"
            )
        object.__setattr__(self, "declared_case", declared)

    @property
    def ratio_limit(self) -> Optional[float]:
        """n / theta(n) when it is constant, else None."""
        if self.kind is CouplingKind.RATIO:
            return self.c
        if self.kind is CouplingKind.POWER and self.p == 1:
            return 1.0 / self.a
        return None

    @classmethod
    def fixed(cls, theta0: float, declared_case: Optional[Case] = None) -> "RegimeSpec":
        return cls(CouplingKind.FIXED, theta0=theta0, declared_case=declared_case)

    @classmethod
    def power(cls, a: float, p: float, declared_case: Optional[Case] = None) -> "RegimeSpec":
        return cls(CouplingKind.POWER, a=a, p=p, declared_case=declared_case)

    @classmethod
    def ratio(cls, c: float, declared_case: Optional[Case] = None) -> "RegimeSpec":
        return cls(CouplingKind.RATIO, c=c, declared_case=declared_case)

    def describe(self) -> dict:
        if self.kind is CouplingKind.FIXED:
            return {"coupling": "fixed", "theta0": self.theta0}
        if self.kind is CouplingKind.POWER:
            return {"coupling": "power", "a": self.a, "p": self.p}
        return {"coupling": "ratio", "c": self.c}


def _positive(value: Optional[float]) -> bool:
    return value is not None and value > 0 and math.isfinite(value)


def coupling_theta(spec: RegimeSpec, n: int) -> float:
    if spec.kind is CouplingKind.FIXED:
        return float(spec.theta0)
    if spec.kind is CouplingKind.POWER:
        return spec.a * float(n) ** spec.p
    return n / spec.c


def _ratio_case(c: float, cstar: float) -> Case:
    if abs(c - cstar) <= settings.CSTAR_DEGENERACY:
        return Case.B_AT_CSTAR
    return Case.BSTAR


def classify(spec: RegimeSpec, cstar: Optional[float]) -> Case:
    """Case of the coupling as n grows; B-at-cstar has no known decay rate."""
    c = spec.ratio_limit
    if c is not None:
        # theta = a n is the ratio coupling with c = 1/a
        if cstar is None:
            raise DomainError("a ratio coupling needs c* to be classified")
        return _ratio_case(c, cstar)
    if spec.kind is CouplingKind.FIXED or spec.p < 1:
        return Case.A
    return Case.C1


def rate_normalizer(case: Case, n: int, theta: float) -> float:
    """The inverse decay rate: sqrt(theta log(n/theta)), sqrt(theta) or sqrt(n^2/theta)."""
    case = Case(case)
    if case is Case.A:
        if not n > theta:
            raise DomainError(f"case A rate needs n > theta (n={n}, theta={theta:g})")
        return math.sqrt(theta * math.log(n / theta))
    if case is Case.C1:
        return math.sqrt(n * n / theta)
    return math.sqrt(theta)


def geometric_grid(
    log2_min: Optional[float] = None,
    log2_max: Optional[float] = None,
    points: Optional[int] = None,
) -> List[int]:
    log2_min = settings.GRID_LOG2_MIN if log2_min is None else log2_min
    log2_max = settings.GRID_LOG2_MAX if log2_max is None else log2_max
    points = settings.GRID_POINTS if points is None else points
    if points < 1 or log2_max < log2_min or log2_min < 0:
        raise DomainError(f"bad grid: 2^{log2_min}..2^{log2_max} with {points} points")
    exponents = np.linspace(log2_min, log2_max, points)
    return sorted({int(round(2.0 ** e)) for e in exponents})
