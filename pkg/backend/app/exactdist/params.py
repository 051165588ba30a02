import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..errors import DomainError

ThetaLike = Union[int, float, Fraction, str]

_RATIONAL = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_theta(text: str) -> Union[Fraction, float]:
    """'p/q' or an integer gives an exact Fraction; a decimal gives a float."""
    match = _RATIONAL.match(text)
    if match:
        p, q = int(match.group(1)), int(match.group(2) or 1)
        if p == 0 or q == 0:
            raise DomainError(f"theta must be a positive rational p/q, got {text!r}")
        return Fraction(p, q)
    try:
        value = float(text)
    except ValueError:
        raise DomainError(f"cannot parse theta from {text!r}") from None
    return value


@dataclass(frozen=True)
class EwensParams:
    """Sample size n and concentration theta.

    Integers, Fractions and 'p/q' strings keep an exact copy of theta in
    ``theta_exact`` so the rational evaluation paths can run.
    """

    n: int
    theta: float
    theta_exact: Optional[Fraction] = None

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")

        raw = parse_theta(self.theta) if isinstance(self.theta, str) else self.theta
        if isinstance(raw, bool):
            raise DomainError("theta must be numeric")
        if isinstance(raw, (int, Fraction)):
            exact = Fraction(raw)
            value = float(exact)
        else:
            exact = self.theta_exact
            value = float(raw)

        if not math.isfinite(value) or value <= 0 or (exact is not None and exact <= 0):
            raise DomainError(f"theta must be positive and finite, got {self.theta!r}")
        object.__setattr__(self, "theta", value)
        object.__setattr__(self, "theta_exact", exact)

    @property
    def is_rational(self) -> bool:
        return self.theta_exact is not None

    def theta_text(self) -> str:
        if self.theta_exact is not None:
            return str(self.theta_exact)
        return repr(self.theta)
