from .gammas import (
    BoundReport,
    Branch,
    Conditions,
    Gammas,
    LowerBound,
    bound_report,
    display4,
    display5,
    display6,
    evaluate_conditions,
    gamma1,
    gamma2,
    gamma3,
    gamma4,
    gamma_values,
    lower_bound,
    lyapunov_fraction,
    upper_bound,
)
from .hall_barbour import HallBarbourDelta, hall_barbour_delta, hall_barbour_lower_surrogate

__all__ = [
    "BoundReport",
    "Branch",
    "Conditions",
    "Gammas",
    "HallBarbourDelta",
    "LowerBound",
    "bound_report",
    "display4",
    "display5",
    "display6",
    "evaluate_conditions",
    "gamma1",
    "gamma2",
    "gamma3",
    "gamma4",
    "gamma_values",
    "hall_barbour_delta",
    "hall_barbour_lower_surrogate",
    "lower_bound",
    "lyapunov_fraction",
    "upper_bound",
]
