from .coupling import (
    Case,
    CouplingKind,
    RegimeSpec,
    classify,
    coupling_theta,
    geometric_grid,
    rate_normalizer,
)
from .cstar import cstar_equation, solve_cstar
from .sweep import SweepRow, band_ratio, sweep

__all__ = [
    "Case",
    "CouplingKind",
    "RegimeSpec",
    "SweepRow",
    "band_ratio",
    "classify",
    "coupling_theta",
    "cstar_equation",
    "geometric_grid",
    "rate_normalizer",
    "solve_cstar",
    "sweep",
]
