from .params import EwensParams, parse_theta
from .pmf import (
    LengthDistribution,
    cdf,
    exact_cdf,
    length_distribution,
    pmf_poisson_binomial,
    pmf_stirling,
)
from .stirling import StirlingTable, build_stirling_table

__all__ = [
    "EwensParams",
    "LengthDistribution",
    "StirlingTable",
    "build_stirling_table",
    "cdf",
    "exact_cdf",
    "length_distribution",
    "parse_theta",
    "pmf_poisson_binomial",
    "pmf_stirling",
]
