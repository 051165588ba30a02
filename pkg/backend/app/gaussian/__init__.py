from .kolmogorov import (
    KolmogorovReport,
    Side,
    Standardization,
    StandardizationKind,
    kolmogorov_distance,
    standardize,
    sup_gap,
)
from .normal import (
    Corollary2Budget,
    LemmaA2Report,
    corollary2_budget,
    lemma_a2_check,
    phi_cdf,
    phi_pdf,
    scale_bound,
    shift_bound,
    sigma_ratio_bounds,
)

__all__ = [
    "Corollary2Budget",
    "KolmogorovReport",
    "LemmaA2Report",
    "Side",
    "Standardization",
    "StandardizationKind",
    "corollary2_budget",
    "kolmogorov_distance",
    "lemma_a2_check",
    "phi_cdf",
    "phi_pdf",
    "scale_bound",
    "shift_bound",
    "sigma_ratio_bounds",
    "standardize",
    "sup_gap",
]
