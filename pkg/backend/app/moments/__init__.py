from .envelopes import (
    SUM_IDS,
    EnvelopePair,
    asymptotic_equivalents,
    leading_equivalents,
    lemma3_envelopes,
    lemma_a1_envelope,
    mean_gap_envelope,
)
from .sums import (
    MomentSummary,
    PowerSums,
    approx_moments,
    bernoulli_probs,
    central_moment_sum,
    exact_moments,
    power_sums,
    termwise_moments,
)

__all__ = [
    "SUM_IDS",
    "EnvelopePair",
    "MomentSummary",
    "PowerSums",
    "approx_moments",
    "asymptotic_equivalents",
    "bernoulli_probs",
    "central_moment_sum",
    "exact_moments",
    "leading_equivalents",
    "lemma3_envelopes",
    "lemma_a1_envelope",
    "mean_gap_envelope",
    "power_sums",
    "termwise_moments",
]
