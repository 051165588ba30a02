import math

import numpy as np
import pytest

from app.errors import DomainError
from app.exactdist import EwensParams
from app.moments import (
    SUM_IDS,
    approx_moments,
    asymptotic_equivalents,
    bernoulli_probs,
    central_moment_sum,
    exact_moments,
    leading_equivalents,
    lemma3_envelopes,
    lemma_a1_envelope,
    mean_gap_envelope,
    power_sums,
    termwise_moments,
)

GRID_N = [1, 2, 5, 17, 100, 200]
GRID_THETA = [0.1, 0.5, 1.0, 2.0, 5.0, 25.0, 200.0, 1e4]
SLACK = 1e-9


def _direct_central(params, m):
    p = bernoulli_probs(params)
    return math.fsum(p * (1 - p) ** m + (1 - p) * (-p) ** m)


class TestPowerSums:
    def test_n3_theta1(self):
        assert power_sums(EwensParams(3, 1), 1)[1] == pytest.approx(11 / 6, abs=1e-15)

    @pytest.mark.parametrize("theta", [0.5, 3.0])
    def test_single_term(self, theta):
        s = power_sums(EwensParams(1, theta), 4)
        for k in range(1, 5):
            assert s[k] == pytest.approx(theta ** -k, rel=1e-15)

    def test_n2_theta1(self):
        assert power_sums(EwensParams(2, 1), 2)[2] == 1.25

    def test_index_out_of_range(self):
        s = power_sums(EwensParams(3, 1), 2)
        assert s.k_max == 2
        with pytest.raises(DomainError):
            s[3]
        with pytest.raises(DomainError):
            s[0]

    def test_k_max_must_be_positive(self):
        with pytest.raises(DomainError):
            power_sums(EwensParams(3, 1), 0)

    @pytest.mark.parametrize("theta", GRID_THETA)
    def test_shrinking_ratio(self, theta):
        s = power_sums(EwensParams(50, theta), 4)
        for k in range(1, 4):
            assert 0 < s[k + 1] <= s[k] / theta * (1 + 1e-14)


class TestExactMoments:
    def test_n3_theta1(self):
        m = exact_moments(EwensParams(3, 1))
        assert m.mu0 == pytest.approx(11 / 6, abs=1e-14)
        assert m.sigma0_sq == pytest.approx(17 / 36, abs=1e-14)

    @pytest.mark.parametrize("theta", [1, 2.5])
    def test_single_term_is_degenerate(self, theta):
        m = exact_moments(EwensParams(1, theta))
        for value in (m.sigma0_sq, m.s3_abs, m.s3_signed, m.s22):
            assert value == pytest.approx(0.0, abs=1e-13)

    def test_symmetric_bernoulli(self):
        assert exact_moments(EwensParams(2, 1)).s3_signed == pytest.approx(0.0, abs=1e-15)

    def test_approximate_moments(self):
        params = EwensParams(100, 4.0)
        mu_T, sigma_T_sq = approx_moments(params)
        assert mu_T == pytest.approx(4 * math.log(26), rel=1e-15)
        assert sigma_T_sq == pytest.approx(4 * (math.log(26) + 4 / 104 - 1), rel=1e-14)

    @pytest.mark.parametrize("theta", [0.5, 1.0, 3.0])
    @pytest.mark.parametrize("n", [1, 2, 7, 30, 50])
    def test_matches_termwise_sums(self, n, theta):
        params = EwensParams(n, theta)
        m = exact_moments(params)
        direct = termwise_moments(params)
        assert m.sigma0_sq == pytest.approx(direct["sigma0_sq"], abs=1e-12)
        assert m.s3_abs == pytest.approx(direct["s3_abs"], abs=1e-12)
        assert m.s3_signed == pytest.approx(direct["s3_signed"], abs=1e-12)
        assert m.s22 == pytest.approx(direct["s22"], abs=1e-12)

    @pytest.mark.parametrize("theta", [0.5, 1.0, 3.0, 40.0])
    @pytest.mark.parametrize("n", [2, 10, 150])
    def test_ordering(self, n, theta):
        m = exact_moments(EwensParams(n, theta))
        eps = 1e-12
        assert m.sigma0_sq > 0
        assert m.s3_abs + eps >= abs(m.s3_signed)
        assert m.s3_abs <= m.sigma0_sq + eps
        assert m.s22 <= m.sigma0_sq + eps

    @pytest.mark.parametrize("n", [8, 16, 50, 200])
    def test_variance_at_least_one(self, n):
        for theta in (1.0, 2.0, n / 2, float(n)):
            assert exact_moments(EwensParams(n, theta)).sigma0_sq >= 1.0


class TestCentralMomentSum:
    def test_examples(self):
        assert central_moment_sum(EwensParams(3, 1), 2) == pytest.approx(17 / 36, abs=1e-15)
        assert central_moment_sum(EwensParams(2, 1), 3) == pytest.approx(0.0, abs=1e-15)
        assert central_moment_sum(EwensParams(2, 1), 4) == pytest.approx(1 / 16, abs=1e-15)

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
    @pytest.mark.parametrize("theta", [0.5, 1.0, 3.0])
    def test_matches_direct_sum(self, m, theta):
        for n in (1, 2, 3, 10, 25, 50):
            params = EwensParams(n, theta)
            assert central_moment_sum(params, m) == pytest.approx(
                _direct_central(params, m), abs=1e-12
            )

    def test_matches_moment_summary(self):
        params = EwensParams(40, 2.0)
        m = exact_moments(params)
        assert central_moment_sum(params, 2) == pytest.approx(m.sigma0_sq, abs=1e-12)
        assert central_moment_sum(params, 3) == pytest.approx(m.s3_signed, abs=1e-12)

    def test_order_below_two(self):
        with pytest.raises(DomainError):
            central_moment_sum(EwensParams(3, 1), 1)


class TestEnvelopes:
    def test_a1_k0_single_term(self):
        env = lemma_a1_envelope(EwensParams(1, 1), 0)
        assert env.lower == pytest.approx(math.log(2) + 0.25, abs=1e-15)
        assert env.value == 1.0
        assert env.upper == pytest.approx(math.log(2) + 0.5, abs=1e-15)

    def test_a1_k1_single_term(self):
        env = lemma_a1_envelope(EwensParams(1, 1), 1)
        assert (env.lower, env.value, env.upper) == (0.5, 1.0, 1.5)

    def test_a1_width(self):
        for n in (10, 1000, 100000):
            env = lemma_a1_envelope(EwensParams(n, 1.0), 0)
            assert env.width == pytest.approx(n / (2 * (n + 1)), rel=1e-9)
            assert env.width <= 0.5

    def test_a1_negative_k(self):
        with pytest.raises(DomainError):
            lemma_a1_envelope(EwensParams(3, 1), -1)

    def test_var_envelope_n1(self):
        env = lemma3_envelopes(EwensParams(1, 1))["var"]
        assert env.lower == pytest.approx(math.log(2) - 1 + 0.5 + 0.25 - 1, abs=1e-15)
        assert env.lower < 0 <= env.value + 1e-15

    def test_var_envelope_brackets(self):
        params = EwensParams(100, 1)
        env = lemma3_envelopes(params)["var"]
        p = bernoulli_probs(params)
        assert env.value == pytest.approx(math.fsum(p * (1 - p)), abs=1e-12)
        assert env.holds()

    @pytest.mark.parametrize("theta", GRID_THETA)
    @pytest.mark.parametrize("n", GRID_N)
    def test_soundness(self, n, theta):
        params = EwensParams(n, theta)
        for k in range(4):
            assert lemma_a1_envelope(params, k).holds(SLACK)
        envs = lemma3_envelopes(params)
        assert set(envs) == set(SUM_IDS)
        for key in SUM_IDS:
            assert envs[key].holds(SLACK), key
        assert envs["sq22"].lower == 0.0
        assert mean_gap_envelope(params).holds(SLACK)

    @pytest.mark.slow
    @pytest.mark.parametrize("theta", GRID_THETA)
    def test_soundness_every_n(self, theta):
        for n in range(1, 201):
            params = EwensParams(n, theta)
            for k in range(4):
                assert lemma_a1_envelope(params, k).holds(SLACK), (n, k)
            envs = lemma3_envelopes(params)
            for key in SUM_IDS:
                assert envs[key].holds(SLACK), (n, key)
            assert mean_gap_envelope(params).holds(SLACK), n


class TestEquivalents:
    def test_case_a(self):
        eq = asymptotic_equivalents(EwensParams(10 ** 6, 10), "A")
        assert eq["var"] == pytest.approx(10 * math.log(1e5), rel=1e-15)
        assert eq["sq22"] == pytest.approx(10 / 3)

    def test_case_c(self):
        eq = asymptotic_equivalents(EwensParams(100, 10 ** 6), "C")
        assert eq["signed3"] == pytest.approx(-0.005, rel=1e-15)
        assert eq["sq22"] == pytest.approx(1e6 / (3 * 1e12) + 2, rel=1e-15)

    def test_case_b(self):
        eq = asymptotic_equivalents(EwensParams(1000, 1000), "B", c=1.0)
        assert eq["var"] == pytest.approx(1000 * (math.log(2) - 1 + 0.5), rel=1e-14)

    @pytest.mark.parametrize("label", ["Bstar", "B*"])
    def test_case_b_aliases(self, label):
        params = EwensParams(400, 100)
        assert asymptotic_equivalents(params, label, c=4.0) == asymptotic_equivalents(
            params, "B", c=4.0
        )

    def test_at_cstar_has_no_signed_third(self):
        params = EwensParams(400, 100)
        at = asymptotic_equivalents(params, "b-at-cstar", c=4.0)
        full = asymptotic_equivalents(params, "B", c=4.0)
        assert "signed3" not in at
        assert at == {key: value for key, value in full.items() if key != "signed3"}

    def test_case_b_needs_c(self):
        with pytest.raises(DomainError):
            asymptotic_equivalents(EwensParams(10, 10), "B")

    def test_unknown_case(self):
        with pytest.raises(DomainError):
            asymptotic_equivalents(EwensParams(10, 10), "D")

    def test_ratio_convergence_along_sqrt_n(self):
        ratios = {"var": [], "abs3": []}
        for e in range(10, 21):
            n = 2 ** e
            params = EwensParams(n, math.sqrt(n))
            m = exact_moments(params)
            lead = leading_equivalents(params)
            ratios["var"].append(m.sigma0_sq / lead["var"])
            ratios["abs3"].append(m.s3_abs / lead["abs3"])
        for key, values in ratios.items():
            gaps = np.abs(np.array(values) - 1.0)
            assert np.all(np.diff(gaps) < 0), key
            assert gaps[-1] < 0.05, key
