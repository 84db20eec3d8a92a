import inspect

import numpy as np
import pytest

from thermoprobe import (AsymptoteExceededError, DomainError, elasticity,
                         elasticity_derivative, estimate_conductivity, heat_flux,
                         sample_curve, vertical_asymptote)
from thermoprobe.elasticity import elasticity_from_asymptote


def log_derivative(config, q, rel_step=1e-6):
    """d ln(kappa_hat) / d ln(q) by central differences of the estimator."""
    lo, hi = q * (1 - rel_step), q * (1 + rel_step)
    k_lo, k_hi = estimate_conductivity(config, lo), estimate_conductivity(config, hi)
    return (np.log(k_hi) - np.log(k_lo)) / (np.log(hi) - np.log(lo))


class TestElasticity:
    def test_fe_ag_value(self, fe_ag):
        q = heat_flux(fe_ag, 73.0)
        assert elasticity(fe_ag, q) == pytest.approx(3.09, abs=0.02)
        assert elasticity(fe_ag, 443.48) == pytest.approx(656.05 / (656.05 - 443.48), rel=1e-4)

    def test_al_pb_value(self, al_pb):
        assert elasticity(al_pb, 257.69) == pytest.approx(14.8, abs=0.2)

    @pytest.mark.parametrize("q", [50.0, 300.0, 443.48, 600.0, 650.0])
    def test_matches_log_derivative_of_estimator(self, fe_ag, q):
        assert elasticity(fe_ag, q) == pytest.approx(log_derivative(fe_ag, q), rel=1e-6)

    def test_tends_to_one_at_zero(self, fe_ag):
        assert elasticity(fe_ag, 1e-9) == pytest.approx(1.0, abs=1e-10)

    def test_does_not_depend_on_kappa_A(self):
        for fn in (elasticity, elasticity_derivative, vertical_asymptote):
            assert "kappa_A" not in inspect.signature(fn).parameters

    def test_domain(self, fe_ag):
        q_bar = vertical_asymptote(fe_ag)
        with pytest.raises(AsymptoteExceededError) as info:
            elasticity(fe_ag, q_bar)
        assert info.value.q_asymptote == q_bar
        with pytest.raises(AsymptoteExceededError):
            elasticity(fe_ag, q_bar + 1)
        with pytest.raises(DomainError):
            elasticity(fe_ag, 0.0)
        with pytest.raises(DomainError):
            elasticity(fe_ag, -3.0)

    def test_forms_agree(self, fe_ag, al_pb, ag_cu):
        rng = np.random.default_rng(3)
        for cfg in (fe_ag, al_pb, ag_cu):
            q = rng.uniform(0, 1, 1000) * vertical_asymptote(cfg) * 0.999 + 1e-6
            np.testing.assert_allclose(elasticity(cfg, q), elasticity_from_asymptote(cfg, q), rtol=1e-12)

    def test_positive_and_increasing(self, fe_ag):
        rng = np.random.default_rng(4)
        q_bar = vertical_asymptote(fe_ag)
        pairs = np.sort(rng.uniform(1e-3, q_bar * 0.9999, size=(1000, 2)), axis=1)
        pairs = pairs[pairs[:, 0] < pairs[:, 1]]
        e1, e2 = elasticity(fe_ag, pairs[:, 0]), elasticity(fe_ag, pairs[:, 1])
        assert np.all(e1 > 1.0)
        assert np.all(e2 > e1)

    def test_reversed_gradient(self, fe_ag):
        cold = fe_ag.replace(source_temp=25.0, ambient_temp=100.0)
        assert elasticity(cold, -443.48) == pytest.approx(elasticity(fe_ag, 443.48), rel=1e-14)

    def test_amplification_first_order(self, fe_ag):
        q = heat_flux(fe_ag, 73.0)
        e = elasticity(fe_ag, q)
        gaps = []
        for rel in (1e-2, 1e-3, 1e-4, 1e-5):
            k_hat = estimate_conductivity(fe_ag, q * (1 + rel))
            gaps.append(abs((k_hat - 73.0) / 73.0 / rel - e))
        assert gaps == sorted(gaps, reverse=True)
        assert gaps[-1] < 1e-3


class TestDerivative:
    def test_positive(self, fe_ag):
        q = np.linspace(1.0, 655.0, 50)
        assert np.all(elasticity_derivative(fe_ag, q) > 0)

    def test_at_zero(self, fe_ag):
        assert elasticity_derivative(fe_ag, 1e-12) == pytest.approx(1 / vertical_asymptote(fe_ag), rel=1e-9)

    # truncation error is (step / (q_bar - q))^2, below 1e-6 for q < 0.9 q_bar
    @pytest.mark.parametrize("frac", [0.05, 0.3, 0.676, 0.8, 0.85])
    def test_central_difference(self, fe_ag, frac):
        q_bar = vertical_asymptote(fe_ag)
        q, step = frac * q_bar, 1e-4 * q_bar
        fd = (elasticity(fe_ag, q + step) - elasticity(fe_ag, q - step)) / (2 * step)
        assert elasticity_derivative(fe_ag, q) == pytest.approx(fd, rel=1e-6)

    def test_raw_data_form(self, al_pb):
        # derivative written from the problem data rather than the asymptote
        h, kB, dT, tail = 10.0, 35.0, 75.0, 6.0
        q = 257.69
        expected = dT * h * kB * (kB + h * tail) / (-q * (kB + h * tail) + h * kB * dT) ** 2
        assert elasticity_derivative(al_pb, q) == pytest.approx(expected, rel=1e-12)


class TestAsymptote:
    def test_values(self, fe_ag, al_pb, ag_cu):
        assert vertical_asymptote(fe_ag) == pytest.approx(656.05, abs=0.01)
        assert vertical_asymptote(al_pb) == pytest.approx(276.31, abs=0.01)
        assert vertical_asymptote(ag_cu) == pytest.approx(649.10, abs=0.01)

    def test_interface_at_end_limit(self, fe_ag):
        for l in (9.9, 9.999, 9.999999):
            cfg = fe_ag.replace(interface=l)
            assert vertical_asymptote(cfg) == pytest.approx(10 * 75, rel=2 * 10 * (10 - l) / 419)


class TestCurve:
    def test_two_samples(self, fe_ag):
        c = sample_curve(fe_ag, 100.0, 650.0, 2)
        assert c.flux.tolist() == [100.0, 650.0]
        assert len(c) == 2

    def test_fe_ag_curve(self, fe_ag):
        c = sample_curve(fe_ag, 100.0, 650.0, 500)
        assert np.all(np.diff(c.flux) > 0) and np.all(np.diff(c.values) > 0)
        assert np.all(c.values > 0)
        assert c.values[-1] > 100
        assert c.values[-1] == pytest.approx(656.054 / 6.054, rel=1e-4)
        assert c.samples[0] == (100.0, pytest.approx(elasticity(fe_ag, 100.0)))

    def test_touching_asymptote(self, fe_ag):
        with pytest.raises(AsymptoteExceededError):
            sample_curve(fe_ag, 100.0, vertical_asymptote(fe_ag), 10)

    @pytest.mark.parametrize("lo,hi,n", [(100, 50, 10), (100, 200, 1), (0.0, 200, 5)])
    def test_bad_arguments(self, fe_ag, lo, hi, n):
        with pytest.raises(DomainError):
            sample_curve(fe_ag, lo, hi, n)
