import numpy as np
import pytest

from kinewave.profiles import StepProfile, constant, generate_inflow


class TestStepProfile:
    def test_right_continuous_steps(self):
        prof = StepProfile([0.0, 1.0, 2.0], [10.0, 20.0, 0.0])
        assert prof.rate(-0.5) == 0.0
        assert prof.rate(0.0) == 10.0
        assert prof.rate(1.0) == 20.0
        assert prof.rate(1.999) == 20.0
        assert prof.rate(5.0) == 0.0

    def test_vector_eval(self):
        prof = StepProfile([0.0, 1.0], [5.0, 7.0])
        np.testing.assert_allclose(prof.rate(np.array([-1.0, 0.5, 1.5])), [0.0, 5.0, 7.0])

    def test_integral(self):
        prof = StepProfile([0.0, 1.0, 2.0], [10.0, 20.0, 0.0])
        assert prof.integral(3.0) == pytest.approx(30.0)
        assert prof.integral(1.5) == pytest.approx(20.0)

    def test_shifted(self):
        prof = StepProfile([0.0, 1.0, 2.0], [10.0, 20.0, 0.0])
        moved = prof.shifted(1.5)
        for t in np.linspace(0.0, 3.0, 25):
            assert moved.rate(t) == prof.rate(t + 1.5)

    def test_constant(self):
        assert constant(100.0).rate(3.0) == 100.0
        delayed = constant(100.0, t_on=0.5)
        assert delayed.rate(0.25) == 0.0
        assert delayed.rate(0.5) == 100.0


class TestGenerateInflow:
    def test_deterministic_given_seed(self):
        a = generate_inflow(3000.0, (0.5, 3.75), 0.05, seed=7)
        b = generate_inflow(3000.0, (0.5, 3.75), 0.05, seed=7)
        np.testing.assert_array_equal(a.rates, b.rates)
        np.testing.assert_array_equal(a.times, b.times)

    def test_different_seed_differs(self):
        a = generate_inflow(3000.0, (0.5, 3.75), 0.05, seed=7)
        b = generate_inflow(3000.0, (0.5, 3.75), 0.05, seed=8)
        assert not np.array_equal(a.rates, b.rates)

    def test_bounds_and_window(self):
        prof = generate_inflow(3000.0, (0.5, 3.75), 0.05, seed=42)
        assert np.all(prof.rates >= 0.0)
        assert np.all(prof.rates <= 3000.0)
        assert prof.rate(0.49) == 0.0
        assert prof.rate(3.75) == 0.0
        assert prof.rate(3.7499) > 0.0 or prof.rate(3.7499) == 0.0  # draw may be ~0
        # draws occupy exactly the 65 steps starting in [0.5, 3.75)
        active = prof.rates[prof.rates > 0.0]
        assert (3.75 - 0.5) / 0.05 == 65
        assert len(prof.rates) == 65 + 2  # leading and trailing zero steps

    def test_mean_near_half_cap(self):
        cap = 3000.0
        devs = []
        for seed in range(5):
            prof = generate_inflow(cap, (0.5, 3.75), 0.05, seed=seed)
            draws = prof.rates[1:-1]
            se = cap / np.sqrt(12.0) / np.sqrt(draws.size)
            devs.append(abs(draws.mean() - cap / 2.0) <= 3.0 * se)
        assert np.count_nonzero(devs) >= 4  # 3-sigma outliers are rare, not impossible
