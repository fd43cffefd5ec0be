import numpy as np
import pytest

from kinewave.curves import CumulativeCurve, SequencingError, vehicles_on_link


def _constant_rate_curve(rate, t_end, dt, cap):
    curve = CumulativeCurve(cap)
    steps = round(t_end / dt)
    for j in range(steps):
        curve.append((j + 1) * dt, rate)
    return curve


class TestEval:
    def test_prehistory_is_empty(self):
        curve = CumulativeCurve(cap=3000.0)
        assert curve.eval(-0.5) == 0.0

    def test_linear_interpolation(self):
        curve = CumulativeCurve(cap=100.0)
        curve.append(1.0, 100.0)
        assert curve.eval(0.5) == 50.0

    def test_constant_inflow_integral(self):
        # 1500 veh/hr over [0, 2] integrates to 3000 vehicles
        curve = _constant_rate_curve(1500.0, 2.0, 0.05, cap=3000.0)
        assert curve.eval(2.0) == pytest.approx(3000.0, abs=1e-9)

    def test_flat_beyond_history(self):
        curve = CumulativeCurve(cap=100.0)
        curve.append(1.0, 50.0)
        assert curve.eval(2.0) == 50.0

    def test_strict_query_past_end(self):
        curve = CumulativeCurve(cap=100.0)
        curve.append(1.0, 50.0)
        with pytest.raises(SequencingError):
            curve.eval(1.5, strict=True)

    def test_eval_monotone(self, rng):
        curve = CumulativeCurve(cap=200.0)
        t = 0.0
        for _ in range(50):
            t += rng.uniform(0.01, 0.2)
            curve.append(t, rng.uniform(0.0, 200.0))
        ts = np.sort(rng.uniform(-1.0, t + 1.0, 500))
        vals = curve.eval(ts)
        assert np.all(np.diff(vals) >= -1e-12)

    def test_lipschitz_property(self, rng):
        cap = 150.0
        curve = CumulativeCurve(cap=cap)
        t = 0.0
        for _ in range(50):
            t += rng.uniform(0.01, 0.2)
            curve.append(t, rng.uniform(0.0, cap))
        for _ in range(200):
            a = rng.uniform(-0.5, t)
            h = rng.uniform(0.0, 1.0)
            assert curve.eval(a + h) - curve.eval(a) <= cap * h + 1e-9


class TestAppend:
    def test_zero_flow(self):
        curve = CumulativeCurve(cap=3000.0)
        curve.append(0.05, 0.0)
        assert curve.last_time == 0.05
        assert curve.last_value == 0.0

    def test_accumulates_rate_times_dt(self):
        curve = CumulativeCurve(cap=3000.0)
        curve.append(0.05, 3000.0)
        assert curve.last_value == pytest.approx(150.0, rel=1e-12)

    def test_rate_at_cap_accepted(self):
        curve = CumulativeCurve(cap=3000.0)
        curve.append(0.1, 3000.0)
        assert curve.last_value == pytest.approx(300.0, rel=1e-12)

    def test_rate_above_cap_rejected(self):
        curve = CumulativeCurve(cap=3000.0)
        with pytest.raises(ValueError, match="Lipschitz"):
            curve.append(0.1, 3000.5)

    def test_nonmonotone_time_rejected(self):
        curve = CumulativeCurve(cap=100.0)
        curve.append(0.1, 10.0)
        with pytest.raises(ValueError):
            curve.append(0.1, 10.0)

    def test_append_then_eval_exact(self, rng):
        curve = CumulativeCurve(cap=100.0)
        t = 0.0
        for _ in range(100):
            dt = rng.uniform(0.001, 0.3)
            rate = rng.uniform(0.0, 100.0)
            expected = curve.last_value + rate * dt
            t += dt
            curve.append(t, rate)
            assert curve.eval(t) == pytest.approx(expected, rel=1e-12, abs=1e-12)


class TestFromBreakpoints:
    def test_roundtrip(self):
        curve = CumulativeCurve.from_breakpoints([0.0, 1.0, 3.0], [0.0, 50.0, 50.0], cap=100.0)
        assert curve.eval(2.0) == 50.0

    def test_must_start_at_zero(self):
        with pytest.raises(ValueError, match="start at"):
            CumulativeCurve.from_breakpoints([0.5, 1.0], [0.0, 10.0], cap=100.0)
        with pytest.raises(ValueError, match="start at"):
            CumulativeCurve.from_breakpoints([0.0, 1.0], [5.0, 10.0], cap=100.0)

    def test_rejects_decreasing_values(self):
        with pytest.raises(ValueError, match="nondecreasing"):
            CumulativeCurve.from_breakpoints([0.0, 1.0, 2.0], [0.0, 10.0, 5.0], cap=100.0)

    def test_rejects_lipschitz_violation(self):
        with pytest.raises(ValueError, match="Lipschitz"):
            CumulativeCurve.from_breakpoints([0.0, 1.0], [0.0, 200.0], cap=100.0)


class TestVehiclesOnLink:
    def test_identical_curves_empty_link(self):
        up = _constant_rate_curve(1000.0, 1.0, 0.1, cap=3000.0)
        down = _constant_rate_curve(1000.0, 1.0, 0.1, cap=3000.0)
        assert vehicles_on_link(up, down, 0.7) == 0.0

    def test_inflow_minus_zero_outflow(self):
        up = _constant_rate_curve(3000.0, 1.0, 0.05, cap=3000.0)
        down = CumulativeCurve(cap=3000.0)
        down.append(1.0, 0.0)
        assert vehicles_on_link(up, down, 1.0) == pytest.approx(3000.0, abs=1e-9)

    def test_jam_storage_bound(self, arc1):
        # full jam on a 3-mile, 400 veh/mile link stores 1200 vehicles
        up = _constant_rate_curve(3000.0, 0.4, 0.05, cap=3000.0)
        down = CumulativeCurve(cap=3000.0)
        down.append(0.4, 0.0)
        assert vehicles_on_link(up, down, 0.4) == pytest.approx(arc1.rho_jam * arc1.L, abs=1e-9)
