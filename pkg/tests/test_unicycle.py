import math

import numpy as np
import pytest

from staa.unicycle import (AccelCmd, KinodynamicLimits, UnicycleState,
                           action_set, brake_command, predict)

import oracles

LIM = KinodynamicLimits()
TBAR = 0.3


class TestActionSet:
    def test_49_members(self):
        assert len(action_set(7, LIM)) == 49

    def test_two_gives_corners(self):
        cmds = {(c.a, c.b) for c in action_set(2, LIM)}
        assert cmds == {(-2.0, -6.0), (-2.0, 6.0), (2.0, -6.0), (2.0, 6.0)}

    def test_symmetric_and_contains_zero(self):
        cmds = action_set(7, LIM)
        pairs = [(c.a, c.b) for c in cmds]
        assert any(a == 0.0 and b == 0.0 for a, b in pairs)
        for a, b in pairs:
            assert any(abs(a + a2) < 1e-12 and abs(b + b2) < 1e-12
                       for a2, b2 in pairs)

    def test_uniform_spacing(self):
        cmds = action_set(7, LIM)
        avals = sorted({c.a for c in cmds})
        gaps = np.diff(avals)
        assert np.all(np.abs(gaps - gaps[0]) < 1e-12)

    def test_cardinality(self):
        for n in (2, 3, 5, 9):
            assert len(action_set(n, LIM)) == n * n


class TestPredict:
    def test_straight_coasting(self):
        s = UnicycleState(0, 0, 0, 1.0, 0.0)
        out = predict(s, AccelCmd(0, 0), TBAR, LIM)
        assert out.x == pytest.approx(0.3)
        assert out.y == pytest.approx(0.0)
        assert out.theta == pytest.approx(0.0)
        assert out.v == pytest.approx(1.0)
        assert out.omega == pytest.approx(0.0)

    def test_rest_fixed_point(self):
        s = UnicycleState(1.0, -2.0, 0.5)
        out = predict(s, AccelCmd(0, 0), TBAR, LIM)
        assert (out.x, out.y, out.theta, out.v, out.omega) == \
            (1.0, -2.0, 0.5, 0.0, 0.0)

    def test_matches_fine_ode(self):
        s = UnicycleState(0, 0, 0, 1.0, 1.0)
        out = predict(s, AccelCmd(1, 1), TBAR, LIM)
        ox, oy, oth, ov, oom = oracles.integrate_unicycle(
            0, 0, 0, 1.0, 1.0, 1.0, 1.0, TBAR)
        assert math.hypot(out.x - ox, out.y - oy) < 2e-3
        assert abs(out.theta - oth) < 1e-6

    def test_continuity_around_zero_omega(self):
        s = UnicycleState(0, 0, 0.7, 1.5, 0.0)
        # mid-interval omega of +-1e-6 vs the straight-line branch
        eps = 1e-6 / (0.5 * TBAR)
        lo = predict(s, AccelCmd(0.0, -eps * (1 - 1e-9)), TBAR, LIM)
        hi = predict(s, AccelCmd(0.0, eps * (1 - 1e-9)), TBAR, LIM)
        mid = predict(s, AccelCmd(0.0, 0.0), TBAR, LIM)
        for o in (lo, hi):
            assert math.hypot(o.x - mid.x, o.y - mid.y) < 1e-6

    def test_clamping(self):
        rng = np.random.default_rng(2)
        for _ in range(500):
            s = UnicycleState(0, 0, rng.uniform(-3, 3),
                              rng.uniform(-1, 2), rng.uniform(-3, 3))
            cmd = AccelCmd(rng.uniform(-2, 2), rng.uniform(-6, 6))
            out = predict(s, cmd, TBAR, LIM)
            assert -1.0 <= out.v <= 2.0
            assert -3.0 <= out.omega <= 3.0

    def test_arc_consistency_constant_velocities(self):
        rng = np.random.default_rng(4)
        for _ in range(200):
            v = rng.uniform(-1, 2)
            om = rng.uniform(-3, 3)
            s = UnicycleState(0, 0, rng.uniform(-3, 3), v, om)
            out = predict(s, AccelCmd(0, 0), TBAR, LIM)
            dth = out.theta - s.theta
            dth = (dth + math.pi) % (2 * math.pi) - math.pi
            assert dth == pytest.approx(om * TBAR, abs=1e-9)
            disp = math.hypot(out.x - s.x, out.y - s.y)
            if abs(om) > 1e-5:
                r = v / om
                assert disp == pytest.approx(2 * abs(r) * abs(math.sin(om * TBAR / 2)),
                                             abs=1e-9)
            else:
                assert disp == pytest.approx(abs(v) * TBAR, abs=1e-6)

    def test_prediction_fidelity_random(self):
        # acceptance-level check at reduced sample count (full run in
        # test_acceptance): stays within limits so no clamping applies
        rng = np.random.default_rng(8)
        for _ in range(1000):
            v = rng.uniform(-1, 2)
            om = rng.uniform(-3, 3)
            a = rng.uniform(max(-2, (-1 - v) / TBAR), min(2, (2 - v) / TBAR))
            b = rng.uniform(max(-6, (-3 - om) / TBAR), min(6, (3 - om) / TBAR))
            th = rng.uniform(-math.pi, math.pi)
            out = predict(UnicycleState(0, 0, th, v, om), AccelCmd(a, b), TBAR, LIM)
            ox, oy, oth, _, _ = oracles.integrate_unicycle(0, 0, th, v, om, a, b, TBAR)
            assert math.hypot(out.x - ox, out.y - oy) < 5e-3
            dth = (out.theta - oth + math.pi) % (2 * math.pi) - math.pi
            assert abs(dth) < 1e-3


class TestBrake:
    def test_reaches_zero_within_step(self):
        s = UnicycleState(0, 0, 0, 0.5, -1.0)
        cmd = brake_command(s, TBAR, LIM)
        out = predict(s, cmd, TBAR, LIM)
        assert out.v == pytest.approx(0.0, abs=1e-12)
        assert out.omega == pytest.approx(0.0, abs=1e-12)

    def test_saturates_at_limits(self):
        s = UnicycleState(0, 0, 0, 2.0, 3.0)
        cmd = brake_command(s, TBAR, LIM)
        assert cmd.a == -2.0
        assert cmd.b == -6.0
