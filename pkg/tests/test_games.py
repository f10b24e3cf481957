import math

import numpy as np
import pytest

from kinetic_crowd import (GameParams, build_velocity_grid, eta, speed_table,
                           speed_tensor, transition_prob, turn_row,
                           turn_table, turn_tensor)
from oracles import ref_eta, ref_speed_row, ref_transition, ref_turn_row


def params(alpha=0.06, beta=0.1, u0=1.0, mode="full", rate="constant",
           eta0=1.0, eps_jam=0.8, groups=2):
    return GameParams(alpha=(alpha,) * groups, beta=(beta,) * groups,
                      u0=(u0,) * groups, eta0=eta0, eps_jam=eps_jam,
                      mode=mode, rate_model=rate)


class TestEta:
    def test_vacuum_density_dependent(self):
        assert eta(0.0, params(rate="density_dependent")) == 1.0

    def test_unit_density(self):
        assert eta(1.0, params(rate="density_dependent")) == pytest.approx(
            2.0 * math.exp(-1.0), rel=1e-15)

    def test_constant_model(self):
        assert eta(0.5, params(rate="constant")) == 1.0

    def test_clamps_above_one(self):
        p = params(rate="density_dependent")
        assert eta(1.7, p) == eta(1.0, p)

    def test_negative_density_rejected(self):
        with pytest.raises(ValueError):
            eta(-0.1, params())

    @pytest.mark.parametrize("rate", ["constant", "density_dependent"])
    def test_positive_and_bounded(self, rate):
        p = params(rate=rate, eta0=2.5)
        vals = eta(np.linspace(0.0, 1.0, 101), p)
        assert np.all(vals > 0.0)
        assert np.all(vals <= p.eta_cap + 1e-15)

    def test_matches_reference(self):
        for rate in ("constant", "density_dependent"):
            p = params(rate=rate, eta0=1.3)
            for rho in (0.0, 0.2, 0.77, 1.0, 1.4):
                assert eta(rho, p) == pytest.approx(
                    ref_eta(rho, 1.3, rate), rel=1e-15)


class TestTurnTable:
    def setup_method(self):
        self.vg = build_velocity_grid(5, m=1, span=(0.0, math.pi / 2),
                                      modulus=0.03)

    def test_stream_and_target_above(self):
        # both influences rotate anticlockwise regardless of density
        for rho in (0.0, 0.3, 1.0):
            d = turn_table(self.vg, 1, float(self.vg.angles[3]), 1.3,
                           rho, 0, params(alpha=0.06))
            assert d.p_plus == pytest.approx(0.06, abs=1e-15)
            assert d.p_stay == pytest.approx(0.94, abs=1e-15)
            assert d.p_minus == 0.0

    def test_stream_above_target_below(self):
        d = turn_table(self.vg, 2, float(self.vg.angles[3]), 0.0,
                       0.5, 0, params(alpha=0.06))
        assert d.p_plus == pytest.approx(0.03, abs=1e-15)
        assert d.p_stay == pytest.approx(0.94, abs=1e-15)
        assert d.p_minus == pytest.approx(0.03, abs=1e-15)

    def test_zero_sensitivity_is_identity(self):
        d = turn_table(self.vg, 2, 0.1, 1.2, 0.4, 0, params(alpha=0.0))
        assert (d.p_minus, d.p_stay, d.p_plus) == (0.0, 1.0, 0.0)

    def test_target_only_ignores_stream_and_density(self):
        p = params(alpha=0.06, mode="target_only")
        for rho in (0.0, 0.5, 1.0):
            for theta_p in (0.0, float(self.vg.angles[4])):
                d = turn_table(self.vg, 2, theta_p, 0.0, rho, 0, p)
                assert d.p_minus == pytest.approx(0.06, abs=1e-15)
                assert d.p_stay == pytest.approx(0.94, abs=1e-15)
                assert d.p_plus == 0.0

    def test_target_tie_keeps_direction(self):
        p = params(alpha=0.06, mode="target_only")
        d = turn_table(self.vg, 2, 0.0, float(self.vg.angles[2]), 0.5, 0, p)
        assert d.p_stay == 1.0

    def test_monotone_target_attraction(self):
        # stream tied, target above: more sensitivity, more rotation
        vg = self.vg
        for rho in (0.0, 0.25, 0.5, 0.99):
            masses = [turn_table(vg, 1, float(vg.angles[1]), 1.4, rho, 0,
                                 params(alpha=a)).p_plus
                      for a in (0.05, 0.1, 0.2, 0.4)]
            assert all(b > a for a, b in zip(masses, masses[1:]))

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            turn_table(self.vg, 5, 0.0, 0.0, 0.5, 0, params())

    @pytest.mark.parametrize("wrap", [False, True])
    @pytest.mark.parametrize("mode", ["full", "target_only"])
    def test_matches_reference_rows(self, wrap, mode):
        vg = build_velocity_grid(6, m=1, span=(0.0, 1.5 * math.pi), wrap=wrap)
        p = params(alpha=0.3, mode=mode)
        thetas = list(vg.angles) + [0.7, 3.9]
        for h in range(6):
            for theta_p in thetas:
                for theta_nu in thetas:
                    for rho in (0.0, 0.31, 0.8, 1.0):
                        got = turn_row(vg, h, theta_p, theta_nu, rho, 0, p)
                        want = ref_turn_row(list(vg.angles), wrap, h, theta_p,
                                            theta_nu, rho, 0.3, mode)
                        for i in range(6):
                            assert got[i] == pytest.approx(
                                want.get(i, 0.0), abs=1e-14)


class TestSpeedTable:
    def test_faster_field(self):
        d = speed_table(1, 3, 0.5, 0, params(beta=0.1), m=5)
        np.testing.assert_allclose(d.probs, [0.0, 0.95, 0.05, 0.0, 0.0],
                                   rtol=0, atol=1e-15)

    def test_equal_speeds_interior(self):
        d = speed_table(2, 2, 0.5, 0, params(beta=0.1), m=5)
        np.testing.assert_allclose(d.probs, [0.0, 0.05, 0.90, 0.05, 0.0],
                                   rtol=0, atol=1e-15)

    def test_slower_field(self):
        d = speed_table(3, 1, 0.5, 0, params(beta=0.1), m=5)
        np.testing.assert_allclose(d.probs, [0.0, 0.0, 0.05, 0.95, 0.0],
                                   rtol=0, atol=1e-15)

    def test_insensitive_walker_keeps_speed(self):
        for q in (0, 2, 4):
            d = speed_table(2, q, 0.5, 0, params(beta=0.0), m=5)
            np.testing.assert_array_equal(d.probs, [0.0, 0.0, 1.0, 0.0, 0.0])

    def test_jam_forces_one_step_down(self):
        # frozen from the scalar reference: all mass on k-1
        want = ref_speed_row(5, 3, 3, 0.9, 0.1, 0.8)
        assert want == {2: 1.0}
        d = speed_table(3, 3, 0.9, 0, params(beta=0.1, eps_jam=0.8), m=5)
        np.testing.assert_array_equal(d.probs, [0.0, 0.0, 1.0, 0.0, 0.0])

    def test_jam_at_lowest_speed_stays(self):
        d = speed_table(0, 2, 0.95, 0, params(beta=0.1, eps_jam=0.8), m=4)
        np.testing.assert_array_equal(d.probs, [1.0, 0.0, 0.0, 0.0])

    def test_bottom_boundary_folds_back(self):
        d = speed_table(0, 0, 0.5, 0, params(beta=0.1), m=4)
        np.testing.assert_allclose(d.probs, [0.95, 0.05, 0.0, 0.0],
                                   rtol=0, atol=1e-15)

    def test_top_boundary_folds_back(self):
        d = speed_table(3, 3, 0.5, 0, params(beta=0.1), m=4)
        np.testing.assert_allclose(d.probs, [0.0, 0.0, 0.05, 0.95],
                                   rtol=0, atol=1e-15)

    def test_single_modulus_degenerates(self):
        d = speed_table(0, 0, 0.6, 0, params(beta=0.4), m=1)
        np.testing.assert_array_equal(d.probs, [1.0])

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            speed_table(4, 0, 0.5, 0, params(), m=4)

    def test_matches_reference_rows(self):
        p = params(beta=0.35, eps_jam=0.75)
        for m in (1, 2, 3, 6):
            for k in range(m):
                for q in range(m):
                    for rho in (0.0, 0.2, 0.74, 0.76, 1.0):
                        got = speed_table(k, q, rho, 0, p, m=m).probs
                        want = ref_speed_row(m, k, q, rho, 0.35, 0.75)
                        for j in range(m):
                            assert got[j] == pytest.approx(
                                want.get(j, 0.0), abs=1e-14)


class TestTransitionProb:
    def test_identity_when_insensitive(self):
        vg = build_velocity_grid(4, m=3, span=(0.0, math.pi))
        p = params(alpha=0.0, beta=0.0)
        for i in range(4):
            for j in range(3):
                got = transition_prob(vg, 2, 1, 0, 2, i, j, 0.3, 0.5, 0, p)
                assert got == (1.0 if (i, j) == (2, 1) else 0.0)

    def test_single_modulus_reduces_to_turn_row(self):
        vg = build_velocity_grid(5, m=1, span=(0.0, math.pi / 2), modulus=0.03)
        p = params(alpha=0.2, beta=0.3)
        for i in range(5):
            got = transition_prob(vg, 2, 0, 3, 0, i, 0, 5.1, 0.4, 0, p)
            want = turn_row(vg, 2, float(vg.angles[3]), 5.1, 0.4, 0, p)[i]
            assert got == pytest.approx(want, abs=1e-15)

    def test_randomized_outputs_sum_to_one(self):
        rng = np.random.default_rng(42)
        vg = build_velocity_grid(6, m=4)
        p = params(alpha=0.4, beta=0.25, eps_jam=0.7)
        for _ in range(25):
            h, plocal = rng.integers(0, 6, size=2)
            k, q = rng.integers(0, 4, size=2)
            theta_nu = float(rng.uniform(0.0, 2.0 * math.pi))
            rho = float(rng.uniform(0.0, 1.0))
            total = sum(
                transition_prob(vg, int(h), int(k), int(plocal), int(q),
                                i, j, theta_nu, rho, 0, p)
                for i in range(6) for j in range(4))
            assert total == pytest.approx(1.0, abs=1e-12)

    def test_matches_reference(self):
        rng = np.random.default_rng(3)
        vg = build_velocity_grid(5, m=3, span=(0.0, math.pi), wrap=False)
        p = params(alpha=0.3, beta=0.2, eps_jam=0.8)
        for _ in range(60):
            h, pl, i = rng.integers(0, 5, size=3)
            k, q, j = rng.integers(0, 3, size=3)
            theta_nu = float(rng.uniform(0.0, 2.0 * math.pi))
            rho = float(rng.uniform(0.0, 1.1))
            got = transition_prob(vg, int(h), int(k), int(pl), int(q),
                                  int(i), int(j), theta_nu, rho, 0, p)
            want = ref_transition(list(vg.angles), False, 3, int(h), int(k),
                                  int(pl), int(q), int(i), int(j), theta_nu,
                                  rho, 0.3, 0.2, 0.8, "full")
            assert got == pytest.approx(want, abs=1e-14)


class TestStochasticity:
    @pytest.mark.parametrize("n,m,wrap", [(1, 1, False), (2, 2, True),
                                          (3, 2, False), (5, 4, True)])
    def test_rows_are_probability_vectors(self, n, m, wrap):
        vg = build_velocity_grid(n, m=m, wrap=wrap,
                                 modulus=0.5 if m == 1 else None)
        p = params(alpha=0.5, beta=0.5, eps_jam=0.8)
        rhos = np.linspace(0.0, 1.0, 21)
        for h in range(n):
            for pl in range(n):
                for theta_nu in list(vg.angles) + [0.42]:
                    rows = np.array([turn_row(vg, h, float(vg.angles[pl]),
                                              float(theta_nu), r, 0, p)
                                     for r in rhos])
                    assert np.all(rows >= -1e-15)
                    assert np.all(rows <= 1.0 + 1e-15)
                    np.testing.assert_allclose(rows.sum(axis=1), 1.0,
                                               rtol=0, atol=1e-12)
        for k in range(m):
            for q in range(m):
                rows = np.array([speed_table(k, q, r, 0, p, m=m).probs
                                 for r in rhos])
                assert np.all(rows >= -1e-15)
                np.testing.assert_allclose(rows.sum(axis=1), 1.0,
                                           rtol=0, atol=1e-12)

    def test_lipschitz_in_density(self):
        # away from the jam threshold the tables vary at most like the
        # sensitivity weights; eta varies at most like eta0 * max|rho e^-rho|
        vg = build_velocity_grid(4, m=3, span=(0.0, math.pi))
        p = params(alpha=0.5, beta=0.5, rate="density_dependent",
                   eps_jam=0.8)
        rhos = np.linspace(0.0, 0.79, 300)
        drho = rhos[1] - rhos[0]
        for h, pl, theta_nu in [(1, 2, 0.1), (2, 0, 2.8), (0, 0, float(vg.angles[0]))]:
            rows = np.array([turn_row(vg, h, float(vg.angles[pl]), theta_nu,
                                      r, 0, p) for r in rhos])
            slope = np.abs(np.diff(rows, axis=0)) / drho
            assert slope.max() <= 2 * 0.5 + 1e-9
        for k, q in [(0, 2), (1, 1), (2, 0)]:
            rows = np.array([speed_table(k, q, r, 0, p, m=3).probs
                             for r in rhos])
            slope = np.abs(np.diff(rows, axis=0)) / drho
            assert slope.max() <= 2 * 0.5 + 1e-9
        ev = eta(rhos, p)
        assert np.abs(np.diff(ev)).max() / drho <= p.eta0 * 0.5

    def test_jammed_region_is_flat(self):
        p = params(beta=0.5, eps_jam=0.8)
        rows = np.array([speed_table(2, 2, r, 0, p, m=4).probs
                         for r in np.linspace(0.81, 1.0, 50)])
        assert np.all(rows == rows[0])


class TestTensorsMatchScalarOps:
    @pytest.mark.parametrize("wrap", [False, True])
    @pytest.mark.parametrize("mode", ["full", "target_only"])
    def test_turn_tensor(self, wrap, mode):
        vg = build_velocity_grid(5, m=1,
                                 span=(0.0, math.pi) if not wrap else None,
                                 wrap=wrap)
        rng = np.random.default_rng(11)
        rho = rng.uniform(0.0, 1.0, size=7)
        theta_nu = rng.uniform(0.0, 2.0 * math.pi, size=7)
        theta_nu[0] = float(vg.angles[2])      # exercise a tie
        s = 0.37
        p = params(alpha=s, mode=mode)
        tensor = turn_tensor(vg, theta_nu, rho, s, mode)
        for site in range(7):
            for h in range(5):
                for pl in range(5):
                    want = turn_row(vg, h, float(vg.angles[pl]),
                                    float(theta_nu[site]), float(rho[site]),
                                    0, p)
                    np.testing.assert_allclose(tensor[h, pl, :, site], want,
                                               rtol=0, atol=1e-15)

    def test_speed_tensor(self):
        rng = np.random.default_rng(12)
        rho = rng.uniform(0.0, 1.0, size=9)
        rho[3] = 0.95                          # exercise the jam override
        p = params(beta=0.3, eps_jam=0.8)
        for m in (1, 3, 4):
            tensor = speed_tensor(m, rho, 0.3, 0.8)
            for site in range(9):
                for k in range(m):
                    for q in range(m):
                        want = speed_table(k, q, float(rho[site]), 0, p, m=m)
                        np.testing.assert_allclose(tensor[k, q, :, site],
                                                   want.probs,
                                                   rtol=0, atol=1e-15)


class TestGameParamsValidation:
    def test_turn_weight_bound(self):
        with pytest.raises(ValueError):
            GameParams(alpha=(0.9,), beta=(0.0,), u0=(1.0,))

    def test_speed_weight_bound(self):
        with pytest.raises(ValueError):
            GameParams(alpha=(0.1,), beta=(0.3,), u0=(2.0,))

    def test_eps_jam_range(self):
        with pytest.raises(ValueError):
            GameParams(alpha=(0.1,), beta=(0.1,), u0=(1.0,), eps_jam=0.0)
        with pytest.raises(ValueError):
            GameParams(alpha=(0.1,), beta=(0.1,), u0=(1.0,), eps_jam=1.2)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            GameParams(alpha=(0.1,), beta=(0.1,), u0=(1.0,), mode="panic")

    def test_scaled_activity_keeps_weights_legal(self):
        p = GameParams(alpha=(1.0,), beta=(1.0,), u0=(0.5,))
        assert p.turn_weight(0) == 0.5
