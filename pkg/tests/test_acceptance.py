"""Acceptance suite: every release criterion at its stated tolerance.

Each test evaluates one criterion end to end and prints a single
``ACCEPTANCE <n> PASS/FAIL`` line (run pytest with -s to see them live).
"""

import math
import time
from filecmp import cmp

import numpy as np
import pytest

from kinetic_crowd import (GameParams, StateField, VisibilityZone,
                           advect_x, advection_convergence,
                           build_velocity_grid, builtin_document, collision,
                           make_grid, parse_scenario, run, speed_tensor,
                           target_angle_field, transition_prob, turn_tensor)
from kinetic_crowd.cli import main
from kinetic_crowd.scenario import apply_overrides


def _report(num, ok, detail):
    print(f"\nACCEPTANCE {num} {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"criterion {num}: {detail}"


def _timed_run(doc):
    t0 = time.perf_counter()
    result = run(parse_scenario(doc))
    return result, time.perf_counter() - t0


@pytest.fixture(scope="module")
def case1_run():
    return _timed_run(builtin_document("case1"))


@pytest.fixture(scope="module")
def case1_zero_run():
    doc = builtin_document("case1")
    apply_overrides(doc, ["groups[0].alpha=0.0", "groups[1].alpha=0.0"])
    return _timed_run(doc)


@pytest.fixture(scope="module")
def case2_run():
    return _timed_run(builtin_document("case2"))


def test_criterion_1_stochasticity_sweep():
    t0 = time.perf_counter()
    n = m = 8
    vg = build_velocity_grid(n, m=m)          # full circle, wrap
    rhos = np.linspace(0.0, 1.0, 101)
    s = w = 0.5                                # alpha*u0 = beta*u0 = 1/2
    worst_b = worst_c = worst_a = 0.0
    lo = hi = 0.0
    # target angles: a lattice tie, a between-angles value, a wrapped value
    for theta_nu in (float(vg.angles[3]), 0.3, 5.9):
        b = turn_tensor(vg, np.full(101, theta_nu), rhos, s, "full")
        c = speed_tensor(m, rhos, w, 0.8)      # includes jammed densities
        worst_b = max(worst_b, float(np.abs(b.sum(axis=2) - 1.0).max()))
        worst_c = max(worst_c, float(np.abs(c.sum(axis=2) - 1.0).max()))
        lo = min(lo, float(b.min()), float(c.min()))
        hi = max(hi, float(b.max()), float(c.max()))
        a_sum = np.einsum("hpir,kqjr->hpkqr", b, c)
        worst_a = max(worst_a, float(np.abs(a_sum - 1.0).max()))
    # spot-check the scalar route against the tensors
    rng = np.random.default_rng(0)
    p = GameParams(alpha=(1.0,), beta=(1.0,), u0=(0.5,), eps_jam=0.8)
    for _ in range(40):
        h, pl = (int(v) for v in rng.integers(0, n, size=2))
        k, q = (int(v) for v in rng.integers(0, m, size=2))
        rho = float(rng.choice(rhos))
        total = sum(transition_prob(vg, h, k, pl, q, i, j, 5.9, rho, 0, p)
                    for i in range(n) for j in range(m))
        worst_a = max(worst_a, abs(total - 1.0))
    elapsed = time.perf_counter() - t0
    ok = (worst_b <= 1e-12 and worst_c <= 1e-12 and worst_a <= 1e-12
          and lo >= 0.0 and hi <= 1.0 and elapsed < 10.0)
    _report(1, ok,
            f"row-sum defects B={worst_b:.2e} C={worst_c:.2e} A={worst_a:.2e}, "
            f"entries in [{lo:.3f}, {hi:.3f}], {elapsed:.2f}s")


def test_criterion_2_collision_mass_neutrality():
    t0 = time.perf_counter()
    rng = np.random.default_rng(123)
    grid = make_grid(20, 20)
    vg = build_velocity_grid(6, m=3)
    params = GameParams(alpha=(0.35, 0.2), beta=(0.25, 0.3), u0=(1.0, 1.0),
                        eta0=1.5, eps_jam=0.8, mode="full",
                        rate_model="density_dependent")
    zone = VisibilityZone(mode="local")
    theta = np.stack([target_angle_field(grid, (0.7, 0.3)),
                      target_angle_field(grid, 1.2)])
    worst = 0.0
    for _ in range(100):
        f = StateField.zeros(grid, vg, groups=2)
        amp = rng.uniform(0.0005, 0.026)
        f.data[:] = rng.random(f.data.shape) * amp
        j = collision(f, params, zone, theta)
        imbalance = float(np.abs(j.sum(axis=(1, 2))).max())
        scale = params.eta0 * float(f.total_density().max()) ** 2
        worst = max(worst, imbalance / scale)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-12 and elapsed < 10.0
    _report(2, ok, f"max cellwise |sum_ij J| = {worst:.2e} "
                   f"relative to eta0*rho^2, {elapsed:.2f}s")


def test_criterion_3_exact_advection_at_unit_courant():
    rng = np.random.default_rng(7)
    nx = 64
    dx = 1.0 / nx                  # power-of-two spacing: c == 1.0 exactly
    f = rng.random(nx)
    g = f.copy()
    worst = 0.0
    for k in range(1, 51):
        g = advect_x(g, 1.0, dx, dx)
        exact = np.concatenate([np.zeros(k), f[:-k]]) if k < nx else np.zeros(nx)
        worst = max(worst, float(np.abs(g - exact).max()))
    ok = worst <= 1e-14
    _report(3, ok, f"max abs error over 50 unit-Courant steps = {worst:.2e}")


def test_criterion_4_convergence_orders():
    t0 = time.perf_counter()
    _, up = advection_convergence("none", resolutions=(100, 200, 400))
    _, mm = advection_convergence("minmod", resolutions=(100, 200, 400))
    elapsed = time.perf_counter() - t0
    ok = (all(0.8 <= r <= 1.1 for r in up) and all(r >= 1.5 for r in mm)
          and elapsed < 30.0)
    _report(4, ok, f"upwind rates {[f'{r:.3f}' for r in up]}, "
                   f"minmod rates {[f'{r:.3f}' for r in mm]}, {elapsed:.2f}s")


def test_criterion_5_positivity_and_boundedness(case1_run, case2_run):
    (r1, t1), (r2, t2) = case1_run, case2_run
    ok = (r1.f_min >= -1e-14 and r1.rho_max <= 1.0 + 1e-6 and t1 < 60.0
          and r2.f_min >= -1e-14 and r2.rho_max <= 1.0 + 1e-6 and t2 < 60.0)
    _report(5, ok,
            f"corner exit: min f = {r1.f_min:.2e}, max rho = {r1.rho_max:.6f} "
            f"({t1:.1f}s); counterflow: min f = {r2.f_min:.2e}, "
            f"max rho = {r2.rho_max:.6f} ({t2:.1f}s)")


def test_criterion_6_corner_exit_comparison(case1_run, case1_zero_run):
    (res, _), (res0, _) = case1_run, case1_zero_run
    gap = res.frames[-1].com[0][0] - res0.frames[-1].com[0][0]
    aligned = [fr.alignment[0] for fr in res.frames]
    strictly_up = all(b > a for a, b in zip(aligned, aligned[1:]))
    base = res0.frames[0].alignment[0]
    drift = max(abs(fr.alignment[0] - base) for fr in res0.frames)
    ok = gap >= 0.02 and strictly_up and drift <= 1e-12
    _report(6, ok,
            f"center-of-mass x gap = {gap:.4f} (needs >= 0.02) at "
            f"t = {res.frames[-1].t:g}, alignment strictly increasing = "
            f"{strictly_up} ({aligned[0]:.4f} -> {aligned[-1]:.4f}), "
            f"zero-sensitivity drift = {drift:.2e}")


def test_criterion_7_counterflow_asymmetry_and_symmetry(case2_run):
    res, _ = case2_run
    leads = all(fr.com[0][1] > fr.com[1][1] for fr in res.frames[1:])
    doc = builtin_document("case2")
    apply_overrides(doc, ["groups[1].alpha=0.2"])
    sym = run(parse_scenario(doc))
    worst = 0.0
    for fr in sym.frames:
        worst = max(worst,
                    abs(fr.mass[0] - fr.mass[1]),
                    abs(fr.com[0][0] - (1.0 - fr.com[1][0])),
                    abs(fr.com[0][1] - fr.com[1][1]),
                    abs(fr.alignment[0] - fr.alignment[1]))
    ok = leads and worst <= 1e-10
    _report(7, ok,
            f"faster group leads in y at every frame = {leads} "
            f"(final {res.frames[-1].com[0][1]:.4f} vs "
            f"{res.frames[-1].com[1][1]:.4f}); equal-sensitivity mirror "
            f"defect = {worst:.2e} (needs <= 1e-10)")


def test_criterion_8_mass_conservation_ledger():
    from kinetic_crowd.solver import step
    sc = parse_scenario(builtin_document("case2"))
    grid, vg = sc.build_grid(), sc.build_velocity()
    params, zone = sc.game_params(), sc.visibility_zone()
    theta = sc.target_angles(grid)
    cfg = sc.step_config(grid, vg)
    f = sc.initial_state(grid, vg)
    area = grid.cell_area
    m0 = f.data.sum(axis=(1, 2, 3, 4)) * area
    total0 = float(m0.sum())
    cum_out = 0.0
    worst_closed = 0.0
    worst_open = 0.0
    saw_outflow = False
    steps = math.ceil(sc.stepping.t_end / cfg.dt)
    for _ in range(steps):
        f, out = step(f, cfg, params, zone, theta)
        cum_out += float(out.sum())
        masses = f.data.sum(axis=(1, 2, 3, 4)) * area
        if not saw_outflow and cum_out == 0.0:
            worst_closed = max(worst_closed,
                               float(np.abs(masses - m0).max()))
        else:
            saw_outflow = True
            worst_open = max(worst_open,
                             abs(float(masses.sum()) + cum_out - total0))
    ok = worst_closed <= 1e-12 and worst_open <= 1e-10 and saw_outflow
    _report(8, ok,
            f"per-group drift before outflow = {worst_closed:.2e} "
            f"(<= 1e-12), mass+outflow drift after = {worst_open:.2e} "
            f"(<= 1e-10), outflow observed = {saw_outflow}")


def test_criterion_9_worker_count_determinism(tmp_path):
    out1 = tmp_path / "w1"
    out8 = tmp_path / "w8"
    assert main(["case2", "--out", str(out1), "--threads", "1"]) == 0
    assert main(["case2", "--out", str(out8), "--threads", "8"]) == 0
    same = cmp(out1 / "diagnostics.jsonl", out8 / "diagnostics.jsonl",
               shallow=False)
    b1 = (out1 / "diagnostics.jsonl").read_bytes()
    ok = same and len(b1) > 0
    _report(9, ok, f"diagnostics.jsonl byte-identical across 1 and 8 "
                   f"workers = {same} ({len(b1)} bytes)")
