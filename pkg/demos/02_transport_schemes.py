"""Transport building blocks: upwind exactness and convergence orders.

The solver advances each velocity state by one-dimensional transport
sweeps.  Two schemes are available: plain first-order upwind (monotone, and
exact when the Courant number is 1) and a minmod-limited second-order
reconstruction.  This script shows the unit-Courant shift property and
measures the L1 convergence order of both schemes on a smooth profile.

Run:  python demos/02_transport_schemes.py
"""

import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from kinetic_crowd import advect_x, advection_convergence

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# ----------------------------------------------------------------------
# At Courant number exactly 1, upwind reduces to a pure one-cell shift:
# no smearing at all, to the last bit.
nx = 64
dx = 1.0 / nx
rng = np.random.default_rng(0)
profile = rng.random(nx)
shifted = advect_x(profile, 1.0, dx, dx)
print("unit-Courant shift error:",
      np.abs(shifted[1:] - profile[:-1]).max())

# ----------------------------------------------------------------------
# Below Courant 1 the schemes differ: upwind diffuses, minmod keeps the
# profile much sharper.  Advect a square pulse at c = 0.5 for one pass.
x = (np.arange(nx) + 0.5) * dx
pulse = ((x > 0.2) & (x < 0.4)).astype(float)
steps = nx  # half a domain length at c = 0.5
up, mm = pulse.copy(), pulse.copy()
for _ in range(steps):
    up = advect_x(up, 1.0, 0.5 * dx, dx, bc="periodic")
    mm = advect_x(mm, 1.0, 0.5 * dx, dx, limiter="minmod", bc="periodic")
exact = ((x > 0.7) & (x < 0.9)).astype(float)

fig, ax = plt.subplots(figsize=(6, 3.2))
ax.plot(x, exact, "k:", label="exact")
ax.plot(x, up, label="upwind")
ax.plot(x, mm, label="minmod")
ax.set_xlabel("x")
ax.set_ylabel("advected pulse")
ax.legend()
fig.tight_layout()
fig.savefig(OUT / "pulse_comparison.png", dpi=150)
print(f"pulse comparison -> {OUT / 'pulse_comparison.png'}")

# ----------------------------------------------------------------------
# Measured convergence orders on a smooth Gaussian, one periodic pass.
print("\nL1 convergence study (grids 100 / 200 / 400):")
for limiter in ("none", "minmod"):
    errors, rates = advection_convergence(limiter)
    err_text = ", ".join(f"{e:.3e}" for e in errors)
    rate_text = ", ".join(f"{r:.3f}" for r in rates)
    print(f"  {limiter:>7}: errors [{err_text}]  orders [{rate_text}]")
print("upwind sits near first order, the limited scheme well above 1.5.")
