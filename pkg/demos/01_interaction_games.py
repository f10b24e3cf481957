"""A tour of the interaction games that drive the crowd model.

Walkers re-draw their velocity whenever they meet someone.  Two tables
control the draw: the direction game rotates a walker one lattice step
toward its target and/or toward the heading of the walker it met, and the
speed game nudges the modulus toward the other walker's modulus.  Both are
conditioned on the local crowd density, and every row is a probability
vector no matter what the density does.

Run:  python demos/01_interaction_games.py
Writes figures to demos/out/.
"""

import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from kinetic_crowd import (GameParams, build_velocity_grid, eta, speed_table,
                           turn_table)

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# ----------------------------------------------------------------------
# The encounter rate: busier streets mean more encounters, up to a point.
# The density-dependent model rises to a peak and decays once the crowd
# is so dense that nobody can maneuver.
rho = np.linspace(0.0, 1.0, 200)
fig, ax = plt.subplots(figsize=(5, 3.2))
for model in ("constant", "density_dependent"):
    p = GameParams(alpha=(0.1,), beta=(0.1,), u0=(1.0,), eta0=1.0,
                   rate_model=model)
    ax.plot(rho, [eta(r, p) for r in rho], label=model)
ax.set_xlabel("local density rho")
ax.set_ylabel("encounter rate eta(rho)")
ax.legend()
fig.tight_layout()
fig.savefig(OUT / "encounter_rate.png", dpi=150)
print(f"encounter rate curve -> {OUT / 'encounter_rate.png'}")

# ----------------------------------------------------------------------
# The direction game.  Consider a walker heading along direction index 2
# of a five-direction fan, with its target off to the clockwise side and
# the person it met walking counterclockwise of it.  At low density the
# target dominates; at high density the stream does.
vg = build_velocity_grid(5, m=1, span=(0.0, np.pi / 2), modulus=0.03)
p = GameParams(alpha=(0.3,), beta=(0.0,), u0=(1.0,), mode="full")
print("\nturn probabilities for h=2, stream above, target below (alpha=0.3):")
print(f"{'rho':>5} {'p_minus':>9} {'p_stay':>9} {'p_plus':>9}")
rows = []
for r in (0.0, 0.25, 0.5, 0.75, 1.0):
    d = turn_table(vg, 2, float(vg.angles[3]), 0.0, r, 0, p)
    rows.append((r, d.p_minus, d.p_stay, d.p_plus))
    print(f"{r:5.2f} {d.p_minus:9.4f} {d.p_stay:9.4f} {d.p_plus:9.4f}")

rows = np.array(rows)
fig, ax = plt.subplots(figsize=(5, 3.2))
ax.plot(rows[:, 0], rows[:, 1], "o-", label="toward target (clockwise)")
ax.plot(rows[:, 0], rows[:, 3], "s-", label="toward stream (anticlockwise)")
ax.set_xlabel("local density rho")
ax.set_ylabel("turn probability")
ax.legend()
fig.tight_layout()
fig.savefig(OUT / "turn_game.png", dpi=150)
print(f"turn game tradeoff -> {OUT / 'turn_game.png'}")

# ----------------------------------------------------------------------
# The speed game.  A walker at speed index 2 of five meets someone faster,
# equal, or slower.  The adjustment probability scales with density, and
# above the jam threshold everyone decelerates one step deterministically.
p = GameParams(alpha=(0.0,), beta=(0.4,), u0=(1.0,), eps_jam=0.8)
print("\nspeed rows for k=2, m=5, beta=0.4, rho=0.5 and rho=0.9 (jam):")
for q, label in ((4, "faster"), (2, "equal"), (0, "slower")):
    row = speed_table(2, q, 0.5, 0, p, m=5).probs
    jam = speed_table(2, q, 0.9, 0, p, m=5).probs
    print(f"  meets {label:7}: {np.round(row, 3)}   jammed: {np.round(jam, 3)}")

print("\nevery row above sums to 1; see tests/ for the exhaustive sweeps.")
