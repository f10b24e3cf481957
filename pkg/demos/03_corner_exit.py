"""Case study: a crowd caught in a corner finds the exit.

A single crowd starts near the lower-left corner of a square room, its
members walking with one speed modulus but five different headings fanned
between east and north.  Everyone knows the exit lies due east.  With zero
sensitivity the headings never change and the crowd shears apart; with a
small sensitivity each encounter gives a walker a chance to rotate one
step toward the exit, and the crowd collectively re-aligns while it moves.

Run:  python demos/03_corner_exit.py        (about 5 s)
"""

import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from kinetic_crowd import (apply_overrides, builtin_document, moments,
                           parse_scenario, run)

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)


def capture(doc):
    states = []
    result = run(parse_scenario(doc), sink=lambda s, d, k: states.append((d.t, s)))
    return result, states


base = builtin_document("case1")
result, states = capture(base)

zero = builtin_document("case1")
apply_overrides(zero, ["groups[0].alpha=0.0", "groups[1].alpha=0.0"])
result0, states0 = capture(zero)

# ----------------------------------------------------------------------
# Density snapshots: the sensitive crowd stays compact and drifts east,
# the insensitive one fans out into five separating lumps.
picks = [0, len(states) // 2, len(states) - 1]
fig, axes = plt.subplots(2, len(picks), figsize=(3.2 * len(picks), 6.2))
for row, snaps in enumerate((states, states0)):
    for col, idx in enumerate(picks):
        t, state = snaps[idx]
        rho = moments(state).rho_total
        ax = axes[row, col]
        ax.imshow(rho.T, origin="lower", extent=(0, 1, 0, 1),
                  vmin=0.0, vmax=0.5, cmap="inferno")
        label = "alpha=0.06" if row == 0 else "alpha=0"
        ax.set_title(f"{label}, t = {t:.1f}")
        ax.set_xticks([]), ax.set_yticks([])
fig.tight_layout()
fig.savefig(OUT / "corner_exit_density.png", dpi=150)
print(f"density snapshots -> {OUT / 'corner_exit_density.png'}")

# ----------------------------------------------------------------------
# Alignment toward the exit (mass-weighted mean of cos of the heading
# error) and the center-of-mass track.
fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.4))
ax1.plot([f.t for f in result.frames],
         [f.alignment[0] for f in result.frames], "o-", label="alpha=0.06")
ax1.plot([f.t for f in result0.frames],
         [f.alignment[0] for f in result0.frames], "s--", label="alpha=0")
ax1.set_xlabel("t")
ax1.set_ylabel("alignment toward exit")
ax1.legend()

for res, style, label in ((result, "o-", "alpha=0.06"),
                          (result0, "s--", "alpha=0")):
    xs = [f.com[0][0] for f in res.frames]
    ys = [f.com[0][1] for f in res.frames]
    ax2.plot(xs, ys, style, label=label)
ax2.set_xlabel("center of mass x")
ax2.set_ylabel("center of mass y")
ax2.legend()
fig.tight_layout()
fig.savefig(OUT / "corner_exit_diagnostics.png", dpi=150)
print(f"alignment and track  -> {OUT / 'corner_exit_diagnostics.png'}")

gap = result.frames[-1].com[0][0] - result0.frames[-1].com[0][0]
print(f"\nby t = {result.frames[-1].t:g} the sensitive crowd leads the "
      f"insensitive one by {gap:.3f} domain lengths in x")
print(f"alignment went {result.frames[0].alignment[0]:.4f} -> "
      f"{result.frames[-1].alignment[0]:.4f} (constant without sensitivity)")
