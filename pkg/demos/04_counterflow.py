"""Case study: two opposing crowds re-route toward a shared exit.

Two groups start on opposite sides of the room walking straight at each
other.  Both know the exit is at the top, but the left group reacts twice
as fast (turn probability 0.2 vs 0.1 per encounter).  The faster group
peels upward sooner, producing a visibly asymmetric pattern; rerunning
with equal sensitivities restores mirror symmetry to machine precision.

Run:  python demos/04_counterflow.py        (about 5 s)
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


asym, asym_states = capture(builtin_document("case2"))

equal_doc = builtin_document("case2")
apply_overrides(equal_doc, ["groups[1].alpha=0.2"])
sym, sym_states = capture(equal_doc)

# ----------------------------------------------------------------------
# Per-group density fields at matching times.
picks = [0, len(asym_states) // 2, len(asym_states) - 1]
fig, axes = plt.subplots(2, len(picks), figsize=(3.2 * len(picks), 6.2))
for col, idx in enumerate(picks):
    t, state = asym_states[idx]
    mom = moments(state)
    for row in range(2):
        ax = axes[row, col]
        ax.imshow(mom.rho[row].T, origin="lower", extent=(0, 1, 0, 1),
                  vmin=0.0, vmax=0.5, cmap="inferno")
        ax.set_title(f"group {row + 1}, t = {t:.1f}")
        ax.set_xticks([]), ax.set_yticks([])
fig.tight_layout()
fig.savefig(OUT / "counterflow_density.png", dpi=150)
print(f"group densities -> {OUT / 'counterflow_density.png'}")

# ----------------------------------------------------------------------
# Vertical progress of each group's center of mass.
fig, ax = plt.subplots(figsize=(5.2, 3.4))
ts = [f.t for f in asym.frames]
ax.plot(ts, [f.com[0][1] for f in asym.frames], "o-",
        label="group 1 (alpha=0.2)")
ax.plot(ts, [f.com[1][1] for f in asym.frames], "s-",
        label="group 2 (alpha=0.1)")
ax.plot(ts, [f.com[0][1] for f in sym.frames], ":",
        label="either group, equal alphas")
ax.set_xlabel("t")
ax.set_ylabel("center of mass y")
ax.legend()
fig.tight_layout()
fig.savefig(OUT / "counterflow_rise.png", dpi=150)
print(f"rise comparison -> {OUT / 'counterflow_rise.png'}")

last = asym.frames[-1]
print(f"\nfinal center-of-mass height: group1 {last.com[0][1]:.4f} vs "
      f"group2 {last.com[1][1]:.4f}")
defect = max(abs(f.com[0][1] - f.com[1][1]) for f in sym.frames)
print(f"with equal sensitivities the two groups mirror each other; the "
      f"largest height mismatch over the run is {defect:.2e}")
