"""Per-frame summary quantities: masses, centers of mass, target alignment,
occupied-region contour, and cumulative boundary outflow."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .contour import support_contour
from .grid import StateField
from .kinetics import moments

EDGES = ("left", "right", "bottom", "top")


@dataclass
class Diagnostics:
    """Summary of one output frame.

    ``com`` and ``alignment`` are None for a group carrying no mass.
    ``alignment`` is the mass-weighted mean of cos(theta_i - theta_nu), so
    it is 1 exactly when everyone heads straight for the target.
    """

    t: float
    mass: tuple[float, ...]
    com: tuple[tuple[float, float] | None, ...]
    alignment: tuple[float | None, ...]
    outflow: dict[str, float]
    f_min: float
    rho_max: float
    contour: list[np.ndarray]

    def to_record(self) -> dict:
        """JSON-ready record with the stable diagnostics keys."""
        return {
            "t": self.t,
            "mass": list(self.mass),
            "com": [list(c) if c is not None else None for c in self.com],
            "alignment": list(self.alignment),
            "outflow": {k: self.outflow[k] for k in EDGES},
        }


def compute_diagnostics(f: StateField, theta_nu: np.ndarray, t: float,
                        outflow: np.ndarray,
                        contour_threshold: float = 0.05) -> Diagnostics:
    """Evaluate all frame diagnostics for the current state."""
    grid = f.grid
    area = grid.cell_area
    mom = moments(f)
    xs, ys = grid.centers()
    angles = f.vgrid.angles

    mass = []
    com = []
    alignment = []
    for g in range(f.groups):
        rho_g = mom.rho[g]
        m = float(rho_g.sum()) * area
        mass.append(m)
        if m <= 0.0:
            com.append(None)
            alignment.append(None)
            continue
        com.append((float((rho_g * xs).sum() * area / m),
                    float((rho_g * ys).sum() * area / m)))
        cos_t = np.cos(angles[:, None, None, None] - theta_nu[g][None, None])
        num = float((f.data[g] * cos_t).sum())
        den = float(f.data[g].sum())
        alignment.append(num / den)

    rho_tot = mom.rho_total
    return Diagnostics(
        t=float(t),
        mass=tuple(mass),
        com=tuple(com),
        alignment=tuple(alignment),
        outflow={k: float(v) for k, v in zip(EDGES, outflow)},
        f_min=float(f.data.min()),
        rho_max=float(rho_tot.max()),
        contour=support_contour(rho_tot, contour_threshold, grid),
    )
