"""Macroscopic moments, target geometry, visibility averaging, and the
quadratic gain/loss interaction operator.

The interaction operator at a cell x, for group g and output state (i, j):

    J[g,i,j](x) = sum_{h,k,p,q} eta(rb) * B[h,p,i](rb) * C[k,q,j](rb)
                                * f[g,h,k](x) * fb[g,p,q](x)
                  - f[g,i,j](x) * eta(rb) * sum_{p,q} fb[g,p,q](x)

where fb is the visibility-zone average of the field distribution and rb
the zone-averaged total density (clamped to [0, 1] inside eta and the
tables).  With a pointwise zone, fb = f and the operator is mass-neutral
cell by cell.  Groups couple only through the total density; the quadratic
terms involve one group at a time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .games import GameParams, eta, speed_tensor, turn_tensor
from .grid import TWO_PI, Grid2D, StateField, VelocityGrid


@dataclass
class VisibilityZone:
    """Spatial neighbourhood whose occupants influence a walker.

    ``local`` collapses to the walker's own cell.  ``sector`` averages
    uniformly over cells whose centers lie within ``radius`` and within
    ``half_angle`` of the walker's heading (the walker's own cell is always
    included, so the zone is never empty).  Weights are renormalized over
    the in-domain cells near boundaries.
    """

    mode: str = "local"
    radius: float = 0.0
    half_angle: float = math.pi
    _stencils: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.mode not in ("local", "sector"):
            raise ValueError(f"unknown visibility mode {self.mode!r}")
        if self.mode == "sector":
            if self.radius <= 0.0:
                raise ValueError("sector visibility needs a positive radius")
            if not 0.0 < self.half_angle <= math.pi:
                raise ValueError("half_angle must lie in (0, pi]")

    def stencil(self, grid: Grid2D, heading: float) -> tuple[np.ndarray, np.ndarray]:
        """Integer cell offsets included in the zone for one heading."""
        key = (grid.nx, grid.ny, round(grid.dx, 15), round(grid.dy, 15),
               round(float(heading), 12))
        cached = self._stencils.get(key)
        if cached is not None:
            return cached
        rx = int(math.ceil(self.radius / grid.dx))
        ry = int(math.ceil(self.radius / grid.dy))
        di, dj = np.meshgrid(np.arange(-rx, rx + 1), np.arange(-ry, ry + 1),
                             indexing="ij")
        ox = di * grid.dx
        oy = dj * grid.dy
        dist = np.hypot(ox, oy)
        ang = np.arctan2(oy, ox)
        off = np.mod(ang - heading, TWO_PI)
        off = np.where(off > math.pi, off - TWO_PI, off)
        keep = (dist <= self.radius + 1e-12) & (np.abs(off) <= self.half_angle + 1e-12)
        keep |= (di == 0) & (dj == 0)
        sten = (di[keep].ravel(), dj[keep].ravel())
        self._stencils[key] = sten
        return sten

    def average(self, values: np.ndarray, grid: Grid2D, heading: float) -> np.ndarray:
        """Zone average of cell values over the whole grid.

        ``values`` may have leading state axes; the last two axes are the
        cells.  In local mode the input is returned untouched.
        """
        if self.mode == "local":
            return values
        di, dj = self.stencil(grid, heading)
        nx, ny = grid.nx, grid.ny
        num = np.zeros_like(values, dtype=float)
        den = np.zeros((nx, ny))
        for oi, oj in zip(di, dj):
            # target window (cells whose zone contains the offset cell)
            tx0, tx1 = max(0, -oi), min(nx, nx - oi)
            ty0, ty1 = max(0, -oj), min(ny, ny - oj)
            if tx0 >= tx1 or ty0 >= ty1:
                continue
            sx0, sx1 = tx0 + oi, tx1 + oi
            sy0, sy1 = ty0 + oj, ty1 + oj
            num[..., tx0:tx1, ty0:ty1] += values[..., sx0:sx1, sy0:sy1]
            den[tx0:tx1, ty0:ty1] += 1.0
        return num / den


@dataclass(eq=False)
class MomentField:
    """Number density and flow per group, each shaped (groups, nx, ny)."""

    rho: np.ndarray
    qx: np.ndarray
    qy: np.ndarray

    @property
    def rho_total(self) -> np.ndarray:
        return self.rho.sum(axis=0)

    @property
    def qx_total(self) -> np.ndarray:
        return self.qx.sum(axis=0)

    @property
    def qy_total(self) -> np.ndarray:
        return self.qy.sum(axis=0)


def moments(f: StateField) -> MomentField:
    """Weighted sums of the distribution over the velocity lattice."""
    rho = f.data.sum(axis=(1, 2))
    vx = f.vgrid.vx()
    vy = f.vgrid.vy()
    qx = np.einsum("gnmxy,nm->gxy", f.data, vx)
    qy = np.einsum("gnmxy,nm->gxy", f.data, vy)
    return MomentField(rho=rho, qx=qx, qy=qy)


def target_angle(x: tuple[float, float], target, fallback: float | None = None) -> float:
    """Angle from point x toward a target, normalized to [0, 2*pi).

    ``target`` is either a fixed exit direction (a float angle, returned as
    is) or a point (x, y).  For a point target coinciding with x the
    ``fallback`` angle is returned when given, otherwise this is an error.
    """
    if np.isscalar(target):
        return float(np.mod(float(target), TWO_PI))
    tx, ty = float(target[0]), float(target[1])
    dx, dy = tx - float(x[0]), ty - float(x[1])
    if dx == 0.0 and dy == 0.0:
        if fallback is None:
            raise ValueError("point target coincides with the evaluation point")
        return float(np.mod(fallback, TWO_PI))
    return float(np.mod(math.atan2(dy, dx), TWO_PI))


def target_angle_field(grid: Grid2D, target) -> np.ndarray:
    """Per-cell angle toward the target, shape (nx, ny).

    A cell whose center lies exactly on a point target takes the angle seen
    from its left neighbour (or right neighbour in the first column), which
    removes the atan2 singularity.
    """
    xs, ys = grid.centers()
    if np.isscalar(target):
        return np.full((grid.nx, grid.ny), float(np.mod(float(target), TWO_PI)))
    tx, ty = float(target[0]), float(target[1])
    dx = tx - xs
    dy = ty - ys
    ang = np.mod(np.arctan2(dy, dx), TWO_PI)
    hit = (dx == 0.0) & (dy == 0.0)
    if np.any(hit):
        for ix, iy in zip(*np.nonzero(hit)):
            step = -grid.dx if ix > 0 else grid.dx
            ang[ix, iy] = np.mod(math.atan2(ty - ys[ix, iy],
                                            tx - (xs[ix, iy] + step)), TWO_PI)
    return ang


def visibility_average(values: np.ndarray, cell: tuple[int, int],
                       zone: VisibilityZone, grid: Grid2D,
                       heading: float) -> float:
    """Zone average of a cell-valued field seen from one cell."""
    ix, iy = cell
    if not (0 <= ix < grid.nx and 0 <= iy < grid.ny):
        raise IndexError("cell index out of range")
    if zone.mode == "local":
        return float(values[ix, iy])
    avg = zone.average(np.asarray(values, dtype=float), grid, heading)
    return float(avg[ix, iy])


def collision(f: StateField, params: GameParams, zone: VisibilityZone,
              theta_nu: np.ndarray, rho_total: np.ndarray | None = None) -> np.ndarray:
    """Rate of change of the distribution due to interactions.

    ``theta_nu`` holds the per-cell target angle for each group, shape
    (groups, nx, ny).  ``rho_total`` optionally overrides the total density
    fed to the rate and the tables (the quadratic terms always use f
    itself), which isolates the direct dependence on one group's state.
    """
    n, m = f.vgrid.n, f.vgrid.m
    data = f.data
    rho_override = rho_total
    if rho_total is None:
        rho_total = f.total_density()
    out = np.empty_like(data)
    if zone.mode == "local":
        rho_hat = np.clip(rho_total, 0.0, 1.0)
        et = eta(rho_total, params)
        for g in range(f.groups):
            fg = data[g]
            b = turn_tensor(f.vgrid, theta_nu[g], rho_hat,
                            params.turn_weight(g), params.mode)
            c = speed_tensor(m, rho_hat, params.speed_weight(g), params.eps_jam)
            u = np.einsum("hpi...,pq...->hiq...", b, fg)
            w = np.einsum("kqj...,hiq...->hkij...", c, u)
            gain = et * np.einsum("hk...,hkij...->ij...", fg, w)
            loss = fg * (et * fg.sum(axis=(0, 1)))
            out[g] = gain - loss
        return out
    # Sector zones: the averages depend on the looking walker's heading, so
    # the gain is assembled per candidate direction and the loss per test
    # direction.
    angles = f.vgrid.angles
    fbar = np.empty((n,) + data.shape)        # [heading, group, p, q, x, y]
    for h in range(n):
        fbar[h] = zone.average(data, f.grid, float(angles[h]))
    if rho_override is None:
        rb = fbar.sum(axis=(1, 2, 3))          # zone-avg total density per heading
    else:
        rb = np.stack([zone.average(rho_override, f.grid, float(a)) for a in angles])
    rb_hat = np.clip(rb, 0.0, 1.0)
    et = np.stack([eta(rb[h], params) for h in range(n)])
    for g in range(f.groups):
        fg = data[g]
        rb_sig = fbar[:, g].sum(axis=(1, 2))   # zone-avg group density per heading
        gain = np.zeros_like(fg)
        for h in range(n):
            b_h = turn_tensor(f.vgrid, theta_nu[g], rb_hat[h],
                              params.turn_weight(g), params.mode)[h]
            c_h = speed_tensor(m, rb_hat[h], params.speed_weight(g),
                               params.eps_jam)
            u = np.einsum("pi...,pq...->iq...", b_h, fbar[h, g])
            w = np.einsum("kqj...,iq...->kij...", c_h, u)
            gain += et[h] * np.einsum("k...,kij...->ij...", fg[h], w)
        loss = fg * (et * rb_sig)[:, None]
        out[g] = gain - loss
    return out
