"""Spatial grid, discrete velocity lattice, and the distribution-function container.

Everything is dimensionless: the domain is a rectangle (unit square by
default), speeds are fractions of the maximum walking speed, and the
distribution value in each cell is a number density per unit area.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Grid2D:
    """Uniform cell-centered rectangular grid."""

    nx: int
    ny: int
    dx: float
    dy: float
    x0: float = 0.0
    y0: float = 0.0

    def __post_init__(self) -> None:
        if self.nx < 1 or self.ny < 1:
            raise ValueError("grid cell counts must be positive")
        if self.dx <= 0.0 or self.dy <= 0.0:
            raise ValueError("grid cell sizes must be positive")

    @property
    def lx(self) -> float:
        return self.nx * self.dx

    @property
    def ly(self) -> float:
        return self.ny * self.dy

    @property
    def cell_area(self) -> float:
        return self.dx * self.dy

    def x_centers(self) -> np.ndarray:
        return self.x0 + (np.arange(self.nx) + 0.5) * self.dx

    def y_centers(self) -> np.ndarray:
        return self.y0 + (np.arange(self.ny) + 0.5) * self.dy

    def centers(self) -> tuple[np.ndarray, np.ndarray]:
        """Meshgrid of cell-center coordinates, both shaped (nx, ny)."""
        return np.meshgrid(self.x_centers(), self.y_centers(), indexing="ij")


def make_grid(nx: int, ny: int, lx: float = 1.0, ly: float = 1.0,
              x0: float = 0.0, y0: float = 0.0) -> Grid2D:
    """Build a grid covering [x0, x0+lx] x [y0, y0+ly] with nx x ny cells."""
    if nx < 1 or ny < 1:
        raise ValueError("grid cell counts must be positive")
    if lx <= 0.0 or ly <= 0.0:
        raise ValueError("domain extents must be positive")
    return Grid2D(nx=nx, ny=ny, dx=lx / nx, dy=ly / ny, x0=x0, y0=y0)


def cell_center(grid: Grid2D, ix: int, iy: int) -> tuple[float, float]:
    """Coordinates of the center of cell (ix, iy)."""
    if not (0 <= ix < grid.nx and 0 <= iy < grid.ny):
        raise IndexError(f"cell index ({ix}, {iy}) out of range "
                         f"for a {grid.nx}x{grid.ny} grid")
    return (grid.x0 + (ix + 0.5) * grid.dx, grid.y0 + (iy + 0.5) * grid.dy)


@dataclass(frozen=True, eq=False)
class VelocityGrid:
    """Discrete velocity lattice: directions (angles) times speed moduli.

    ``wrap`` controls whether direction index h+1 / h-1 wraps modulo n when
    the interaction games rotate a walker; the angles themselves never wrap.
    """

    n: int
    m: int
    angles: np.ndarray
    speeds: np.ndarray
    wrap: bool = False

    def __post_init__(self) -> None:
        angles = np.asarray(self.angles, dtype=float)
        speeds = np.asarray(self.speeds, dtype=float)
        object.__setattr__(self, "angles", angles)
        object.__setattr__(self, "speeds", speeds)
        if angles.shape != (self.n,):
            raise ValueError("angles must have length n")
        if speeds.shape != (self.m,):
            raise ValueError("speeds must have length m")
        if np.any(angles < 0.0) or np.any(angles >= TWO_PI):
            raise ValueError("angles must lie in [0, 2*pi)")
        if self.n > 1 and np.any(np.diff(angles) <= 0.0):
            raise ValueError("angles must be strictly increasing")
        if np.any(speeds < 0.0) or np.any(speeds > 1.0):
            raise ValueError("speeds must lie in [0, 1]")
        if self.m > 1 and np.any(np.diff(speeds) <= 0.0):
            raise ValueError("speeds must be strictly increasing")

    @property
    def v_max(self) -> float:
        return float(self.speeds[-1])

    def vx(self) -> np.ndarray:
        """x-velocity of each (direction, speed) state, shape (n, m)."""
        c = np.cos(self.angles)
        c[np.abs(c) < 1e-14] = 0.0  # axis-aligned headings advect exactly on-axis
        return c[:, None] * self.speeds[None, :]

    def vy(self) -> np.ndarray:
        """y-velocity of each (direction, speed) state, shape (n, m)."""
        s = np.sin(self.angles)
        s[np.abs(s) < 1e-14] = 0.0
        return s[:, None] * self.speeds[None, :]


def build_velocity_grid(n: int, m: int = 1,
                        span: tuple[float, float] | None = None,
                        wrap: bool | None = None,
                        modulus: float | None = None) -> VelocityGrid:
    """Build an equally spaced velocity lattice.

    Directions are equally spaced over ``span`` (default: full circle,
    [0, 2*pi*(n-1)/n], with wrap enabled).  For m > 1 the speed moduli are
    equally spaced over [0, 1]; for m == 1 the single ``modulus`` is used
    (default 1.0).
    """
    if n < 1 or m < 1:
        raise ValueError("direction and speed counts must be positive")
    if span is None:
        span = (0.0, TWO_PI * (n - 1) / n) if n > 1 else (0.0, 0.0)
        if wrap is None:
            wrap = True
    if wrap is None:
        wrap = False
    lo, hi = float(span[0]), float(span[1])
    if lo < 0.0 or hi > TWO_PI or hi < lo:
        raise ValueError("direction span must satisfy 0 <= start <= stop <= 2*pi")
    if n == 1:
        angles = np.array([lo])
    else:
        step = (hi - lo) / (n - 1)
        angles = lo + step * np.arange(n)
    if m == 1:
        speeds = np.array([1.0 if modulus is None else float(modulus)])
    else:
        if modulus is not None:
            raise ValueError("modulus is only meaningful for m == 1")
        speeds = np.linspace(0.0, 1.0, m)
    return VelocityGrid(n=n, m=m, angles=angles, speeds=speeds, wrap=bool(wrap))


@dataclass(eq=False)
class StateField:
    """Distribution values for every (group, direction, speed, cell).

    ``data`` has shape (groups, n, m, nx, ny) and is replaced wholesale by
    each solver step; nothing mutates a field another worker may be reading.
    """

    grid: Grid2D
    vgrid: VelocityGrid
    groups: int
    data: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        expected = (self.groups, self.vgrid.n, self.vgrid.m,
                    self.grid.nx, self.grid.ny)
        if self.data.shape != expected:
            raise ValueError(f"state array has shape {self.data.shape}, "
                             f"expected {expected}")

    @classmethod
    def zeros(cls, grid: Grid2D, vgrid: VelocityGrid, groups: int = 2) -> StateField:
        shape = (groups, vgrid.n, vgrid.m, grid.nx, grid.ny)
        return cls(grid=grid, vgrid=vgrid, groups=groups, data=np.zeros(shape))

    def copy(self) -> StateField:
        return StateField(grid=self.grid, vgrid=self.vgrid, groups=self.groups,
                          data=self.data.copy())

    def group_density(self, group: int) -> np.ndarray:
        """Number density of one group, shape (nx, ny)."""
        return self.data[group].sum(axis=(0, 1))

    def total_density(self) -> np.ndarray:
        """Number density summed over groups, shape (nx, ny)."""
        return self.data.sum(axis=(0, 1, 2))


def total_mass(f: StateField, group: int | None = None) -> float:
    """Mass of one group (or of everything) integrated over the domain."""
    if group is None:
        return float(f.data.sum()) * f.grid.cell_area
    return float(f.data[group].sum()) * f.grid.cell_area
