"""Scenario definition, JSON parsing/rendering, validation, and the two
built-in case studies.

A scenario document is a JSON object with top-level keys ``grid``,
``velocity``, ``groups`` (a list, each entry carrying ``alpha``, ``beta``,
``u0``, ``target`` and ``initial`` patches), ``visibility``, ``game``,
``stepping`` and ``output``.  Validation failures carry the dotted path of
the offending field.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .games import GameParams
from .grid import (Grid2D, StateField, VelocityGrid, build_velocity_grid,
                   make_grid)
from .kinetics import VisibilityZone, target_angle_field
from .solver import INTEGRATORS, LIMITERS, SPLITTINGS, StepConfig


class ScenarioError(ValueError):
    """Invalid scenario document; ``path`` names the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class GridSpec:
    nx: int = 100
    ny: int = 100
    lx: float = 1.0
    ly: float = 1.0
    x0: float = 0.0
    y0: float = 0.0


@dataclass(frozen=True)
class VelocitySpec:
    n: int
    m: int = 1
    span: tuple[float, float] = (0.0, 0.0)
    wrap: bool = False
    modulus: float | None = None


@dataclass(frozen=True)
class Target:
    """Either a fixed exit direction (angle) or a point in the domain."""

    kind: str                     # "direction" | "point"
    angle: float | None = None
    point: tuple[float, float] | None = None

    def value(self):
        return self.angle if self.kind == "direction" else self.point


@dataclass(frozen=True)
class Region:
    """Initial-density footprint: a truncated-Gaussian blob or a rectangle."""

    kind: str                     # "blob" | "rect"
    cx: float = 0.0
    cy: float = 0.0
    radius: float = 0.0
    xmin: float = 0.0
    ymin: float = 0.0
    xmax: float = 0.0
    ymax: float = 0.0

    def profile(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Dimensionless footprint in [0, 1] evaluated at cell centers."""
        if self.kind == "blob":
            # Gaussian capped at 3 sigma: support radius = 3 * sigma
            r2 = (xs - self.cx) ** 2 + (ys - self.cy) ** 2
            sigma = self.radius / 3.0
            prof = np.exp(-0.5 * r2 / sigma**2)
            prof[r2 > self.radius**2] = 0.0
            return prof
        inside = ((xs >= self.xmin) & (xs <= self.xmax)
                  & (ys >= self.ymin) & (ys <= self.ymax))
        return inside.astype(float)


@dataclass(frozen=True)
class InitialPatch:
    region: Region
    direction: int
    speed: int
    density: float


@dataclass(frozen=True)
class GroupSpec:
    alpha: float
    beta: float
    u0: float
    target: Target
    initial: tuple[InitialPatch, ...] = ()


@dataclass(frozen=True)
class VisibilitySpec:
    mode: str = "local"
    radius: float = 0.0
    half_angle: float = math.pi


@dataclass(frozen=True)
class GameSpec:
    eta0: float = 1.0
    eps_jam: float = 0.8
    mode: str = "full"
    rate_model: str = "constant"


@dataclass(frozen=True)
class SteppingSpec:
    t_end: float
    cfl: float = 0.9
    dt: float | None = None
    limiter: str = "none"
    splitting: str = "lie"
    reaction_integrator: str = "euler"


@dataclass(frozen=True)
class OutputSpec:
    stride: int = 10
    rho_display_max: float = 1.0
    contour_threshold: float = 0.05
    full_state: bool = False


@dataclass(frozen=True)
class Scenario:
    grid: GridSpec
    velocity: VelocitySpec
    groups: tuple[GroupSpec, ...]
    visibility: VisibilitySpec = field(default_factory=VisibilitySpec)
    game: GameSpec = field(default_factory=GameSpec)
    stepping: SteppingSpec = field(default_factory=lambda: SteppingSpec(t_end=1.0))
    output: OutputSpec = field(default_factory=OutputSpec)

    # -- builders -----------------------------------------------------------
    def build_grid(self) -> Grid2D:
        g = self.grid
        return make_grid(g.nx, g.ny, g.lx, g.ly, g.x0, g.y0)

    def build_velocity(self) -> VelocityGrid:
        v = self.velocity
        return build_velocity_grid(v.n, v.m, span=v.span, wrap=v.wrap,
                                   modulus=v.modulus)

    def game_params(self) -> GameParams:
        return GameParams(
            alpha=tuple(g.alpha for g in self.groups),
            beta=tuple(g.beta for g in self.groups),
            u0=tuple(g.u0 for g in self.groups),
            eta0=self.game.eta0,
            eps_jam=self.game.eps_jam,
            mode=self.game.mode,
            rate_model=self.game.rate_model,
        )

    def visibility_zone(self) -> VisibilityZone:
        v = self.visibility
        return VisibilityZone(mode=v.mode, radius=v.radius,
                              half_angle=v.half_angle)

    def target_angles(self, grid: Grid2D) -> np.ndarray:
        return np.stack([target_angle_field(grid, g.target.value())
                         for g in self.groups])

    def initial_state(self, grid: Grid2D, vgrid: VelocityGrid) -> StateField:
        f = StateField.zeros(grid, vgrid, groups=len(self.groups))
        xs, ys = grid.centers()
        for g, spec in enumerate(self.groups):
            for patch in spec.initial:
                f.data[g, patch.direction, patch.speed] += (
                    patch.density * patch.region.profile(xs, ys))
        return f

    def resolved_dt(self, grid: Grid2D, vgrid: VelocityGrid) -> float:
        st = self.stepping
        if st.dt is not None:
            return st.dt
        if vgrid.v_max <= 0.0:
            raise ScenarioError("stepping.dt",
                                "dt must be given when all speeds are zero")
        return st.cfl * min(grid.dx, grid.dy) / vgrid.v_max

    def step_config(self, grid: Grid2D, vgrid: VelocityGrid) -> StepConfig:
        st = self.stepping
        return StepConfig(dt=self.resolved_dt(grid, vgrid), cfl=st.cfl,
                          limiter=st.limiter, splitting=st.splitting,
                          reaction_integrator=st.reaction_integrator)


# -- document parsing --------------------------------------------------------

def _need(doc: dict, key: str, path: str):
    if key not in doc:
        raise ScenarioError(f"{path}.{key}" if path else key, "missing field")
    return doc[key]


def _opt(doc: dict, key: str, default):
    return doc.get(key, default)


def _parse_target(doc, path: str) -> Target:
    if isinstance(doc, (int, float)):
        return Target(kind="direction", angle=float(doc))
    kind = _need(doc, "kind", path)
    if kind == "direction":
        return Target(kind="direction", angle=float(_need(doc, "angle", path)))
    if kind == "point":
        return Target(kind="point",
                      point=(float(_need(doc, "x", path)),
                             float(_need(doc, "y", path))))
    raise ScenarioError(f"{path}.kind", f"unknown target kind {kind!r}")


def _parse_region(doc: dict, path: str) -> Region:
    kind = _need(doc, "kind", path)
    if kind == "blob":
        return Region(kind="blob", cx=float(_need(doc, "cx", path)),
                      cy=float(_need(doc, "cy", path)),
                      radius=float(_need(doc, "radius", path)))
    if kind == "rect":
        return Region(kind="rect",
                      xmin=float(_need(doc, "xmin", path)),
                      ymin=float(_need(doc, "ymin", path)),
                      xmax=float(_need(doc, "xmax", path)),
                      ymax=float(_need(doc, "ymax", path)))
    raise ScenarioError(f"{path}.kind", f"unknown region kind {kind!r}")


def parse_scenario(text) -> Scenario:
    """Parse and validate a scenario document (JSON text or a dict)."""
    if isinstance(text, str):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ScenarioError("", f"not valid JSON: {exc}") from exc
    else:
        doc = text
    if not isinstance(doc, dict):
        raise ScenarioError("", "scenario document must be a JSON object")

    g = _opt(doc, "grid", {})
    grid = GridSpec(nx=int(_opt(g, "nx", 100)), ny=int(_opt(g, "ny", 100)),
                    lx=float(_opt(g, "lx", 1.0)), ly=float(_opt(g, "ly", 1.0)),
                    x0=float(_opt(g, "x0", 0.0)), y0=float(_opt(g, "y0", 0.0)))

    v = _need(doc, "velocity", "")
    n = int(_need(v, "n", "velocity"))
    m = int(_opt(v, "m", 1))
    span = _opt(v, "span", None)
    wrap = _opt(v, "wrap", None)
    if span is None:
        span = (0.0, 2.0 * math.pi * (n - 1) / n) if n > 1 else (0.0, 0.0)
        if wrap is None:
            wrap = True
    if wrap is None:
        wrap = False
    modulus = _opt(v, "speed", None)
    if m == 1 and modulus is None:
        modulus = 1.0
    velocity = VelocitySpec(n=n, m=m, span=(float(span[0]), float(span[1])),
                            wrap=bool(wrap),
                            modulus=None if modulus is None else float(modulus))

    raw_groups = _need(doc, "groups", "")
    if not isinstance(raw_groups, list) or not raw_groups:
        raise ScenarioError("groups", "at least one group is required")
    groups = []
    for gi, gdoc in enumerate(raw_groups):
        gpath = f"groups[{gi}]"
        patches = []
        for pi, pdoc in enumerate(_opt(gdoc, "initial", [])):
            ppath = f"{gpath}.initial[{pi}]"
            patches.append(InitialPatch(
                region=_parse_region(_need(pdoc, "region", ppath), f"{ppath}.region"),
                direction=int(_need(pdoc, "direction", ppath)),
                speed=int(_opt(pdoc, "speed", 0)),
                density=float(_need(pdoc, "density", ppath))))
        groups.append(GroupSpec(
            alpha=float(_need(gdoc, "alpha", gpath)),
            beta=float(_opt(gdoc, "beta", 0.0)),
            u0=float(_opt(gdoc, "u0", 1.0)),
            target=_parse_target(_need(gdoc, "target", gpath), f"{gpath}.target"),
            initial=tuple(patches)))

    vis = _opt(doc, "visibility", {})
    visibility = VisibilitySpec(mode=str(_opt(vis, "mode", "local")),
                                radius=float(_opt(vis, "radius", 0.0)),
                                half_angle=float(_opt(vis, "half_angle", math.pi)))

    gm = _opt(doc, "game", {})
    game = GameSpec(eta0=float(_opt(gm, "eta0", 1.0)),
                    eps_jam=float(_opt(gm, "eps_jam", 0.8)),
                    mode=str(_opt(gm, "mode", "full")),
                    rate_model=str(_opt(gm, "rate_model", "constant")))

    st = _need(doc, "stepping", "")
    dt = _opt(st, "dt", None)
    stepping = SteppingSpec(t_end=float(_need(st, "t_end", "stepping")),
                            cfl=float(_opt(st, "cfl", 0.9)),
                            dt=None if dt is None else float(dt),
                            limiter=str(_opt(st, "limiter", "none")),
                            splitting=str(_opt(st, "splitting", "lie")),
                            reaction_integrator=str(_opt(st, "reaction_integrator",
                                                         "euler")))

    out = _opt(doc, "output", {})
    output = OutputSpec(stride=int(_opt(out, "stride", 10)),
                        rho_display_max=float(_opt(out, "rho_display_max", 1.0)),
                        contour_threshold=float(_opt(out, "contour_threshold", 0.05)),
                        full_state=bool(_opt(out, "full_state", False)))

    scenario = Scenario(grid=grid, velocity=velocity, groups=tuple(groups),
                        visibility=visibility, game=game, stepping=stepping,
                        output=output)
    validate_scenario(scenario)
    return scenario


def validate_scenario(sc: Scenario) -> None:
    """Enforce every scenario invariant; raises ScenarioError with a path."""
    g = sc.grid
    if g.nx < 1 or g.ny < 1:
        raise ScenarioError("grid.nx", "cell counts must be positive")
    if g.lx <= 0.0 or g.ly <= 0.0:
        raise ScenarioError("grid.lx", "domain extents must be positive")

    v = sc.velocity
    if v.n < 1 or v.m < 1:
        raise ScenarioError("velocity.n", "lattice counts must be positive")
    if not (0.0 <= v.span[0] <= v.span[1] <= 2.0 * math.pi):
        raise ScenarioError("velocity.span",
                            "span must satisfy 0 <= start <= stop <= 2*pi")
    if v.m > 1 and v.modulus is not None:
        raise ScenarioError("velocity.speed",
                            "a single speed modulus needs m == 1")
    try:
        vgrid = sc.build_velocity()
    except ValueError as exc:
        raise ScenarioError("velocity", str(exc)) from exc

    for gi, grp in enumerate(sc.groups):
        path = f"groups[{gi}]"
        if not 0.0 <= grp.alpha <= 1.0:
            raise ScenarioError(f"{path}.alpha", "must lie in [0, 1]")
        if not 0.0 <= grp.beta <= 1.0:
            raise ScenarioError(f"{path}.beta", "must lie in [0, 1]")
        if grp.u0 < 0.0:
            raise ScenarioError(f"{path}.u0", "must be non-negative")
        if grp.alpha * grp.u0 > 0.5:
            raise ScenarioError(f"{path}.alpha",
                                f"alpha*u0 = {grp.alpha * grp.u0:.6g} exceeds 1/2")
        if grp.beta * grp.u0 > 0.5:
            raise ScenarioError(f"{path}.beta",
                                f"beta*u0 = {grp.beta * grp.u0:.6g} exceeds 1/2")
        for pi, patch in enumerate(grp.initial):
            ppath = f"{path}.initial[{pi}]"
            if not 0 <= patch.direction < v.n:
                raise ScenarioError(f"{ppath}.direction", "index out of range")
            if not 0 <= patch.speed < v.m:
                raise ScenarioError(f"{ppath}.speed", "index out of range")
            if patch.density < 0.0:
                raise ScenarioError(f"{ppath}.density", "must be non-negative")
            if patch.region.kind == "blob" and patch.region.radius <= 0.0:
                raise ScenarioError(f"{ppath}.region.radius", "must be positive")

    vis = sc.visibility
    try:
        sc.visibility_zone()
    except ValueError as exc:
        raise ScenarioError("visibility", str(exc)) from exc
    if vis.mode == "sector" and vis.radius > min(sc.grid.lx, sc.grid.ly):
        raise ScenarioError("visibility.radius", "zone larger than the domain")

    try:
        params = sc.game_params()
    except ValueError as exc:
        raise ScenarioError("game", str(exc)) from exc

    st = sc.stepping
    if st.t_end < 0.0:
        raise ScenarioError("stepping.t_end", "must be non-negative")
    if not 0.0 < st.cfl <= 1.0:
        raise ScenarioError("stepping.cfl", "must lie in (0, 1]")
    if st.limiter not in LIMITERS:
        raise ScenarioError("stepping.limiter", f"unknown limiter {st.limiter!r}")
    if st.splitting not in SPLITTINGS:
        raise ScenarioError("stepping.splitting",
                            f"unknown splitting {st.splitting!r}")
    if st.reaction_integrator not in INTEGRATORS:
        raise ScenarioError("stepping.reaction_integrator",
                            f"unknown integrator {st.reaction_integrator!r}")
    grid = sc.build_grid()
    if st.t_end > 0.0:
        dt = sc.resolved_dt(grid, vgrid)
        if dt <= 0.0:
            raise ScenarioError("stepping.dt", "must be positive")
        if vgrid.v_max > 0.0:
            dt_max = st.cfl * min(grid.dx, grid.dy) / vgrid.v_max
            if dt > dt_max * (1.0 + 1e-12):
                raise ScenarioError(
                    "stepping.dt",
                    f"dt = {dt:.6g} exceeds cfl*min(dx,dy)/v_max = {dt_max:.6g}")
        if dt * params.eta_cap > 1.0 + 1e-9:
            raise ScenarioError(
                "stepping.dt",
                f"dt*eta_cap = {dt * params.eta_cap:.6g} exceeds the "
                f"reaction positivity bound 1")

    out = sc.output
    if out.stride < 1:
        raise ScenarioError("output.stride", "must be at least 1")
    if out.rho_display_max <= 0.0:
        raise ScenarioError("output.rho_display_max", "must be positive")
    if out.contour_threshold <= 0.0:
        raise ScenarioError("output.contour_threshold", "must be positive")

    f0 = sc.initial_state(grid, vgrid)
    if float(f0.data.min()) < 0.0:
        raise ScenarioError("groups", "initial densities must be non-negative")
    rho0_max = float(f0.total_density().max())
    if rho0_max > 1.0 + 1e-12:
        raise ScenarioError("groups",
                            f"initial total density reaches {rho0_max:.6g} > 1")


# -- rendering ---------------------------------------------------------------

def scenario_to_dict(sc: Scenario) -> dict:
    """Normalized document (all defaults resolved) for a scenario."""
    def target_doc(t: Target):
        if t.kind == "direction":
            return {"kind": "direction", "angle": t.angle}
        return {"kind": "point", "x": t.point[0], "y": t.point[1]}

    def region_doc(r: Region):
        if r.kind == "blob":
            return {"kind": "blob", "cx": r.cx, "cy": r.cy, "radius": r.radius}
        return {"kind": "rect", "xmin": r.xmin, "ymin": r.ymin,
                "xmax": r.xmax, "ymax": r.ymax}

    doc = {
        "grid": {"nx": sc.grid.nx, "ny": sc.grid.ny, "lx": sc.grid.lx,
                 "ly": sc.grid.ly, "x0": sc.grid.x0, "y0": sc.grid.y0},
        "velocity": {"n": sc.velocity.n, "m": sc.velocity.m,
                     "span": list(sc.velocity.span), "wrap": sc.velocity.wrap},
        "groups": [
            {"alpha": g.alpha, "beta": g.beta, "u0": g.u0,
             "target": target_doc(g.target),
             "initial": [
                 {"region": region_doc(p.region), "direction": p.direction,
                  "speed": p.speed, "density": p.density}
                 for p in g.initial]}
            for g in sc.groups],
        "visibility": {"mode": sc.visibility.mode,
                       "radius": sc.visibility.radius,
                       "half_angle": sc.visibility.half_angle},
        "game": {"eta0": sc.game.eta0, "eps_jam": sc.game.eps_jam,
                 "mode": sc.game.mode, "rate_model": sc.game.rate_model},
        "stepping": {"t_end": sc.stepping.t_end, "cfl": sc.stepping.cfl,
                     "limiter": sc.stepping.limiter,
                     "splitting": sc.stepping.splitting,
                     "reaction_integrator": sc.stepping.reaction_integrator},
        "output": {"stride": sc.output.stride,
                   "rho_display_max": sc.output.rho_display_max,
                   "contour_threshold": sc.output.contour_threshold,
                   "full_state": sc.output.full_state},
    }
    if sc.velocity.modulus is not None:
        doc["velocity"]["speed"] = sc.velocity.modulus
    if sc.stepping.dt is not None:
        doc["stepping"]["dt"] = sc.stepping.dt
    return doc


def render_scenario(sc: Scenario) -> str:
    return json.dumps(scenario_to_dict(sc), indent=2) + "\n"


# -- overrides ---------------------------------------------------------------

def apply_overrides(doc: dict, overrides: list[str]) -> dict:
    """Apply dotted-path key=value pairs (e.g. stepping.t_end=0,
    groups[0].alpha=0.2) to a raw document before validation.

    Intermediate containers must exist; the leaf key may be new.  Values
    parse as JSON, falling back to a bare string.
    """
    for text in overrides:
        if "=" not in text:
            raise ScenarioError(text, "override must look like key.path=value")
        key, raw_val = text.split("=", 1)
        try:
            value = json.loads(raw_val)
        except json.JSONDecodeError:
            value = raw_val
        tokens = _tokenize_path(key)
        node = doc
        for tok in tokens[:-1]:
            node = _descend(node, tok, key)
        leaf = tokens[-1]
        if isinstance(leaf, int):
            if not isinstance(node, list) or not -len(node) <= leaf < len(node):
                raise ScenarioError(key, f"bad index [{leaf}]")
            node[leaf] = value
        else:
            if not isinstance(node, dict):
                raise ScenarioError(key, f"cannot set field {leaf!r} here")
            node[leaf] = value
    return doc


def _tokenize_path(key: str) -> list:
    tokens: list = []
    for part in key.split("."):
        name = part
        indices: list[int] = []
        while name.endswith("]"):
            lb = name.rfind("[")
            if lb < 0:
                raise ScenarioError(key, f"malformed index in {part!r}")
            try:
                indices.insert(0, int(name[lb + 1:-1]))
            except ValueError as exc:
                raise ScenarioError(key, f"malformed index in {part!r}") from exc
            name = name[:lb]
        if not name and not indices:
            raise ScenarioError(key, "empty path segment")
        if name:
            tokens.append(name)
        tokens.extend(indices)
    return tokens


def _descend(node, tok, key: str):
    if isinstance(tok, int):
        if not isinstance(node, list) or not -len(node) <= tok < len(node):
            raise ScenarioError(key, f"bad index [{tok}]")
        return node[tok]
    if not isinstance(node, dict) or tok not in node:
        raise ScenarioError(key, f"unknown field {tok!r}")
    return node[tok]


# -- built-in case studies ---------------------------------------------------

def _corner_exit_document() -> dict:
    """A crowd near the lower-left corner of the unit room, split evenly
    over five headings between 0 and pi/2, re-aligning toward the exit on
    the right wall."""
    blob = {"kind": "blob", "cx": 0.15, "cy": 0.15, "radius": 0.15}
    return {
        "grid": {"nx": 100, "ny": 100, "lx": 1.0, "ly": 1.0, "x0": 0.0, "y0": 0.0},
        "velocity": {"n": 5, "m": 1, "span": [0.0, math.pi / 2.0],
                     "wrap": False, "speed": 0.03},
        "groups": [
            {"alpha": 0.06, "beta": 0.0, "u0": 1.0,
             "target": {"kind": "direction", "angle": 0.0},
             "initial": [
                 {"region": blob, "direction": d, "speed": 0, "density": 0.1}
                 for d in range(5)]},
            {"alpha": 0.06, "beta": 0.0, "u0": 1.0,
             "target": {"kind": "direction", "angle": 0.0},
             "initial": []},
        ],
        "visibility": {"mode": "local"},
        "game": {"eta0": 3.0, "eps_jam": 0.8, "mode": "target_only",
                 "rate_model": "constant"},
        "stepping": {"t_end": 20.0, "cfl": 0.9, "limiter": "none",
                     "splitting": "lie", "reaction_integrator": "euler"},
        "output": {"stride": 10, "rho_display_max": 0.5,
                   "contour_threshold": 0.05, "full_state": False},
    }


def _counterflow_document() -> dict:
    """Two crowds walking toward each other along x, both re-aligning
    toward an exit at the top of the room; the left group reacts faster."""
    return {
        "grid": {"nx": 100, "ny": 100, "lx": 1.0, "ly": 1.0, "x0": 0.0, "y0": 0.0},
        "velocity": {"n": 5, "m": 1, "span": [0.0, math.pi],
                     "wrap": False, "speed": 0.03},
        "groups": [
            {"alpha": 0.2, "beta": 0.0, "u0": 1.0,
             "target": {"kind": "direction", "angle": math.pi / 2.0},
             "initial": [
                 {"region": {"kind": "blob", "cx": 0.2, "cy": 0.5,
                             "radius": 0.15},
                  "direction": 0, "speed": 0, "density": 0.5}]},
            {"alpha": 0.1, "beta": 0.0, "u0": 1.0,
             "target": {"kind": "direction", "angle": math.pi / 2.0},
             "initial": [
                 {"region": {"kind": "blob", "cx": 0.8, "cy": 0.5,
                             "radius": 0.15},
                  "direction": 4, "speed": 0, "density": 0.5}]},
        ],
        "visibility": {"mode": "local"},
        "game": {"eta0": 3.0, "eps_jam": 0.8, "mode": "target_only",
                 "rate_model": "constant"},
        "stepping": {"t_end": 16.0, "cfl": 0.9, "limiter": "none",
                     "splitting": "lie", "reaction_integrator": "euler"},
        "output": {"stride": 10, "rho_display_max": 0.5,
                   "contour_threshold": 0.05, "full_state": False},
    }


BUILTIN_DOCUMENTS = {
    "case1": _corner_exit_document,
    "case2": _counterflow_document,
}


def builtin_document(name: str) -> dict:
    if name not in BUILTIN_DOCUMENTS:
        raise KeyError(f"unknown built-in scenario {name!r}")
    return BUILTIN_DOCUMENTS[name]()


def case_study_1() -> Scenario:
    """Corner crowd re-aligning toward the right-wall exit."""
    return parse_scenario(builtin_document("case1"))


def case_study_2() -> Scenario:
    """Two opposing crowds re-aligning toward the top exit."""
    return parse_scenario(builtin_document("case2"))
