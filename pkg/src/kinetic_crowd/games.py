"""Stochastic interaction games: encounter rate and transition tables.

A walker (the candidate) that meets another walker (the field) re-draws its
velocity state.  The direction game rotates the candidate one lattice step
toward its target and/or toward the field walker's heading; the speed game
moves the modulus one step toward the field walker's modulus.  Both draws
factorize, so the joint transition probability is the product of a turn row
and a speed row, each conditioned on the local crowd density.

All densities fed to the tables are clamped to [0, 1]; transient numerical
excursions above 1 must not produce invalid probabilities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grid import TWO_PI, VelocityGrid


@dataclass(frozen=True)
class GameParams:
    """Per-group sensitivities plus the shared interaction-model knobs.

    ``alpha``, ``beta`` and ``u0`` hold one value per group; the products
    alpha*u0 and beta*u0 are the acting turn / speed-adjustment
    probabilities and must not exceed 1/2 so that every table row stays a
    probability vector for any density.
    """

    alpha: tuple[float, ...]
    beta: tuple[float, ...]
    u0: tuple[float, ...] = (1.0, 1.0)
    eta0: float = 1.0
    eps_jam: float = 0.8
    mode: str = "full"              # "full" | "target_only"
    rate_model: str = "constant"    # "constant" | "density_dependent"

    def __post_init__(self) -> None:
        if not (len(self.alpha) == len(self.beta) == len(self.u0)):
            raise ValueError("alpha, beta and u0 must have one entry per group")
        for name, vals in (("alpha", self.alpha), ("beta", self.beta)):
            for g, v in enumerate(vals):
                if not 0.0 <= v <= 1.0:
                    raise ValueError(f"{name}[{g}] must lie in [0, 1]")
                if v * self.u0[g] > 0.5:
                    raise ValueError(f"{name}[{g}] * u0[{g}] must not exceed 1/2")
        if any(u < 0.0 for u in self.u0):
            raise ValueError("u0 must be non-negative")
        if self.eta0 <= 0.0:
            raise ValueError("eta0 must be positive")
        if not 0.0 < self.eps_jam <= 1.0:
            raise ValueError("eps_jam must lie in (0, 1]")
        if self.mode not in ("full", "target_only"):
            raise ValueError(f"unknown game mode {self.mode!r}")
        if self.rate_model not in ("constant", "density_dependent"):
            raise ValueError(f"unknown rate model {self.rate_model!r}")

    @property
    def groups(self) -> int:
        return len(self.alpha)

    def turn_weight(self, group: int) -> float:
        return self.alpha[group] * self.u0[group]

    def speed_weight(self, group: int) -> float:
        return self.beta[group] * self.u0[group]

    @property
    def eta_cap(self) -> float:
        """Upper bound on eta(rho) over all admissible densities."""
        return 2.0 * self.eta0 if self.rate_model == "density_dependent" else self.eta0


@dataclass(frozen=True)
class TurnDistribution:
    """Probabilities of rotating to direction index h-1, h, h+1."""

    p_minus: float
    p_stay: float
    p_plus: float

    def __post_init__(self) -> None:
        probs = (self.p_minus, self.p_stay, self.p_plus)
        if any(p < -1e-12 or p > 1.0 + 1e-12 for p in probs):
            raise ValueError("turn probabilities out of [0, 1]")
        if abs(sum(probs) - 1.0) > 1e-12:
            raise ValueError("turn probabilities do not sum to 1")


@dataclass(frozen=True, eq=False)
class SpeedDistribution:
    """Probability vector over target speed indices 0..m-1."""

    probs: np.ndarray

    def __post_init__(self) -> None:
        probs = np.asarray(self.probs, dtype=float)
        object.__setattr__(self, "probs", probs)
        if np.any(probs < -1e-12) or np.any(probs > 1.0 + 1e-12):
            raise ValueError("speed probabilities out of [0, 1]")
        if abs(probs.sum() - 1.0) > 1e-12:
            raise ValueError("speed probabilities do not sum to 1")


def eta(rho, params: GameParams):
    """Encounter rate as a function of local density.

    The density-dependent model is eta0 * (1 + rho) * exp(-rho) with rho
    clamped to [0, 1]; the constant model is plain eta0.  Accepts scalars or
    arrays and always returns a value in (0, eta_cap].
    """
    rho = np.asarray(rho, dtype=float)
    if np.any(rho < 0.0):
        raise ValueError("density must be non-negative")
    if params.rate_model == "constant":
        out = np.full(rho.shape, params.eta0)
    else:
        r = np.minimum(rho, 1.0)
        out = params.eta0 * (1.0 + r) * np.exp(-r)
    return float(out) if out.ndim == 0 else out


def signed_angle_diff(a, b, wrap: bool):
    """Angular offset a - b used to decide 'above' vs 'below' a heading.

    With wrap the shortest signed difference in (-pi, pi] is used; without
    wrap the raw difference, which matches plain angle order on the
    sub-circle lattices.
    """
    d = np.asarray(a, dtype=float) - np.asarray(b, dtype=float)
    if wrap:
        d = np.mod(d, TWO_PI)
        d = np.where(d > math.pi, d - TWO_PI, d)
    return d


def _turn_probs(sign_target, sign_stream, rho, s: float, mode: str,
                can_plus, can_minus):
    """Elementwise (+1 / stay / -1) rotation probabilities.

    ``sign_target`` / ``sign_stream`` are the signs of the angular offsets
    of the target and of the field walker's heading relative to the
    candidate's heading; a zero sign (tie) leaves that influence on 'stay'.
    A rotation whose destination does not exist on an open lattice end also
    stays (can_plus / can_minus flags).
    """
    rho = np.asarray(rho, dtype=float)
    if mode == "target_only":
        t_w = s * np.ones_like(rho)
        s_w = np.zeros_like(rho)
    else:
        t_w = s * (1.0 - rho)
        s_w = s * rho
    plus = t_w * (np.asarray(sign_target) > 0) + s_w * (np.asarray(sign_stream) > 0)
    minus = t_w * (np.asarray(sign_target) < 0) + s_w * (np.asarray(sign_stream) < 0)
    plus = np.where(can_plus, plus, 0.0)
    minus = np.where(can_minus, minus, 0.0)
    stay = 1.0 - plus - minus
    return plus, stay, minus


def turn_table(vgrid: VelocityGrid, h: int, theta_p: float, theta_nu: float,
               rho: float, group: int, params: GameParams) -> TurnDistribution:
    """Direction-game row for candidate direction index h.

    ``theta_p`` is the field walker's heading, ``theta_nu`` the angle toward
    the candidate's target.
    """
    if not 0 <= h < vgrid.n:
        raise IndexError(f"direction index {h} out of range")
    rho_hat = min(max(float(rho), 0.0), 1.0)
    s = params.turn_weight(group)
    theta_h = float(vgrid.angles[h])
    sig_t = np.sign(signed_angle_diff(theta_nu, theta_h, vgrid.wrap))
    sig_s = np.sign(signed_angle_diff(theta_p, theta_h, vgrid.wrap))
    can_plus = vgrid.wrap or h + 1 < vgrid.n
    can_minus = vgrid.wrap or h - 1 >= 0
    plus, stay, minus = _turn_probs(sig_t, sig_s, rho_hat, s, params.mode,
                                    can_plus, can_minus)
    return TurnDistribution(p_minus=float(minus), p_stay=float(stay),
                            p_plus=float(plus))


def turn_row(vgrid: VelocityGrid, h: int, theta_p: float, theta_nu: float,
             rho: float, group: int, params: GameParams) -> np.ndarray:
    """Turn probabilities as a dense vector over all n output directions."""
    dist = turn_table(vgrid, h, theta_p, theta_nu, rho, group, params)
    row = np.zeros(vgrid.n)
    row[h] += dist.p_stay
    if vgrid.wrap:
        row[(h + 1) % vgrid.n] += dist.p_plus
        row[(h - 1) % vgrid.n] += dist.p_minus
    else:
        if h + 1 < vgrid.n:
            row[h + 1] += dist.p_plus
        if h - 1 >= 0:
            row[h - 1] += dist.p_minus
    return row


def speed_table(k: int, q: int, rho: float, group: int, params: GameParams,
                m: int) -> SpeedDistribution:
    """Speed-game row for candidate speed index k meeting field speed index q.

    Meeting a faster walker moves one step up with probability w = beta*u0*rho,
    a slower one moves one step down with probability w, an equally fast one
    spreads w to each neighbour; steps beyond the lattice ends fold back onto
    k, and w = 0 leaves the speed unchanged with certainty.  At jam densities
    (rho >= eps_jam) the walker decelerates one step deterministically.
    """
    if not (0 <= k < m and 0 <= q < m):
        raise IndexError("speed index out of range")
    rho_hat = min(max(float(rho), 0.0), 1.0)
    w = params.speed_weight(group) * rho_hat
    row = np.zeros(m)
    if rho_hat >= params.eps_jam:
        row[max(k - 1, 0)] = 1.0
        return SpeedDistribution(row)
    if k < q:
        row[k] = 1.0 - w
        row[k + 1] = w
    elif k > q:
        row[k] = 1.0 - w
        row[k - 1] = w
    else:
        row[min(k + 1, m - 1)] += w
        row[max(k - 1, 0)] += w
        row[k] += 1.0 - 2.0 * w
    return SpeedDistribution(row)


def transition_prob(vgrid: VelocityGrid, h: int, k: int, p: int, q: int,
                    i: int, j: int, theta_nu: float, rho: float, group: int,
                    params: GameParams) -> float:
    """Probability that candidate state (h, k) becomes (i, j) against field
    state (p, q).  Factorizes as turn row times speed row; summed over all
    (i, j) it is 1."""
    if not (0 <= p < vgrid.n and 0 <= i < vgrid.n):
        raise IndexError("direction index out of range")
    b = turn_row(vgrid, h, float(vgrid.angles[p]), theta_nu, rho, group, params)
    c = speed_table(k, q, rho, group, params, vgrid.m)
    return float(b[i] * c.probs[j])


def turn_tensor(vgrid: VelocityGrid, theta_nu: np.ndarray, rho: np.ndarray,
                s: float, mode: str) -> np.ndarray:
    """Direction-game tensor B[h, p, i, ...] over a batch of sites.

    ``theta_nu`` and ``rho`` carry the per-site target angle and clamped
    density; ``rho`` may also be heading-resolved with shape (n,) + site.
    """
    n = vgrid.n
    theta_nu = np.asarray(theta_nu, dtype=float)
    site = theta_nu.shape
    rho = np.broadcast_to(np.asarray(rho, dtype=float), (n,) + site)
    ang = vgrid.angles
    sig_s = np.sign(signed_angle_diff(ang[None, :], ang[:, None], vgrid.wrap))
    sig_t = np.sign(signed_angle_diff(theta_nu[None, ...], ang.reshape((n,) + (1,) * len(site)),
                                      vgrid.wrap))
    idx = np.arange(n)
    can_plus = vgrid.wrap | (idx + 1 < n)
    can_minus = vgrid.wrap | (idx - 1 >= 0)
    expand = (slice(None), None) + (None,) * len(site)
    plus, stay, minus = _turn_probs(sig_t[:, None, ...], sig_s[(...,) + (None,) * len(site)],
                                    rho[:, None, ...], s, mode,
                                    can_plus[expand], can_minus[expand])
    out = np.zeros((n, n, n) + site)
    for h in range(n):
        out[h, :, h] += stay[h]
        hp = (h + 1) % n if vgrid.wrap else h + 1
        hm = (h - 1) % n if vgrid.wrap else h - 1
        if 0 <= hp < n:
            out[h, :, hp] += plus[h]
        if 0 <= hm < n:
            out[h, :, hm] += minus[h]
    return out


def speed_tensor(m: int, rho: np.ndarray, w0: float, eps_jam: float) -> np.ndarray:
    """Speed-game tensor C[k, q, j, ...] over a batch of sites.

    ``rho`` is the clamped density per site (optionally heading-resolved
    upstream; any leading axes are treated as part of the site shape) and
    ``w0`` = beta * u0 for the group.
    """
    rho = np.asarray(rho, dtype=float)
    site = rho.shape
    w = w0 * rho
    out = np.zeros((m, m, m) + site)
    for k in range(m):
        for q in range(m):
            if k < q:
                out[k, q, k] += 1.0 - w
                out[k, q, k + 1] += w
            elif k > q:
                out[k, q, k] += 1.0 - w
                out[k, q, k - 1] += w
            else:
                out[k, q, min(k + 1, m - 1)] += w
                out[k, q, max(k - 1, 0)] += w
                out[k, q, k] += 1.0 - 2.0 * w
    jam = rho >= eps_jam
    if np.any(jam):
        jammed = np.zeros((m, m, m))
        for k in range(m):
            jammed[k, :, max(k - 1, 0)] = 1.0
        out = np.where(jam[(None, None, None) + (...,)],
                       jammed[(...,) + (None,) * len(site)], out)
    return out
