"""Independent scalar reference implementations used as test oracles.

Everything here is deliberately written as literal case-by-case arithmetic
over plain Python floats and dicts, with no shared code with the package's
vectorized implementations, so the two routes check each other.
"""

import math

TWO_PI = 2.0 * math.pi


def ref_eta(rho, eta0, model):
    r = min(rho, 1.0)
    if model == "constant":
        return eta0
    return eta0 * (1.0 + r) * math.exp(-r)


def ref_angle_diff(a, b, wrap):
    d = a - b
    if wrap:
        d = d % TWO_PI
        if d > math.pi:
            d -= TWO_PI
    return d


def ref_turn_row(angles, wrap, h, theta_p, theta_nu, rho, s, mode):
    """Direction-game row as a dict {direction index: probability}.

    Literal enumeration of the four sign cases, with ties keeping their
    share on the current direction and rotations off an open lattice end
    folding back onto it.
    """
    n = len(angles)
    rho = min(max(rho, 0.0), 1.0)
    d_nu = ref_angle_diff(theta_nu, angles[h], wrap)
    d_p = ref_angle_diff(theta_p, angles[h], wrap)
    if mode == "target_only":
        if d_nu > 0:
            plus, minus = s, 0.0
        elif d_nu < 0:
            plus, minus = 0.0, s
        else:
            plus, minus = 0.0, 0.0
    else:
        t, r = s * (1.0 - rho), s * rho
        if d_p > 0 and d_nu > 0:
            plus, minus = t + r, 0.0
        elif d_p > 0 and d_nu < 0:
            plus, minus = r, t
        elif d_p < 0 and d_nu > 0:
            plus, minus = t, r
        elif d_p < 0 and d_nu < 0:
            plus, minus = 0.0, t + r
        elif d_p == 0 and d_nu > 0:
            plus, minus = t, 0.0
        elif d_p == 0 and d_nu < 0:
            plus, minus = 0.0, t
        elif d_nu == 0 and d_p > 0:
            plus, minus = r, 0.0
        elif d_nu == 0 and d_p < 0:
            plus, minus = 0.0, r
        else:
            plus, minus = 0.0, 0.0
    dest_plus = (h + 1) % n if wrap else h + 1
    dest_minus = (h - 1) % n if wrap else h - 1
    row = {h: 1.0}
    if 0 <= dest_plus < n:
        row[h] -= plus
        row[dest_plus] = row.get(dest_plus, 0.0) + plus
    if 0 <= dest_minus < n:
        row[h] -= minus
        row[dest_minus] = row.get(dest_minus, 0.0) + minus
    return row


def ref_speed_row(m, k, q, rho, beta_u0, eps_jam):
    """Speed-game row as a dict {speed index: probability}."""
    rho = min(max(rho, 0.0), 1.0)
    if rho >= eps_jam:
        return {max(k - 1, 0): 1.0}
    w = beta_u0 * rho
    if k < q:
        return {k: 1.0 - w, k + 1: w}
    if k > q:
        return {k: 1.0 - w, k - 1: w}
    row = {}
    row[min(k + 1, m - 1)] = row.get(min(k + 1, m - 1), 0.0) + w
    row[max(k - 1, 0)] = row.get(max(k - 1, 0), 0.0) + w
    row[k] = row.get(k, 0.0) + 1.0 - 2.0 * w
    return row


def ref_transition(angles, wrap, m, h, k, p, q, i, j, theta_nu, rho, s,
                   beta_u0, eps_jam, mode):
    b = ref_turn_row(angles, wrap, h, angles[p], theta_nu, rho, s, mode)
    c = ref_speed_row(m, k, q, rho, beta_u0, eps_jam)
    return b.get(i, 0.0) * c.get(j, 0.0)


def ref_shoelace_area(polyline):
    """Signed polygon area of a closed polyline [(x, y), ...]."""
    area = 0.0
    pts = list(polyline)
    if pts[0] != pts[-1]:
        pts.append(pts[0])
    for (x0, y0), (x1, y1) in zip(pts[:-1], pts[1:]):
        area += x0 * y1 - x1 * y0
    return 0.5 * area
