"""Level-set extraction: marching squares over cell-centered density values.

The crowd's occupied region is tracked through the polyline(s) where the
density crosses a threshold.  Squares are spanned between adjacent cell
centers; crossings are placed by linear interpolation and the resulting
segments are stitched into polylines.  Saddle squares are disambiguated by
the corner average.
"""

from __future__ import annotations

import numpy as np

from .grid import Grid2D

# segment endpoints per corner-occupancy case, as pairs of edge ids
# edges: 0 = south, 1 = east, 2 = north, 3 = west
_CASES: dict[int, list[tuple[int, int]]] = {
    0: [], 15: [],
    1: [(3, 0)], 14: [(3, 0)],
    2: [(0, 1)], 13: [(0, 1)],
    4: [(1, 2)], 11: [(1, 2)],
    8: [(2, 3)], 7: [(2, 3)],
    3: [(3, 1)], 12: [(3, 1)],
    6: [(0, 2)], 9: [(0, 2)],
}


def _edge_point(edge: int, ix: int, iy: int, v: np.ndarray, thr: float,
                xc: np.ndarray, yc: np.ndarray) -> tuple[float, float]:
    if edge == 0:
        a, b = (ix, iy), (ix + 1, iy)
    elif edge == 1:
        a, b = (ix + 1, iy), (ix + 1, iy + 1)
    elif edge == 2:
        a, b = (ix, iy + 1), (ix + 1, iy + 1)
    else:
        a, b = (ix, iy), (ix, iy + 1)
    va, vb = v[a], v[b]
    t = 0.5 if vb == va else (thr - va) / (vb - va)
    x = xc[a[0]] + t * (xc[b[0]] - xc[a[0]])
    y = yc[a[1]] + t * (yc[b[1]] - yc[a[1]])
    return (float(x), float(y))


def support_contour(rho: np.ndarray, threshold: float,
                    grid: Grid2D) -> list[np.ndarray]:
    """Polylines of the rho == threshold level set, in domain coordinates.

    Returns a list of (k, 2) arrays; a closed loop repeats its first vertex
    at the end.  Empty when the field never reaches the threshold.
    """
    if threshold <= 0.0:
        raise ValueError("contour threshold must be positive")
    v = np.asarray(rho, dtype=float)
    nx, ny = v.shape
    if nx < 2 or ny < 2 or float(v.max()) < threshold:
        return []
    xc = grid.x_centers()
    yc = grid.y_centers()
    inside = v >= threshold

    segments: list[tuple[tuple[float, float], tuple[float, float]]] = []
    for ix in range(nx - 1):
        for iy in range(ny - 1):
            case = (int(inside[ix, iy])
                    | int(inside[ix + 1, iy]) << 1
                    | int(inside[ix + 1, iy + 1]) << 2
                    | int(inside[ix, iy + 1]) << 3)
            if case in (0, 15):
                continue
            if case in (5, 10):
                center = 0.25 * (v[ix, iy] + v[ix + 1, iy]
                                 + v[ix + 1, iy + 1] + v[ix, iy + 1])
                if case == 5:
                    pairs = [(0, 1), (2, 3)] if center >= threshold else [(3, 0), (1, 2)]
                else:
                    pairs = [(3, 0), (1, 2)] if center >= threshold else [(0, 1), (2, 3)]
            else:
                pairs = _CASES[case]
            for ea, eb in pairs:
                pa = _edge_point(ea, ix, iy, v, threshold, xc, yc)
                pb = _edge_point(eb, ix, iy, v, threshold, xc, yc)
                if pa != pb:
                    segments.append((pa, pb))

    return _stitch(segments)


def _stitch(segments) -> list[np.ndarray]:
    """Chain undirected segments into polylines by shared endpoints."""
    by_point: dict[tuple[float, float], list[int]] = {}
    for idx, (a, b) in enumerate(segments):
        by_point.setdefault(a, []).append(idx)
        by_point.setdefault(b, []).append(idx)

    used = [False] * len(segments)
    polylines: list[np.ndarray] = []

    def walk(start_idx: int, start_point):
        # extend a chain from one endpoint until it dead-ends or loops
        chain = [start_point]
        idx = start_idx
        point = start_point
        while True:
            used[idx] = True
            a, b = segments[idx]
            point = b if point == a else a
            chain.append(point)
            nxt = None
            for cand in by_point.get(point, ()):
                if not used[cand]:
                    nxt = cand
                    break
            if nxt is None:
                return chain
            idx = nxt

    for idx in range(len(segments)):
        if used[idx]:
            continue
        a, b = segments[idx]
        forward = walk(idx, a)
        if forward[0] == forward[-1]:
            polylines.append(np.array(forward))
            continue
        # open so far: extend backwards from the original start point
        used[idx] = False
        backward = walk(idx, b)
        merged = backward[::-1] + forward[2:]
        polylines.append(np.array(merged))
    return polylines
