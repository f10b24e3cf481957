"""Frame export: per-group CSV fields, plain-text PGM heatmaps, and a
line-delimited JSON diagnostics stream.

Floats are written with 17 significant digits so a written field reads back
bit-exactly.  CSV rows run row-major over cells (ix outer, iy inner); PGM
rasters run top row (largest y) first.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .diagnostics import Diagnostics
from .grid import StateField
from .kinetics import moments

DIAGNOSTICS_FILE = "diagnostics.jsonl"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def frame_name(frame: int, group: int, ext: str) -> str:
    return f"frame_{frame:05d}_g{group + 1}.{ext}"


def write_pgm(path: Path, rho: np.ndarray, vmax: float) -> None:
    """Plain-text (P2) grayscale image of a density field, 256 levels,
    mapped linearly from [0, vmax]."""
    if vmax <= 0.0:
        raise ValueError("display maximum must be positive")
    nx, ny = rho.shape
    levels = np.clip(rho / vmax, 0.0, 1.0)
    img = np.rint(levels * 255.0).astype(int)
    lines = [f"P2\n{nx} {ny}\n255"]
    for iy in range(ny - 1, -1, -1):
        lines.append(" ".join(str(v) for v in img[:, iy]))
    path.write_text("\n".join(lines) + "\n")


def write_frame(f: StateField, diag: Diagnostics, out_dir, frame: int,
                rho_display_max: float = 1.0,
                full_state: bool = False) -> list[Path]:
    """Write one output frame and append its diagnostics record.

    Emits frame_XXXXX_gN.csv and frame_XXXXX_gN.pgm per group, a combined
    frame_XXXXX_total.pgm, and one line in diagnostics.jsonl.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    grid = f.grid
    mom = moments(f)
    xs, ys = grid.centers()
    ix, iy = np.meshgrid(np.arange(grid.nx), np.arange(grid.ny), indexing="ij")
    written: list[Path] = []

    for g in range(f.groups):
        cols = [ix.ravel(), iy.ravel(), xs.ravel(), ys.ravel(),
                mom.rho[g].ravel(), mom.qx[g].ravel(), mom.qy[g].ravel()]
        header = ["ix", "iy", "x", "y", "rho", "qx", "qy"]
        if full_state:
            for i in range(f.vgrid.n):
                for j in range(f.vgrid.m):
                    header.append(f"f_{i}_{j}")
                    cols.append(f.data[g, i, j].ravel())
        csv_path = out / frame_name(frame, g, "csv")
        with csv_path.open("w") as fh:
            fh.write(",".join(header) + "\n")
            for row in zip(*cols):
                fh.write(f"{int(row[0])},{int(row[1])},"
                         + ",".join(_fmt(v) for v in row[2:]) + "\n")
        written.append(csv_path)

        pgm_path = out / frame_name(frame, g, "pgm")
        write_pgm(pgm_path, mom.rho[g], rho_display_max)
        written.append(pgm_path)

    total_path = out / f"frame_{frame:05d}_total.pgm"
    write_pgm(total_path, mom.rho_total, rho_display_max)
    written.append(total_path)

    jsonl = out / DIAGNOSTICS_FILE
    with jsonl.open("a") as fh:
        fh.write(json.dumps(diag.to_record()) + "\n")
    written.append(jsonl)
    return written


def read_frame(out_dir, frame: int, group: int) -> dict[str, np.ndarray]:
    """Read one group's frame CSV back into (nx, ny) arrays keyed by column.

    Full-state columns, when present, are returned stacked under "f" with
    shape (n, m, nx, ny).
    """
    path = Path(out_dir) / frame_name(frame, group, "csv")
    with path.open() as fh:
        header = fh.readline().strip().split(",")
        raw = np.loadtxt(fh, delimiter=",", ndmin=2)
    nx = int(raw[:, 0].max()) + 1
    ny = int(raw[:, 1].max()) + 1
    out: dict[str, np.ndarray] = {}
    state_cols = []
    for c, name in enumerate(header):
        grid_vals = raw[:, c].reshape(nx, ny)
        if name.startswith("f_"):
            state_cols.append((name, grid_vals))
        else:
            out[name] = grid_vals
    if state_cols:
        n = max(int(name.split("_")[1]) for name, _ in state_cols) + 1
        m = max(int(name.split("_")[2]) for name, _ in state_cols) + 1
        data = np.zeros((n, m, nx, ny))
        for name, vals in state_cols:
            _, i, j = name.split("_")
            data[int(i), int(j)] = vals
        out["f"] = data
    return out
