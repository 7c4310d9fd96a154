"""Scattered sample sets (the floating mesh) and their CSV serialization."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np


@dataclass(frozen=True)
class Mesh:
    """Scattered samples: real 2-D positions plus intensities.

    Positions may be non-integer and may coincide with grid positions.
    """

    positions: np.ndarray  # (n, 2) float64, columns x, y
    values: np.ndarray  # (n,) float64

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=float).reshape(-1, 2)
        val = np.asarray(self.values, dtype=float).reshape(-1)
        if pos.shape[0] != val.shape[0]:
            raise ValueError(
                f"{pos.shape[0]} positions but {val.shape[0]} values"
            )
        if not np.all(np.isfinite(pos)):
            raise ValueError("mesh positions must be finite")
        pos.setflags(write=False)
        val.setflags(write=False)
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "values", val)

    def __len__(self) -> int:
        return self.positions.shape[0]

    def clipped(self, width: int, height: int, margin: float) -> "Mesh":
        """Discard samples outside [-margin, dim-1+margin] per axis."""
        x, y = self.positions[:, 0], self.positions[:, 1]
        keep = (
            (x >= -margin)
            & (x <= width - 1 + margin)
            & (y >= -margin)
            & (y <= height - 1 + margin)
        )
        if keep.all():
            return self
        return Mesh(self.positions[keep], self.values[keep])


def read_mesh_csv(path) -> Mesh:
    """Read a mesh from CSV with header ``x,y,value``."""
    path = Path(path)
    with path.open() as fh:
        header = fh.readline().strip().lower().replace(" ", "")
    if header != "x,y,value":
        raise ValueError(f"{path}: expected header 'x,y,value', got {header!r}")
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    if data.size == 0:
        return Mesh(np.empty((0, 2)), np.empty(0))
    if data.shape[1] != 3:
        raise ValueError(f"{path}: expected 3 columns, got {data.shape[1]}")
    return Mesh(data[:, :2], data[:, 2])


def write_mesh_csv(path, mesh: Mesh) -> None:
    data = np.column_stack([mesh.positions, mesh.values])
    np.savetxt(path, data, delimiter=",", header="x,y,value", comments="", fmt="%.17g")
