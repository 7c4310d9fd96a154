"""Affine transforms on pixel coordinates."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import SingularTransformError

_DET_EPS = 1e-12


@dataclass(frozen=True)
class AffineTransform:
    """y = T x + t with an invertible 2x2 matrix T and translation t (pixels)."""

    matrix: np.ndarray
    translation: np.ndarray = field(default_factory=lambda: np.zeros(2))

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float).reshape(2, 2)
        t = np.asarray(self.translation, dtype=float).reshape(2)
        if not (np.all(np.isfinite(m)) and np.all(np.isfinite(t))):
            raise ValueError("transform entries must be finite")
        m.setflags(write=False)
        t.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "translation", t)

    @classmethod
    def identity(cls) -> "AffineTransform":
        return cls(np.eye(2), np.zeros(2))

    @classmethod
    def rotation(cls, degrees: float) -> "AffineTransform":
        th = np.radians(degrees)
        c, s = np.cos(th), np.sin(th)
        return cls(np.array([[c, -s], [s, c]]), np.zeros(2))

    @classmethod
    def scaling(cls, factor: float) -> "AffineTransform":
        return cls(np.diag([float(factor), float(factor)]), np.zeros(2))

    @property
    def det(self) -> float:
        m = self.matrix
        return float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def apply_affine(a: AffineTransform, points) -> np.ndarray:
    """Map points (shape (2,) or (n, 2)) through y = T x + t."""
    p = np.asarray(points, dtype=float)
    single = p.ndim == 1
    p = np.atleast_2d(p)
    out = p @ a.matrix.T + a.translation
    return out[0] if single else out


def invert_affine(a: AffineTransform) -> AffineTransform:
    """Inverse transform; raises SingularTransformError for |det T| <= 1e-12."""
    if abs(a.det) <= _DET_EPS:
        raise SingularTransformError(f"transform is singular (det={a.det:.3e})")
    m_inv = np.linalg.inv(a.matrix)
    return AffineTransform(m_inv, -m_inv @ a.translation)


def compose(outer: AffineTransform, inner: AffineTransform) -> AffineTransform:
    """Transform equal to applying `inner` first, then `outer`."""
    return AffineTransform(
        outer.matrix @ inner.matrix,
        outer.matrix @ inner.translation + outer.translation,
    )


def about_center(a: AffineTransform, width: int, height: int) -> AffineTransform:
    """Re-anchor a transform to act about the image center.

    Coordinates are shifted so the center pixel position ((width-1)/2,
    (height-1)/2) becomes the origin, transformed, and shifted back.
    """
    c = np.array([(width - 1) / 2.0, (height - 1) / 2.0])
    return AffineTransform(a.matrix, a.translation + c - a.matrix @ c)
