"""8-bit grayscale images with a real-valued working buffer, plus PGM/PNG I/O."""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np


def as_float_image(pixels) -> np.ndarray:
    """Validate and convert a 2-D raster to a float64 working buffer."""
    arr = np.asarray(pixels, dtype=float)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"expected a non-empty 2-D raster, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("raster contains non-finite values")
    return arr


def to_uint8(pixels) -> np.ndarray:
    """Clamp to [0, 255] and round half away from zero for 8-bit export."""
    arr = np.clip(np.asarray(pixels, dtype=float), 0.0, 255.0)
    return np.floor(arr + 0.5).astype(np.uint8)


def read_image(path) -> np.ndarray:
    """Read a grayscale image (binary PGM or PNG) as a float64 array."""
    path = Path(path)
    if path.suffix.lower() == ".pgm":
        return _read_pgm(path)
    from PIL import Image as PILImage

    with PILImage.open(path) as im:
        return np.asarray(im.convert("L"), dtype=float)


def write_image(path, pixels) -> None:
    """Write pixels as 8-bit grayscale; format chosen by suffix (.pgm or .png)."""
    path = Path(path)
    data = to_uint8(pixels)
    if path.suffix.lower() == ".pgm":
        _write_pgm(path, data)
        return
    from PIL import Image as PILImage

    PILImage.fromarray(data, mode="L").save(path)


def _read_pgm(path: Path) -> np.ndarray:
    raw = path.read_bytes()
    if not raw.startswith(b"P5"):
        raise ValueError(f"{path}: not a binary PGM (P5) file")
    # header: magic, width, height, maxval; '#' comments allowed between tokens
    tokens = []
    pos = 2
    while len(tokens) < 3:
        m = re.compile(rb"\s*(?:#[^\n]*\n\s*)*(\d+)").match(raw, pos)
        if m is None:
            raise ValueError(f"{path}: malformed PGM header")
        tokens.append(int(m.group(1)))
        pos = m.end()
    width, height, maxval = tokens
    if maxval > 255:
        raise ValueError(f"{path}: only 8-bit PGM supported (maxval={maxval})")
    pos += 1  # single whitespace byte after maxval
    pixels = np.frombuffer(raw, dtype=np.uint8, count=width * height, offset=pos)
    return pixels.reshape(height, width).astype(float)


def _write_pgm(path: Path, data: np.ndarray) -> None:
    header = f"P5\n{data.shape[1]} {data.shape[0]}\n255\n".encode("ascii")
    path.write_bytes(header + data.tobytes())
