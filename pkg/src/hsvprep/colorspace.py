"""RGB <-> HSV conversion on unit-interval arrays (hexcone model).

The conversion is implemented here rather than delegated to an external
color library so its behavior is bit-identical wherever the pipeline runs.

Conventions:
  - hue lives in [0, 1) with 1.0 meaning 360 degrees; an input hue of 1.0
    wraps to 0.0 on output,
  - achromatic pixels (max channel equals min channel, including black)
    get saturation 0 and hue 0.
"""

from __future__ import annotations

import numpy as np


def _as_image(img) -> np.ndarray:
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim < 1 or arr.shape[-1] != 3:
        raise ValueError(f"expected an array with 3 channels last, got shape {arr.shape}")
    return arr


def rgb_to_hsv(img: np.ndarray) -> np.ndarray:
    """Convert an RGB array (..., 3) in [0, 1] to HSV.

    value is max(r, g, b); saturation is (max - min) / max (0 where the
    pixel is black); hue comes from the sector of the dominant channel,
    scaled so a full turn is 1.0.
    """
    img = _as_image(img)
    r, g, b = img[..., 0], img[..., 1], img[..., 2]
    v = img.max(axis=-1)
    delta = v - img.min(axis=-1)

    s = np.where(v > 0.0, delta / np.where(v > 0.0, v, 1.0), 0.0)

    safe = np.where(delta > 0.0, delta, 1.0)
    h_from_r = ((g - b) / safe) % 6.0
    h_from_g = (b - r) / safe + 2.0
    h_from_b = (r - g) / safe + 4.0
    h = np.select([delta == 0.0, v == r, v == g], [0.0, h_from_r, h_from_g], default=h_from_b)
    h = (h / 6.0) % 1.0

    return np.stack([h, s, v], axis=-1)


def hsv_to_rgb(img: np.ndarray) -> np.ndarray:
    """Convert an HSV array (..., 3) back to RGB (inverse hexcone)."""
    img = _as_image(img)
    h, s, v = img[..., 0], img[..., 1], img[..., 2]

    h6 = (h % 1.0) * 6.0
    sector = np.floor(h6)
    f = h6 - sector
    sector = sector.astype(np.int64) % 6

    p = v * (1.0 - s)
    q = v * (1.0 - s * f)
    t = v * (1.0 - s * (1.0 - f))

    in_sector = [sector == n for n in range(6)]
    r = np.select(in_sector, [v, q, p, p, t, v])
    g = np.select(in_sector, [t, v, v, q, p, p])
    b = np.select(in_sector, [p, p, t, v, v, q])

    return np.stack([r, g, b], axis=-1)
