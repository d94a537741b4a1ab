"""Binary masks, disk structuring elements, and dilation.

Masks are boolean (H, W) arrays. A structuring element is an (N, 2) integer
array of (dy, dx) offsets; disks are the exact Euclidean lattice disk
dy^2 + dx^2 <= r^2, not a decomposed approximation.
"""

from __future__ import annotations

import numpy as np


def disk_strel(radius: int) -> np.ndarray:
    """Offsets (dy, dx) with dy^2 + dx^2 <= radius^2 as an (N, 2) int array.

    Always contains (0, 0) and is point-symmetric.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    span = np.arange(-radius, radius + 1)
    dy, dx = np.meshgrid(span, span, indexing="ij")
    inside = dy * dy + dx * dx <= radius * radius
    return np.stack([dy[inside], dx[inside]], axis=1)


def dilate(mask: np.ndarray, se: np.ndarray) -> np.ndarray:
    """Binary dilation of `mask` by the structuring element `se`.

    out(y, x) is true iff some offset (dy, dx) in `se` has mask(y-dy, x-dx)
    true. Source positions outside the mask contribute false (no padding,
    no wrap-around).
    """
    mask = np.asarray(mask, dtype=bool)
    if mask.ndim != 2:
        raise ValueError(f"expected a 2-D mask, got shape {mask.shape}")
    se = np.asarray(se, dtype=np.int64).reshape(-1, 2)

    h, w = mask.shape
    out = np.zeros_like(mask)
    for dy, dx in se:
        y0, y1 = max(0, dy), min(h, h + dy)
        x0, x1 = max(0, dx), min(w, w + dx)
        if y0 >= y1 or x0 >= x1:
            continue
        out[y0:y1, x0:x1] |= mask[y0 - dy : y1 - dy, x0 - dx : x1 - dx]
    return out
