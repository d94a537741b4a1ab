"""Detection and column-KNN imputation of zeroed-out pixels.

A channel plane is a float64 (H, W) array whose missing entries are NaN.
Imputation treats each image column as a data point of `height` values and
fills every missing entry from the k nearest columns:

  - the distance between two columns is the Euclidean distance over the
    rows where both are present, scaled by sqrt(height / shared_rows) so
    partially overlapping columns compare fairly with complete ones;
  - for a missing entry (r, c), candidate columns are walked in order of
    increasing distance (ties broken toward the lower column index),
    columns missing at row r are skipped, and the first k survivors are
    averaged with weights 1/distance;
  - if any chosen neighbor is at distance exactly 0 (a duplicate column),
    the value is the plain mean of the zero-distance neighbors instead.

Entries with no usable neighbor fall back to the mean of the present
entries in their own column, then to the global mean of the plane.
"""

from __future__ import annotations

import numpy as np


def find_missing(img: np.ndarray) -> np.ndarray:
    """Positions where all three channels are exactly 0, as an (N, 2) array.

    The comparison is exact equality: upstream stages write exact zeros
    into the pixels they want re-estimated, and a single zero channel is
    not enough (pure red, for instance, has zero green and blue).
    """
    img = np.asarray(img, dtype=np.float64)
    if img.ndim != 3 or img.shape[2] != 3:
        raise ValueError(f"expected an (H, W, 3) image, got shape {img.shape}")
    zero = (img[..., 0] == 0.0) & (img[..., 1] == 0.0) & (img[..., 2] == 0.0)
    return np.argwhere(zero)


def mark_missing(plane: np.ndarray, positions: np.ndarray) -> np.ndarray:
    """Return a copy of `plane` with the listed (row, col) entries set to NaN."""
    plane = np.array(plane, dtype=np.float64)
    pos = np.asarray(positions, dtype=np.int64).reshape(-1, 2)
    if pos.size:
        h, w = plane.shape
        rows, cols = pos[:, 0], pos[:, 1]
        if (rows < 0).any() or (rows >= h).any() or (cols < 0).any() or (cols >= w).any():
            raise ValueError("missing position outside the plane bounds")
        plane[rows, cols] = np.nan
    return plane


def knn_impute_columns(plane: np.ndarray, k: int) -> np.ndarray:
    """Fill every NaN in `plane` by column-wise k-nearest-neighbor imputation.

    Present entries pass through bit-identical; the output has no NaN.
    Raises ValueError when the whole plane is missing.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    plane = np.asarray(plane, dtype=np.float64)
    if plane.ndim != 2:
        raise ValueError(f"expected a 2-D plane, got shape {plane.shape}")
    present = ~np.isnan(plane)
    if not present.any():
        raise ValueError("nothing to impute from")
    out = plane.copy()
    if present.all():
        return out

    height = plane.shape[0]
    filled = np.where(present, plane, 0.0)
    global_mean = plane[present].mean()

    for c in np.flatnonzero(~present.all(axis=0)):
        own_present = present[:, c]
        rows = np.flatnonzero(~own_present)

        # scaled partial distance from column c to every other column
        shared = own_present[:, None] & present
        n_shared = shared.sum(axis=0)
        diff = filled[:, c : c + 1] - filled
        dist_sq = (diff * diff * shared).sum(axis=0)
        with np.errstate(divide="ignore", invalid="ignore"):
            dist = np.sqrt(dist_sq * (height / n_shared))
        dist[n_shared == 0] = np.inf
        dist[c] = np.inf  # a column is not its own neighbor

        order = np.argsort(dist, kind="stable")  # stable: ties keep index order
        order = order[np.isfinite(dist[order])]

        column_mean = plane[own_present, c].mean() if own_present.any() else global_mean
        if order.size == 0:
            out[rows, c] = column_mean
            continue

        d = dist[order]
        usable = present[np.ix_(rows, order)]
        chosen = usable & (np.cumsum(usable, axis=1) <= k)
        values = filled[np.ix_(rows, order)]

        inv_d = np.zeros_like(d)
        positive = d > 0.0
        inv_d[positive] = 1.0 / d[positive]
        weights = chosen * inv_d

        estimate = np.full(rows.size, column_mean)

        # Both means are anchored at the first neighbor's value: base plus the
        # weighted mean of (value - base). Equal neighbors then average to the
        # shared value bit-exactly, so a constant field restores exactly.
        at_zero = chosen & (d == 0.0)
        dup = at_zero.any(axis=1)
        if dup.any():
            ties, vals = at_zero[dup], values[dup]
            base = vals[np.arange(vals.shape[0]), ties.argmax(axis=1)]
            estimate[dup] = base + ((vals - base[:, None]) * ties).sum(axis=1) / ties.sum(axis=1)

        regular = ~dup & chosen.any(axis=1)
        if regular.any():
            w, vals = weights[regular], values[regular]
            base = vals[np.arange(vals.shape[0]), chosen[regular].argmax(axis=1)]
            estimate[regular] = base + ((vals - base[:, None]) * w).sum(axis=1) / w.sum(axis=1)

        out[rows, c] = estimate
    return out
