"""The preprocessing pipeline: dark-space fill, letter removal, scale adaptation.

Velocity color scales are linear in hue: red (hue 0) encodes the
examiner-set scale maximum and pure blue (hue 2/3) always encodes
0.5 m/s, the fixed floor of the scale. Adapting an image taken at scale
maximum `test_max` onto a reference scale `ref_max` therefore reduces to
a closed-form linear remap of the hue plane; the other stages clean the
image up so that every pixel actually carries scale color.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .colorspace import hsv_to_rgb, rgb_to_hsv
from .inpaint import find_missing, knn_impute_columns, mark_missing
from .morphology import dilate, disk_strel

# the velocity every scale maps to pure blue (hue 2/3), in m/s
VELOCITY_FLOOR = 0.5


@dataclass(frozen=True)
class PipelineConfig:
    """Tunable constants of the pipeline.

    `test_max` is the scale maximum of the image being processed (m/s) and
    has no default: it is per-image metadata, set by the examiner, never
    inferred from pixels. `ref_max` is the common scale everything is
    adapted onto. The remaining knobs default to the values calibrated for
    ultrasound elastography screenshots.
    """

    test_max: float | None = None
    ref_max: float = 10.0
    dark_threshold: float = 0.148
    fill_color_hsv: tuple[float, float, float] = (0.606, 1.000, 1.000)
    sat_min: float = 0.700
    dilation_radius: int = 6
    k: int = 10
    noise_cutoff: float = 0.80
    noise_red_hue: float = 0.001
    v_min: float = VELOCITY_FLOOR

    def __post_init__(self) -> None:
        if not 0.0 < self.dark_threshold < 1.0:
            raise ValueError(f"dark_threshold must be in (0, 1), got {self.dark_threshold}")
        if not 0.0 < self.sat_min < 1.0:
            raise ValueError(f"sat_min must be in (0, 1), got {self.sat_min}")
        if self.dilation_radius < 0:
            raise ValueError(f"dilation_radius must be >= 0, got {self.dilation_radius}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.v_min != VELOCITY_FLOOR:
            raise ValueError(f"the scale floor is fixed at {VELOCITY_FLOOR} m/s")
        if self.ref_max <= self.v_min:
            raise ValueError(f"ref_max must exceed {self.v_min} m/s, got {self.ref_max}")


@dataclass(frozen=True)
class PipelineResult:
    """Both pipeline outputs plus the counts the batch report wants."""

    letters_removed: np.ndarray
    adapted: np.ndarray
    dark_pixels: int
    letter_pixels: int


def _as_image(img) -> np.ndarray:
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError(f"expected an (H, W, 3) image, got shape {arr.shape}")
    return arr


def fill_dark(img: np.ndarray, cfg: PipelineConfig) -> np.ndarray:
    """Replace every pixel with V below the dark threshold by the fill color.

    `img` is HSV. The comparison is strictly less-than: a pixel sitting
    exactly at the threshold is kept. The fill color has V = 1, so the
    operation is idempotent.
    """
    hsv = _as_image(img).copy()
    dark = hsv[..., 2] < cfg.dark_threshold
    hsv[dark] = cfg.fill_color_hsv
    return hsv


def letter_mask(img: np.ndarray, cfg: PipelineConfig) -> np.ndarray:
    """Mask of annotation pixels in an HSV image, dilated by a disk.

    Scale colors are fully saturated, so tissue is selected as
    S in [sat_min, 1] (with H and V anywhere in [0, 1]); the complement is
    the candidate letter set. Dilation widens it so anti-aliased letter
    outlines do not survive removal. A pixel at exactly S = sat_min counts
    as tissue.
    """
    img = _as_image(img)
    h, s, v = img[..., 0], img[..., 1], img[..., 2]
    tissue = (
        (h >= 0.0)
        & (h <= 1.0)
        & (s >= cfg.sat_min)
        & (s <= 1.0)
        & (v >= 0.0)
        & (v <= 1.0)
    )
    return dilate(~tissue, disk_strel(cfg.dilation_radius))


def remove_letters(img: np.ndarray, mask: np.ndarray, k: int) -> np.ndarray:
    """Zero out the masked pixels of an RGB image and re-estimate them.

    Masked pixels are written as exact (0, 0, 0), located again by the
    all-channels-zero test, marked missing, and imputed channel by channel
    with column KNN. Pixels outside the mask come back bit-identical.
    """
    img = _as_image(img)
    mask = np.asarray(mask, dtype=bool)
    if mask.shape != img.shape[:2]:
        raise ValueError(f"mask shape {mask.shape} does not match image {img.shape[:2]}")
    if not mask.any():
        return img.copy()

    zeroed = img.copy()
    zeroed[mask] = 0.0
    positions = find_missing(zeroed)
    planes = [
        knn_impute_columns(mark_missing(zeroed[..., ch], positions), k) for ch in range(3)
    ]
    return np.stack(planes, axis=-1)


def velocity_of_hue(h, vmax):
    """Velocity (m/s) encoded by hue `h` on a scale topping out at `vmax`.

    The line through (0, vmax) and (2/3, 0.5): red is the scale maximum,
    pure blue is 0.5 m/s on every scale. Accepts scalars or arrays.
    """
    return vmax - 1.5 * (vmax - VELOCITY_FLOOR) * h


def adapt_hue(h, test_max: float, ref_max: float):
    """Remap hue from a `test_max` scale onto a `ref_max` scale.

    The unique linear map under which a hue on the output scale encodes
    the same velocity it did on the input scale; blue (2/3) is its fixed
    point. Accepts scalars or arrays.
    """
    if test_max > ref_max:
        raise ValueError("test scale exceeds reference scale")
    if test_max <= VELOCITY_FLOOR:
        raise ValueError(f"test scale must exceed {VELOCITY_FLOOR} m/s")
    return ((1.5 * test_max - 0.75) * h - test_max + ref_max) / ((ref_max - 0.5) * 1.5)


def adapt_threshold(img: np.ndarray, cfg: PipelineConfig) -> np.ndarray:
    """Remap an RGB image's velocity scale onto the reference scale.

    Hues above the noise cutoff are wrap-around noise (dark reds landing
    near hue 1) and are treated as red before the remap. Saturation and
    value are forced to 1 so every output pixel is a pure scale color.
    Raises ValueError when cfg.test_max is unset or outside
    (v_min, ref_max]; out-of-range scales are an error, never clamped.
    """
    img = _as_image(img)
    if cfg.test_max is None:
        raise ValueError("test_max is not set; it is required per image")
    hsv = rgb_to_hsv(img)
    h = hsv[..., 0]
    h = np.where(h > cfg.noise_cutoff, cfg.noise_red_hue, h)
    h = adapt_hue(h, cfg.test_max, cfg.ref_max)
    ones = np.ones_like(h)
    return hsv_to_rgb(np.stack([h, ones, ones], axis=-1))


def process_image(img: np.ndarray, cfg: PipelineConfig) -> PipelineResult:
    """Run the full pipeline on one RGB image.

    Stage order: convert to HSV, fill dark spaces, build the letter mask
    on the dark-filled image, convert back to RGB, remove letters (first
    output), adapt the scale of that result (second output). Dark filling
    runs first so no natural black pixel is left to confuse the
    all-channels-zero letter detection.
    """
    img = _as_image(img)
    hsv = rgb_to_hsv(img)
    dark_pixels = int((hsv[..., 2] < cfg.dark_threshold).sum())
    hsv = fill_dark(hsv, cfg)
    mask = letter_mask(hsv, cfg)
    rgb = hsv_to_rgb(hsv)
    letters_removed = remove_letters(rgb, mask, cfg.k)
    adapted = adapt_threshold(letters_removed, cfg)
    return PipelineResult(letters_removed, adapted, dark_pixels, int(mask.sum()))


def run_pipeline(img: np.ndarray, cfg: PipelineConfig) -> tuple[np.ndarray, np.ndarray]:
    """Both pipeline outputs: (letters removed, scale adapted)."""
    result = process_image(img, cfg)
    return result.letters_removed, result.adapted
