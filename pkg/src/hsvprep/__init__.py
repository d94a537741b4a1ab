"""Preprocessing for HSV-colormapped ultrasound screenshots.

The pipeline normalizes batches of velocity-colormapped images so they can
be compared and analyzed on a single common color scale:

1. near-black artifact regions are painted over with a fixed low-velocity
   blue (`fill_dark`),
2. burned-in annotation text is masked, dilated, zeroed, and re-estimated
   per channel with column-wise KNN imputation (`letter_mask`,
   `remove_letters`),
3. the image's hue-encoded velocity scale is remapped linearly onto a
   reference scale so equal hue means equal velocity across the whole
   dataset (`adapt_threshold`).

Images are numpy float64 arrays of shape (H, W, 3) with channel values in
[0, 1]; masks are boolean (H, W) arrays.
"""

from .colorspace import hsv_to_rgb, rgb_to_hsv
from .imageio import ImageFormatError, load_image, save_image
from .inpaint import find_missing, knn_impute_columns, mark_missing
from .morphology import dilate, disk_strel
from .preprocess import (
    VELOCITY_FLOOR,
    PipelineConfig,
    PipelineResult,
    adapt_hue,
    adapt_threshold,
    fill_dark,
    letter_mask,
    process_image,
    remove_letters,
    run_pipeline,
    velocity_of_hue,
)

__version__ = "0.1.0"

__all__ = [
    "ImageFormatError",
    "PipelineConfig",
    "PipelineResult",
    "VELOCITY_FLOOR",
    "adapt_hue",
    "adapt_threshold",
    "dilate",
    "disk_strel",
    "fill_dark",
    "find_missing",
    "hsv_to_rgb",
    "knn_impute_columns",
    "letter_mask",
    "load_image",
    "mark_missing",
    "process_image",
    "remove_letters",
    "rgb_to_hsv",
    "run_pipeline",
    "save_image",
    "velocity_of_hue",
]
