"""Reading and writing 8-bit PNG images.

Files cross this boundary as float64 arrays of shape (H, W, 3) with values
in [0, 1]; every other module works in that representation. Only 8-bit
RGB and RGBA PNGs are accepted (alpha is dropped on load), and the save
path always emits 8-bit RGB so a load/save cycle reproduces pixel bytes
exactly.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image

_PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"
# IHDR color type codes for 8-bit truecolor, without and with alpha
_ALLOWED_COLOR_TYPES = {2: "RGB", 6: "RGBA"}


class ImageFormatError(ValueError):
    """The file is readable but is not an 8-bit RGB/RGBA PNG."""


def _read_ihdr(path: str | Path) -> tuple[int, int]:
    """Return (bit_depth, color_type) from the PNG header.

    Checked before decoding so format errors can name the offending
    property instead of surfacing as a generic decoder failure.
    """
    with open(path, "rb") as fh:
        header = fh.read(26)
    if len(header) < 26 or not header.startswith(_PNG_SIGNATURE):
        raise ImageFormatError(f"{path}: not a PNG file")
    return header[24], header[25]


def load_image(path: str | Path) -> np.ndarray:
    """Load an 8-bit RGB or RGBA PNG as a float64 (H, W, 3) array in [0, 1].

    Each channel byte v maps to v / 255 exactly; an alpha channel, if
    present, is discarded. Unreadable files raise OSError; PNGs of any
    other bit depth or color type raise ImageFormatError.
    """
    bit_depth, color_type = _read_ihdr(path)
    if color_type not in _ALLOWED_COLOR_TYPES:
        raise ImageFormatError(
            f"{path}: unsupported PNG color type {color_type} (need truecolor RGB or RGBA)"
        )
    if bit_depth != 8:
        raise ImageFormatError(f"{path}: unsupported bit depth {bit_depth} (need 8)")
    with Image.open(path) as img:
        pixels = np.asarray(img)
    return pixels[:, :, :3].astype(np.float64) / 255.0


def save_image(img: np.ndarray, path: str | Path) -> None:
    """Write a float (H, W, 3) image as an 8-bit RGB PNG.

    Values are clamped to [0, 1] and scaled by 255 with halves rounding
    away from zero, so the byte mapping is identical on every platform.
    """
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError(f"expected an (H, W, 3) image, got shape {arr.shape}")
    # after clamping all values are non-negative, so floor(x + 0.5) is
    # round-half-away-from-zero
    scaled = np.floor(np.clip(arr, 0.0, 1.0) * 255.0 + 0.5).astype(np.uint8)
    Image.fromarray(scaled, mode="RGB").save(path, format="PNG")
