"""Synthetic test images: velocity gradients, block text, artifacts.

Used by the test suite and the demo scripts to build images with known
ground truth. The block font is a plain 5x7 bitmap covering digits,
'.', '/', space, and the uppercase letters that show up in scanner
annotations.
"""

from __future__ import annotations

import numpy as np

_GLYPHS: dict[str, tuple[str, ...]] = {
    " ": ("00000", "00000", "00000", "00000", "00000", "00000", "00000"),
    ".": ("00000", "00000", "00000", "00000", "00000", "01100", "01100"),
    "/": ("00001", "00010", "00010", "00100", "01000", "01000", "10000"),
    "0": ("01110", "10001", "10011", "10101", "11001", "10001", "01110"),
    "1": ("00100", "01100", "00100", "00100", "00100", "00100", "01110"),
    "2": ("01110", "10001", "00001", "00010", "00100", "01000", "11111"),
    "3": ("11111", "00010", "00100", "00010", "00001", "10001", "01110"),
    "4": ("00010", "00110", "01010", "10010", "11111", "00010", "00010"),
    "5": ("11111", "10000", "11110", "00001", "00001", "10001", "01110"),
    "6": ("00110", "01000", "10000", "11110", "10001", "10001", "01110"),
    "7": ("11111", "00001", "00010", "00100", "01000", "01000", "01000"),
    "8": ("01110", "10001", "10001", "01110", "10001", "10001", "01110"),
    "9": ("01110", "10001", "10001", "01111", "00001", "00010", "01100"),
    "A": ("01110", "10001", "10001", "11111", "10001", "10001", "10001"),
    "B": ("11110", "10001", "10001", "11110", "10001", "10001", "11110"),
    "C": ("01110", "10001", "10000", "10000", "10000", "10001", "01110"),
    "D": ("11110", "10001", "10001", "10001", "10001", "10001", "11110"),
    "E": ("11111", "10000", "10000", "11110", "10000", "10000", "11111"),
    "F": ("11111", "10000", "10000", "11110", "10000", "10000", "10000"),
    "G": ("01110", "10001", "10000", "10111", "10001", "10001", "01111"),
    "H": ("10001", "10001", "10001", "11111", "10001", "10001", "10001"),
    "I": ("01110", "00100", "00100", "00100", "00100", "00100", "01110"),
    "K": ("10001", "10010", "10100", "11000", "10100", "10010", "10001"),
    "L": ("10000", "10000", "10000", "10000", "10000", "10000", "11111"),
    "M": ("10001", "11011", "10101", "10101", "10001", "10001", "10001"),
    "N": ("10001", "11001", "10101", "10011", "10001", "10001", "10001"),
    "O": ("01110", "10001", "10001", "10001", "10001", "10001", "01110"),
    "P": ("11110", "10001", "10001", "11110", "10000", "10000", "10000"),
    "Q": ("01110", "10001", "10001", "10001", "10101", "10010", "01101"),
    "R": ("11110", "10001", "10001", "11110", "10100", "10010", "10001"),
    "S": ("01111", "10000", "10000", "01110", "00001", "00001", "11110"),
    "T": ("11111", "00100", "00100", "00100", "00100", "00100", "00100"),
    "U": ("10001", "10001", "10001", "10001", "10001", "10001", "01110"),
    "V": ("10001", "10001", "10001", "10001", "10001", "01010", "00100"),
    "W": ("10001", "10001", "10001", "10101", "10101", "10101", "01010"),
    "Y": ("10001", "10001", "01010", "00100", "00100", "00100", "00100"),
}

GLYPH_HEIGHT = 7
GLYPH_WIDTH = 5


def hue_ramp(height: int, width: int, h_start: float = 0.0, h_end: float = 2.0 / 3.0) -> np.ndarray:
    """HSV image with S = V = 1 and hue running linearly across columns."""
    h = np.broadcast_to(np.linspace(h_start, h_end, width), (height, width))
    ones = np.ones((height, width))
    return np.stack([h, ones, ones], axis=-1)


def constant_image(height: int, width: int, rgb: tuple[float, float, float]) -> np.ndarray:
    """RGB image of a single color."""
    return np.broadcast_to(np.asarray(rgb, dtype=np.float64), (height, width, 3)).copy()


def fill_rect(img: np.ndarray, top: int, left: int, height: int, width: int, color) -> np.ndarray:
    """Copy of `img` with a solid rectangle stamped on it."""
    out = np.array(img, dtype=np.float64)
    out[top : top + height, left : left + width] = np.asarray(color, dtype=np.float64)
    return out


def glyph_bitmap(char: str) -> np.ndarray:
    """The 7x5 boolean bitmap of one character."""
    try:
        rows = _GLYPHS[char]
    except KeyError:
        raise ValueError(f"no glyph for character {char!r}") from None
    return np.array([[cell == "1" for cell in row] for row in rows])


def text_mask(text: str, scale: int = 1, spacing: int = 1) -> np.ndarray:
    """Boolean mask of a rendered text string (glyphs plus letter spacing)."""
    if scale < 1:
        raise ValueError("scale must be >= 1")
    glyphs = [glyph_bitmap(ch) for ch in text]
    gap = np.zeros((GLYPH_HEIGHT, spacing), dtype=bool)
    cells = []
    for i, glyph in enumerate(glyphs):
        if i:
            cells.append(gap)
        cells.append(glyph)
    mask = np.hstack(cells) if cells else np.zeros((GLYPH_HEIGHT, 0), dtype=bool)
    return np.kron(mask, np.ones((scale, scale), dtype=bool))


def draw_text(
    img: np.ndarray,
    text: str,
    top: int,
    left: int,
    color,
    scale: int = 1,
    spacing: int = 1,
) -> np.ndarray:
    """Copy of `img` with block text stamped at (top, left)."""
    mask = text_mask(text, scale=scale, spacing=spacing)
    h, w = mask.shape
    out = np.array(img, dtype=np.float64)
    if top < 0 or left < 0 or top + h > out.shape[0] or left + w > out.shape[1]:
        raise ValueError(f"text {text!r} does not fit at ({top}, {left})")
    region = out[top : top + h, left : left + w]
    region[mask] = np.asarray(color, dtype=np.float64)
    return out
