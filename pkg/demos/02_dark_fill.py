"""Walkthrough: filling dark non-signal regions with the standard blue.

Screenshot regions where the scanner drew no color (shadows, masked-out
tissue, UI background) come out near black. Left alone they would read as
"very low velocity" after adaptation, so the pipeline replaces every
pixel with V below 0.148 by a fixed fully saturated blue before anything
else happens.
"""

from pathlib import Path

import numpy as np

from hsvprep import PipelineConfig, fill_dark, hsv_to_rgb, rgb_to_hsv, save_image
from hsvprep.synthetic import fill_rect, hue_ramp

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

cfg = PipelineConfig(test_max=6.5)

# a clean velocity field with one black box and one dim (not black) box
img = hsv_to_rgb(hue_ramp(120, 160))
img = fill_rect(img, 20, 30, 30, 40, (0.0, 0.0, 0.0))
img = fill_rect(img, 70, 100, 20, 30, (0.10, 0.02, 0.05))
save_image(img, OUT / "dark_before.png")

hsv = rgb_to_hsv(img)
dark = hsv[..., 2] < cfg.dark_threshold
print(f"pixels with V < {cfg.dark_threshold}: {int(dark.sum())} "
      f"(the 30x40 black box plus the 20x30 dim box)")

filled = fill_dark(hsv, cfg)
save_image(hsv_to_rgb(filled), OUT / "dark_after.png")

remaining = int((filled[..., 2] < cfg.dark_threshold).sum())
print(f"after fill_dark: {remaining} dark pixels remain")

fill_rgb = hsv_to_rgb(np.array(cfg.fill_color_hsv))
print(f"fill color: HSV {cfg.fill_color_hsv} = RGB "
      f"({fill_rgb[0]:.3f}, {fill_rgb[1]:.3f}, {fill_rgb[2]:.3f}), a deep blue")

# the fill is idempotent: the fill color itself is nowhere near dark
again = fill_dark(filled, cfg)
print(f"second pass changes nothing: {bool(np.array_equal(again, filled))}")

print(f"\nwrote {OUT / 'dark_before.png'} and {OUT / 'dark_after.png'}")
