"""Walkthrough: batch processing through the command-line front end.

`hsvprep --manifest batch.csv --out-dir out/` runs the whole pipeline
(dark fill, letter removal, scale adaptation) over every image listed in
a CSV manifest. Each image carries its own scale maximum; every image
yields `<stem>_noletters.png` and `<stem>_adapted.png`. This demo builds
two synthetic screenshots, writes a manifest, and invokes the CLI
in-process.
"""

from pathlib import Path

from hsvprep import hsv_to_rgb, save_image
from hsvprep.cli import main
from hsvprep.synthetic import draw_text, fill_rect, hue_ramp

OUT = Path(__file__).parent / "output" / "batch"
OUT.mkdir(parents=True, exist_ok=True)

# two fake screenshots taken at different scale maxima
scan_a = hsv_to_rgb(hue_ramp(200, 320, 0.0, 0.6))
scan_a = fill_rect(scan_a, 150, 240, 30, 50, (0.0, 0.0, 0.0))
scan_a = draw_text(scan_a, "6.5 M/S", 10, 100, (1.0, 1.0, 1.0), scale=2)
save_image(scan_a, OUT / "scan_a.png")

scan_b = hsv_to_rgb(hue_ramp(200, 320, 0.05, 0.66))
scan_b = draw_text(scan_b, "10 M/S", 160, 120, (0.9, 0.9, 0.9), scale=2)
save_image(scan_b, OUT / "scan_b.png")

manifest = OUT / "batch.csv"
manifest.write_text("path,test_max\nscan_a.png,6.5\nscan_b.png,10\n", encoding="utf-8")
print("manifest:")
print(manifest.read_text(), end="")

print("\nrunning: hsvprep --manifest batch.csv --out-dir . --jobs 2\n")
code = main(["--manifest", str(manifest), "--out-dir", str(OUT), "--jobs", "2"])
print(f"\nexit code {code} (0 = all images succeeded, 1 = some failed, 2 = usage error)")
print(f"outputs in {OUT}:")
for path in sorted(OUT.glob("*.png")):
    if path.stem.endswith(("_noletters", "_adapted")):
        print(f"  {path.name}")
