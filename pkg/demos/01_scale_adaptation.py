"""Walkthrough: remapping a velocity color scale onto a reference scale.

An HSV velocity scale is linear in hue: red (hue 0) encodes the scale
maximum and pure blue (hue 2/3) always encodes the 0.5 m/s floor. Two
screenshots taken at different scale maxima therefore use the same hue
for different velocities. `adapt_hue` moves every hue from the test scale
onto the reference scale so that equal hue means equal velocity again.
"""

import numpy as np

from hsvprep import adapt_hue, velocity_of_hue

TEST_MAX = 6.5  # scale maximum of the screenshot being processed, m/s
REF_MAX = 10.0  # reference scale everything is adapted onto

print(f"test scale: hue 0 -> {velocity_of_hue(0.0, TEST_MAX)} m/s, "
      f"hue 2/3 -> {velocity_of_hue(2 / 3, TEST_MAX)} m/s")
print(f"reference:  hue 0 -> {velocity_of_hue(0.0, REF_MAX)} m/s, "
      f"hue 2/3 -> {velocity_of_hue(2 / 3, REF_MAX)} m/s")
print()

print(f"{'hue':>6} {'m/s at 6.5':>11} {'adapted hue':>12} {'m/s at 10':>10}")
for h in np.linspace(0.0, 2.0 / 3.0, 9):
    h_adapted = adapt_hue(h, TEST_MAX, REF_MAX)
    v_before = velocity_of_hue(h, TEST_MAX)
    v_after = velocity_of_hue(h_adapted, REF_MAX)
    print(f"{h:6.3f} {v_before:11.3f} {h_adapted:12.3f} {v_after:10.3f}")

print()
print("The velocity column is unchanged: the map is exactly the one that")
print("preserves encoded velocity. Blue stays put because 0.5 m/s is the")
print("floor of every scale:")
print(f"  adapt_hue(2/3, {TEST_MAX}, {REF_MAX}) = {adapt_hue(2 / 3, TEST_MAX, REF_MAX):.15f}")

grid = np.linspace(0.0, 2.0 / 3.0, 1000)
drift = np.max(np.abs(velocity_of_hue(adapt_hue(grid, TEST_MAX, REF_MAX), REF_MAX)
                      - velocity_of_hue(grid, TEST_MAX)))
print(f"  max velocity drift over 1000 hues: {drift:.2e} m/s")

print()
print("Scales that would need extrapolation are refused:")
try:
    adapt_hue(0.3, 12.0, REF_MAX)
except ValueError as exc:
    print(f"  adapt_hue(0.3, 12.0, {REF_MAX}) -> ValueError: {exc}")
