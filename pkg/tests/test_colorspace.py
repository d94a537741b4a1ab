"""Tests for the in-repo RGB <-> HSV conversion.

The stdlib colorsys module serves as an independent oracle for random
pixels; anchor colors with exactly representable coordinates are pinned
bitwise.
"""

import colorsys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hsvprep import hsv_to_rgb, rgb_to_hsv

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False, allow_infinity=False)


def hue_distance(a, b):
    # hue is circular: 0.999 and 0.001 are close
    d = np.abs(np.asarray(a) - np.asarray(b))
    return np.minimum(d, 1.0 - d)


# --- anchors with exactly representable hues ---


def test_red_anchor_exact():
    assert np.array_equal(rgb_to_hsv(np.array([1.0, 0.0, 0.0])), [0.0, 1.0, 1.0])


def test_blue_anchor_exact():
    h, s, v = rgb_to_hsv(np.array([0.0, 0.0, 1.0]))
    assert h == 4.0 / 6.0 == 2.0 / 3.0
    assert s == 1.0 and v == 1.0


def test_cyan_anchor_exact():
    h, s, v = rgb_to_hsv(np.array([0.0, 1.0, 1.0]))
    assert h == 0.5
    assert s == 1.0 and v == 1.0


def test_intermediate_blues_exact():
    # 210 and 225 degrees: the (r - g) / delta arithmetic is exact here
    assert rgb_to_hsv(np.array([0.0, 0.5, 1.0]))[0] == 3.5 / 6.0
    assert rgb_to_hsv(np.array([0.0, 0.25, 1.0]))[0] == 0.625


def test_blue_hue_renders_to_blue():
    rgb = hsv_to_rgb(np.array([2.0 / 3.0, 1.0, 1.0]))
    # green lands within a few ulp of zero, not exactly on it
    assert np.allclose(rgb, [0.0, 0.0, 1.0], atol=1e-12)


def test_yellow_both_directions():
    assert np.allclose(hsv_to_rgb(np.array([1.0 / 6.0, 1.0, 1.0])), [1.0, 1.0, 0.0], atol=1e-12)
    h, s, v = rgb_to_hsv(np.array([1.0, 1.0, 0.0]))
    assert h == pytest.approx(1.0 / 6.0, abs=1e-12)
    assert s == 1.0 and v == 1.0


# --- achromatic handling ---


def test_gray_has_zero_hue_and_saturation():
    assert np.array_equal(rgb_to_hsv(np.array([0.5, 0.5, 0.5])), [0.0, 0.0, 0.5])


def test_black_and_white():
    assert np.array_equal(rgb_to_hsv(np.zeros(3)), [0.0, 0.0, 0.0])
    assert np.array_equal(rgb_to_hsv(np.ones(3)), [0.0, 0.0, 1.0])


def test_zero_saturation_renders_gray():
    rgb = hsv_to_rgb(np.array([0.37, 0.0, 0.42]))
    assert np.array_equal(rgb, [0.42, 0.42, 0.42])


# --- hue wrapping ---


def test_hue_one_wraps_to_zero():
    assert np.array_equal(
        hsv_to_rgb(np.array([1.0, 1.0, 1.0])), hsv_to_rgb(np.array([0.0, 1.0, 1.0]))
    )


def test_hue_above_one_wraps():
    # 1.5 and 0.5 are both exactly representable, so the wrap is bitwise
    assert np.array_equal(
        hsv_to_rgb(np.array([1.5, 1.0, 1.0])), hsv_to_rgb(np.array([0.5, 1.0, 1.0]))
    )


# --- round trips ---


def test_rgb_round_trip_on_random_image(rng):
    img = rng.random((64, 64, 3))
    back = hsv_to_rgb(rgb_to_hsv(img))
    assert np.max(np.abs(back - img)) <= 1e-12


def test_hsv_round_trip_away_from_gray(rng):
    n = 500
    hsv = np.stack(
        [rng.random(n), rng.uniform(0.1, 1.0, n), rng.uniform(0.1, 1.0, n)], axis=-1
    )
    back = rgb_to_hsv(hsv_to_rgb(hsv))
    assert np.max(hue_distance(back[:, 0], hsv[:, 0])) <= 1e-9
    assert np.max(np.abs(back[:, 1:] - hsv[:, 1:])) <= 1e-9


def test_pure_hue_grid_round_trip():
    h = np.linspace(0.0, 1.0, 1000, endpoint=False)
    hsv = np.stack([h, np.ones_like(h), np.ones_like(h)], axis=-1)
    back = rgb_to_hsv(hsv_to_rgb(hsv))
    assert np.max(hue_distance(back[:, 0], h)) <= 1e-9
    assert np.array_equal(back[:, 1:], hsv[:, 1:])


@settings(max_examples=200, deadline=None)
@given(r=unit, g=unit, b=unit)
def test_round_trip_single_pixel(r, g, b):
    pixel = np.array([r, g, b])
    back = hsv_to_rgb(rgb_to_hsv(pixel))
    assert np.max(np.abs(back - pixel)) <= 1e-12


# --- cross-check against the stdlib implementation ---


def test_matches_colorsys_forward(rng):
    for pixel in rng.random((200, 3)):
        ours = rgb_to_hsv(pixel)
        theirs = colorsys.rgb_to_hsv(*pixel)
        assert np.allclose(ours, theirs, atol=1e-12)


def test_matches_colorsys_backward(rng):
    n = 200
    hsv = np.stack([rng.random(n), rng.random(n), rng.random(n)], axis=-1)
    for pixel in hsv:
        ours = hsv_to_rgb(pixel)
        theirs = colorsys.hsv_to_rgb(*pixel)
        assert np.allclose(ours, theirs, atol=1e-12)


# --- invariants and validation ---


def test_hsv_ranges_on_random_input(rng):
    hsv = rgb_to_hsv(rng.random((32, 32, 3)))
    assert np.all(hsv[..., 0] >= 0.0) and np.all(hsv[..., 0] < 1.0)
    assert np.all(hsv[..., 1] >= 0.0) and np.all(hsv[..., 1] <= 1.0)
    assert np.all(hsv[..., 2] >= 0.0) and np.all(hsv[..., 2] <= 1.0)


def test_value_is_max_channel(rng):
    img = rng.random((16, 16, 3))
    assert np.array_equal(rgb_to_hsv(img)[..., 2], img.max(axis=-1))


def test_wrong_channel_count_rejected():
    with pytest.raises(ValueError, match="3 channels"):
        rgb_to_hsv(np.zeros((4, 4)))
    with pytest.raises(ValueError, match="3 channels"):
        hsv_to_rgb(np.zeros((4, 4, 2)))


def test_works_on_image_shaped_arrays(rng):
    img = rng.random((5, 7, 3))
    hsv = rgb_to_hsv(img)
    assert hsv.shape == (5, 7, 3)
    assert hsv_to_rgb(hsv).shape == (5, 7, 3)
