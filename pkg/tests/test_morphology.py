"""Tests for disk structuring elements and binary dilation.

Everything is checked against the brute-force double-loop oracles in
oracles.py, plus a few hand-written expected masks.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from hsvprep import dilate, disk_strel
from oracles import dilate_reference, disk_offsets_reference

# lattice points inside circles of radius 0..6
DISK_SIZES = [1, 5, 13, 29, 49, 81, 113]


def as_offset_set(se):
    return {(int(dy), int(dx)) for dy, dx in se}


@pytest.mark.parametrize("radius,size", list(enumerate(DISK_SIZES)))
def test_disk_sizes(radius, size):
    assert disk_strel(radius).shape == (size, 2)


@pytest.mark.parametrize("radius", range(9))
def test_disk_matches_reference(radius):
    assert as_offset_set(disk_strel(radius)) == disk_offsets_reference(radius)


def test_disk_contains_origin_and_is_symmetric():
    offsets = as_offset_set(disk_strel(6))
    assert (0, 0) in offsets
    assert {(-dy, -dx) for dy, dx in offsets} == offsets


def test_negative_radius_rejected():
    with pytest.raises(ValueError, match=">= 0"):
        disk_strel(-1)


def test_dilate_matches_reference_on_random_masks(rng):
    for _ in range(20):
        radius = int(rng.integers(0, 5))
        mask = rng.random((12, 12)) < 0.3
        got = dilate(mask, disk_strel(radius))
        want = np.array(dilate_reference(mask, disk_offsets_reference(radius)))
        assert np.array_equal(got, want)


def test_dilate_by_single_origin_is_identity(rng):
    mask = rng.random((9, 9)) < 0.4
    out = dilate(mask, disk_strel(0))
    assert np.array_equal(out, mask)
    assert out is not mask


def test_dilate_empty_and_full():
    se = disk_strel(3)
    assert not dilate(np.zeros((8, 8), dtype=bool), se).any()
    assert dilate(np.ones((8, 8), dtype=bool), se).all()


def test_center_pixel_grows_into_plus():
    mask = np.zeros((5, 5), dtype=bool)
    mask[2, 2] = True
    want = np.zeros((5, 5), dtype=bool)
    want[2, 1:4] = True
    want[1:4, 2] = True
    assert np.array_equal(dilate(mask, disk_strel(1)), want)


def test_corner_pixel_is_clipped_not_wrapped():
    mask = np.zeros((4, 4), dtype=bool)
    mask[0, 0] = True
    want = np.zeros((4, 4), dtype=bool)
    want[0, 0] = want[0, 1] = want[1, 0] = True
    assert np.array_equal(dilate(mask, disk_strel(1)), want)


def test_asymmetric_offset_shifts_mask(rng):
    # a lone (dy=1, dx=0) offset moves every pixel down one row
    mask = rng.random((6, 8)) < 0.4
    out = dilate(mask, np.array([[1, 0]]))
    assert not out[0].any()
    assert np.array_equal(out[1:], mask[:-1])


def test_dilation_is_extensive_and_monotone(rng):
    se = disk_strel(2)
    small = rng.random((10, 10)) < 0.2
    big = small | (rng.random((10, 10)) < 0.2)
    d_small, d_big = dilate(small, se), dilate(big, se)
    assert np.all(d_small >= small)
    assert np.all(d_big >= d_small)


def test_non_2d_mask_rejected():
    with pytest.raises(ValueError, match="2-D"):
        dilate(np.zeros((3, 3, 3), dtype=bool), disk_strel(1))


@settings(max_examples=60, deadline=None)
@given(
    mask=hnp.arrays(dtype=bool, shape=hnp.array_shapes(min_dims=2, max_dims=2, max_side=10)),
    offsets=st.sets(
        st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=8
    ),
)
def test_dilate_matches_reference_property(mask, offsets):
    se = np.array(sorted(offsets))
    want = np.array(dilate_reference(mask, offsets)).reshape(mask.shape)
    assert np.array_equal(dilate(mask, se), want)
