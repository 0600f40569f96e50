from collections import Counter

import pytest

from component.degree_sets import aset_w, aset_z, block_image, bset, dset
from scheme.params import AciParams, BiDegree


def degrees(*pairs):
    return Counter(BiDegree(a, b) for a, b in pairs)


def test_aset_z_of_block_scheme(block_scheme):
    assert aset_z(0, block_scheme) == degrees((7, 4), (9, 2), (11, 0))
    assert aset_z(1, block_scheme) == degrees((9, 4), (11, 2))


def test_aset_z_without_excess():
    params = AciParams(1, 2, 1, 1, 3, 2, 1)
    assert aset_z(0, params) == degrees((5, 0))
    assert aset_z(1, params) == Counter()


def test_aset_w_three_points():
    assert aset_w(0, 2, 4, 3) == degrees((5, 0), (4, 1), (3, 2))
    assert aset_w(1, 2, 4, 3) == degrees((5, 1), (4, 2))
    assert aset_w(2, 2, 4, 3) == degrees((5, 2), (4, 3))


@pytest.mark.parametrize("k", [3, -1])
def test_degree_sets_reject_bad_homological_degree(k):
    with pytest.raises(ValueError):
        aset_w(k, 1, 1, 1)
    with pytest.raises(ValueError):
        dset(k, 1, 1)


def test_dset_counts_match_tensor_product():
    m12, m21 = 3, 2
    assert len(dset(0, m12, m21)) == (m12 + 1) * (m21 + 1)
    assert len(dset(1, m12, m21)) == m12 * (m21 + 1) + (m12 + 1) * m21
    assert len(dset(2, m12, m21)) == m12 * m21


def test_bset_three_reduced_points():
    assert bset(0, 1, 1) == [(0, 0, 1, 1), (1, 0, 1, 0), (1, 1, 0, 0)]
    assert bset(1, 1, 1) == [(1, 0, 1, 1), (1, 1, 1, 0)]
    assert bset(2, 1, 1) == []


def test_block_image_weights_exponents():
    params = AciParams(2, 1, 3, 4, 1, 1, 1)
    assert block_image([(1, 1, 0, 1), (0, 2, 1, 0)], params) == degrees((3, 4), (2, 3))
