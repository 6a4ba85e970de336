"""Root data and the Weyl dimension formula."""

import json
from itertools import product

import pytest

from lierep.invariants import SimpleType, dim_simple
from lierep.weyl import (
    irrep_dims_upto,
    min_nontrivial_dim,
    root_data,
    root_data_json,
    weyl_dim,
)

ALL_TYPES = [
    "A1", "A2", "A3", "A5", "A9",
    "B2", "B3", "B5",
    "C3", "C4",
    "D4", "D5",
    "E6", "E7", "E8", "F4", "G2",
]


@pytest.mark.parametrize("name", ALL_TYPES)
def test_positive_root_count(name):
    t = SimpleType.from_name(name)
    rd = root_data(t)
    assert len(rd.positive_roots) == (dim_simple(t) - t.rank) // 2


@pytest.mark.parametrize("name", ALL_TYPES)
def test_rho_pairings_positive(name):
    rd = root_data(SimpleType.from_name(name))
    assert all(v > 0 for v in rd.rho_pairings)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_trivial_weight_dimension_one(name):
    rd = root_data(SimpleType.from_name(name))
    assert weyl_dim(rd, (0,) * rd.rank) == 1


def test_known_dimensions():
    assert weyl_dim(root_data(SimpleType("A", 1)), (1,)) == 2
    assert weyl_dim(root_data(SimpleType("A", 2)), (1, 1)) == 8  # adjoint
    assert weyl_dim(root_data(SimpleType("G", 2)), (1, 0)) == 7
    assert weyl_dim(root_data(SimpleType("G", 2)), (0, 1)) == 14  # adjoint
    # adjoint dimensions equal dim(g) for a sample of types
    assert weyl_dim(root_data(SimpleType("B", 3)), (0, 1, 0)) == 21
    assert weyl_dim(root_data(SimpleType("A", 3)), (1, 0, 1)) == 15


def test_dominant_weight_validation():
    rd = root_data(SimpleType("A", 2))
    with pytest.raises(ValueError):
        weyl_dim(rd, (1,))
    with pytest.raises(ValueError):
        weyl_dim(rd, (1, -1))


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"])
def test_strict_monotonicity_on_box(name):
    # guards the search-space argument of min_nontrivial_dim
    rd = root_data(SimpleType.from_name(name))
    for lam in product(range(2), repeat=rd.rank):
        base = weyl_dim(rd, lam)
        for i in range(rd.rank):
            bumped = lam[:i] + (lam[i] + 1,) + lam[i + 1 :]
            assert weyl_dim(rd, bumped) > base


def test_min_nontrivial_spot_values():
    assert min_nontrivial_dim(root_data(SimpleType("B", 2))) == 4
    assert min_nontrivial_dim(root_data(SimpleType("E", 7))) == 56
    assert min_nontrivial_dim(root_data(SimpleType("E", 8))) == 248


def test_irrep_dims_upto():
    assert irrep_dims_upto(root_data(SimpleType("A", 1)), 5) == [2, 3, 4, 5]
    assert irrep_dims_upto(root_data(SimpleType("A", 2)), 10) == [3, 6, 8, 10]
    assert irrep_dims_upto(root_data(SimpleType("B", 2)), 5) == [4, 5]


@pytest.mark.parametrize("name", ["A1", "A3", "B3", "C3", "D4", "G2"])
def test_irrep_dims_bounds(name):
    rd = root_data(SimpleType.from_name(name))
    low = min_nontrivial_dim(rd)
    dims = irrep_dims_upto(rd, 3 * low)
    assert dims and dims[0] == low
    assert all(low <= d <= 3 * low for d in dims)


def test_irrep_dims_validation():
    with pytest.raises(ValueError):
        irrep_dims_upto(root_data(SimpleType("A", 1)), 0)


def test_json_export():
    data = json.loads(root_data_json(root_data(SimpleType("G", 2))))
    assert data["type"] == "G2"
    assert len(data["positive_roots"]) == 6
    assert all(v > 0 for v in data["rho_pairings"])
