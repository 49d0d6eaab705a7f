"""Smoke tests for the python bindings.

Run against a module built by the main CMake tree (the CI path) or an
installed wheel; either way `import canring` must resolve.
"""

import json

import pytest

import canring

HYPERPLANE_2_5 = json.dumps(
    {
        "variety": {"type": "projective", "dim": 1},
        "components": [{"coeff": "2/5", "poly": "x0"}],
    }
)

TWO_FIFTHS_P2 = json.dumps(
    {
        "variety": {"type": "projective", "dim": 2},
        "components": [{"coeff": "2/5", "poly": "x0"}],
    }
)

# (1/2)V(x0) - (1/3)V(x1) on P^2; ghost x2 appended during analysis
HALF_MINUS_THIRD_P2 = json.dumps(
    {
        "variety": {"type": "projective", "dim": 2},
        "components": [
            {"coeff": "1/2", "poly": "x0"},
            {"coeff": "-1/3", "poly": "x1"},
        ],
    }
)

# (1/2)u + (1/3)z on F_0, frame completed explicitly to keep slot order (u,v,z,w)
HALF_U_THIRD_Z_F0 = json.dumps(
    {
        "variety": {"type": "hirzebruch", "m": 0},
        "components": [
            {"coeff": "1/2", "poly": "u"},
            {"coeff": "0", "poly": "v"},
            {"coeff": "1/3", "poly": "z"},
            {"coeff": "0", "poly": "w"},
        ],
    }
)


def test_convergents():
    assert canring.convergents("2/5") == [(0, 1), (1, 3), (2, 5)]
    assert canring.convergents("7/2") == [(0, 1), (1, 1), (2, 1), (3, 1), (7, 2)]


def test_graded_dimension():
    # degree-d piece of R(P^1, (2/5)x0) has dim h^0(floor(2d/5)) = floor(2d/5) + 1
    assert canring.graded_dimension(HYPERPLANE_2_5, 0) == 1
    assert canring.graded_dimension(HYPERPLANE_2_5, 5) == 3
    # floor(6D) for the mixed divisor has degree 1 on P^2
    assert canring.graded_dimension(HALF_MINUS_THIRD_P2, 6) == 3
    assert canring.graded_dimension(HALF_MINUS_THIRD_P2, 1) == 0


def test_bounds_effective():
    rep = canring.bounds(HYPERPLANE_2_5)
    assert rep["kind"] == "effective"
    assert rep["generator_floor"] == 5
    assert rep["relation_floor"] == 10


def test_bounds_mixed_sign():
    rep = canring.bounds(HALF_MINUS_THIRD_P2)
    assert rep["kind"] == "projective"
    assert rep["generator_floor"] == 11
    assert rep["relation_floor"] == 22


def test_presentation():
    rep = canring.present(TWO_FIFTHS_P2)
    degs = sorted(g["degree"] for g in rep["generators"])
    assert degs == [1, 3, 3, 5, 5, 5]
    rel_degs = sorted(r["degree"] for r in rep["relations"])
    assert rel_degs == [6, 6, 6, 8, 8, 10]


def test_basis():
    rep = canring.basis(HYPERPLANE_2_5, 5)
    assert rep["dim"] == 3
    assert len(rep["numerators"]) == 3


def test_cone_projective():
    rep = canring.cone(HALF_MINUS_THIRD_P2, box=True)
    degs = sorted(r["degree"] for r in rep["rays"])
    assert degs == [2, 3, 6]
    assert rep["degree_sum"] == 11
    assert rep["extremal"] is True


def test_cone_hirzebruch():
    rep = canring.cone(HALF_U_THIRD_Z_F0)
    degs = sorted(r["degree"] for r in rep["rays"])
    assert degs == [1, 2, 3, 6]
    assert rep["degree_sum"] == 12


def test_verify():
    rep = canring.verify(HYPERPLANE_2_5, 10, relations=True)
    assert rep["verdict"] == "PASS"


def test_parse_error():
    bad = json.dumps(
        {
            "variety": {"type": "projective", "dim": 1},
            "components": [{"coeff": "one/2", "poly": "x0"}],
        }
    )
    with pytest.raises(ValueError):
        canring.bounds(bad)
