from fractions import Fraction

import pytest

import chorn


def test_power_coefficient():
    assert chorn.power_coefficient("C:4", -1, 4, [1, 1, 1, 1]) == 14
    assert chorn.power_coefficient("P:2", -1, 3, [2, 1]) == -3


def test_power_series_terms():
    series = chorn.power_series("P:3", 1, 2)
    assert series == {
        (): 1,
        ((1, 1),): 1,
        ((2, 1),): 1,
        ((3, 1),): 1,
        ((1, 1), (3, 1)): 1,
    }


def test_chromatic():
    assert chorn.chromatic("K:2", [1, 1]) == [0, -1, 1]
    assert chorn.chromatic_value("C:4", [1, 1, 1, 1], 3) == 18
    # one vertex, two copies of a color: binom(q, 2)
    assert chorn.chromatic("K:1", [2]) == [0, Fraction(-1, 2), Fraction(1, 2)]


def test_closed_form_and_peo():
    assert chorn.closed_form("S:3", [1, 1, 1]) == [0, 1, -2, 1]
    assert chorn.closed_form("C:4", [1, 1, 1, 1])[-1] == Fraction(1)
    assert chorn.find_peo("P:5") == [1, 2, 3, 4, 5]
    assert chorn.find_peo("C:4") is None
    assert chorn.peo_coefficient("K:3", [1, 1, 1], 1) == 6


def test_cycle_diagonal():
    assert chorn.cycle_diagonal_q1(4, 1) == 14
    assert chorn.cycle_diagonal_q1(4, 2) == 786
    assert chorn.cycle_diagonal_q1(5, 1) == -30


def test_horn():
    consistent = chorn.horn("P:4", 1, 8)
    assert consistent["status"] == "horn_consistent"
    refuted = chorn.horn("C:4", 1, 12, caps=(4, 4))
    assert refuted["status"] == "ratio_fit_failed"
    assert refuted["evidence"]["failing_ray"] == "diagonal"


def test_window_and_errors():
    assert chorn.power_series("Pinf", 1, 2, window=[1, 2, 3]) == chorn.power_series(
        "P:3", 1, 2
    )
    with pytest.raises(ValueError):
        chorn.power_series("Pinf", 1, 2)
    with pytest.raises(chorn.TruncationError):
        chorn.power_coefficient("P:2", -1, 2, [2, 1])
