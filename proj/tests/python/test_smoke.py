import cmath

import pytest

import mellin


def test_dims_of_two_variable_profile():
    report = mellin.dims(3, [2, 1])
    assert (report["rank"], report["dim_Y"], report["dim_R"], report["dim_S"]) == (9, 7, 2, 2)
    assert sorted(map(tuple, report["missing_indices"])) == [(0, 2), (2, 1)]


def test_principal_series_matches_quadratic_formula():
    series = mellin.principal_series(2, [1], order=4)["series"]
    coefficients = {tuple(t["exponent"]): t["coeff"] for t in series["terms"]}
    assert coefficients == {(0,): "1", (1,): "-1/2", (2,): "1/8", (4,): "-1/128"}


def test_roots_at_point_solve_the_equation():
    x = 0.3 + 0.1j
    roots = mellin.roots_at_point(2, [1], [x])
    assert len(roots) == 2
    for y in roots:
        assert abs(y * y + x * y - 1) < 1e-12
    assert {round(abs(y), 12) for y in roots} == {round(abs((-x + s * cmath.sqrt(x * x + 4)) / 2), 12) for s in (1, -1)}


def test_root_jets_have_one_branch_per_root():
    jets = mellin.root_jets(3, [2, 1], twist=[0, 1], order=6)
    assert [j["branch"] for j in jets] == [0, 1, 2]
    assert all(j["series"]["ring"] == "complex" for j in jets)


def test_operators_with_horn_check():
    report = mellin.operators(3, [1], check_horn=True)
    assert report["horn_check"]["ok"]


def test_verify_passes():
    report = mellin.verify(3, [2, 1], order=12)
    assert report["passed"]
    assert mellin.verify(3, [2, 1], order=12) == report


def test_scalar_helpers():
    assert mellin.modular_count(3, [2, 1], 2) == 3
    assert not any(mellin.beukers_heckman_reducible(m) for m in range(2, 51))


def test_invalid_profile_raises():
    with pytest.raises(ValueError):
        mellin.dims(3, [3])
    with pytest.raises(mellin.ProfileError):
        mellin.dims(3, [1, 2])
