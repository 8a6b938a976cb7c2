import json
import math

import pytest

import schublines as sl


def test_worked_example():
    assert sl.kostka([2, 2, 1, 2, 3]) == 5
    ts = sl.enumerate_tableaux([2, 2, 1, 2, 3])
    assert len(ts) == 5
    assert ts[0] == {"row1": [1, 1, 2, 2, 3], "row2": [4, 4, 5, 5, 5]}
    merged, dec = sl.recursion_split([2, 2, 1, 2, 3])
    assert (sl.kostka(merged), sl.kostka(dec)) == (1, 4)


def test_problem_predicates():
    assert sl.n_of([1, 1, 1, 1]) == 3
    assert sl.is_valid([1, 1]) and not sl.is_reduced([1, 1])
    assert sl.reduce([3, 2, 1, 1, 1]) == [2, 1, 1, 1, 1]
    with pytest.raises(sl.InvalidProblem, match="odd sum"):
        sl.kostka([1, 1, 1])
    with pytest.raises(ValueError):
        sl.kostka([2, 0])


def test_big_counts_are_python_ints():
    assert sl.kostka([1] * 200) == math.comb(200, 100) // 101
    assert sl.hook_kostka(4, 0) == 2


def test_verify_round_trip():
    cert = sl.verify([1, 1, 1, 1])
    assert cert["schema"] == 1
    assert cert["root"]["clause"] == "both-branches-one"
    ok, reason = sl.validate_certificate(json.dumps(cert))
    assert ok, reason
    cert["root"]["kostka"] = "3"
    ok, _ = sl.validate_certificate(json.dumps(cert))
    assert not ok
    with pytest.raises(sl.CertificateFormatError):
        sl.validate_certificate("{}")


def test_sweep():
    reports = sl.sweep(12)
    assert [r["n"] for r in reports] == list(range(2, 13))
    assert all(r["certified"] and not r["failures"] for r in reports)


def test_inequalities():
    assert sl.a2_row(14) == (113841, 113634, 207)
    assert sl.a2_difference(13) == -573
    c = sl.equal_case_check(3, 2)
    assert c["applicable"] and c["holds"] and (c["merged"], c["decremented"]) == (1, 3)


def test_spectral():
    assert sl.lambda_eval(2, 0.3) == pytest.approx(1 + 2 * math.cos(0.6), abs=1e-12)
    assert sl.eigen_residual(3, math.pi / 7, 64) < 1e-12
    assert round(sl.kostka_integral([2, 2, 1, 2, 3])) == 5
    assert sl.difference_integral_a2(14) == pytest.approx(207, abs=1e-6)
    b = sl.a2_bound_integrals(14)
    assert b["holds"]
    assert b["lhs"] == pytest.approx(13159.9, abs=0.1)
    assert b["rhs"] == pytest.approx(12837.1, abs=0.1)
    with pytest.raises(ValueError):
        sl.lambda_eval(1, -1.0)
