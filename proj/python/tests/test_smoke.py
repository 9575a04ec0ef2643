from fractions import Fraction

import pytest

import einsu


def test_solve_323():
    doc = einsu.solve(3, 2, 3)
    assert doc["expectation"]["met"]
    case2 = [s for s in doc["solutions"] if s["case"] == "Case2"]
    assert len(case2) == 2
    assert all(s["classification"] == "NonNaturallyReductive" for s in case2)
    assert float(case2[0]["x12"]["decimal"]) == pytest.approx(0.7460928018727691, rel=1e-14)


def test_exact_root_at_one():
    doc = einsu.solve(2, 2, 3)
    exact = [s for s in doc["solutions"] if s["case"] == "Case2" and s["x12"]["exact"] == "1"]
    assert len(exact) == 1
    assert exact[0]["x2"]["exact"] == "7/23"


def test_polynomials():
    assert einsu.q1(3, 2, 3) == [108, -168, 52]
    f3 = einsu.f3(3, 2, 3)
    assert len(f3) == 17 and f3[0] == 1443420 and f3[16] == 31036096
    g3 = einsu.g3(2, 2, 3)
    assert g3[0] == -12096
    assert sum(g3) == 1285632
    assert einsu.large_k1_beta(48, 2, 3) == Fraction(660, 73)


def test_curvature():
    ones = [1.0] * 6
    assert einsu.ricci_components(3, 2, 3, ones) == pytest.approx([0.25] * 6, abs=1e-15)
    assert einsu.oracle_residual(3, 2, 3, ones, 0.25) < 1e-12
    assert einsu.system_f(3, 2, 3, ones) == pytest.approx([0.0] * 5, abs=1e-12)


def test_certify_and_verify():
    cert = einsu.certify(48, 2, 3)
    assert cert["large_k1"]["status"] == "PASS"
    assert cert["monotonicity"]["status"] == "PASS"
    report = einsu.verify([2, 2, 2], trials=2)
    assert all(c["status"] == "PASS" for c in report["checks"])


def test_errors():
    with pytest.raises(einsu.ParameterError):
        einsu.solve(3, 2, 2)
    with pytest.raises(einsu.EinsuError):
        einsu.g3(3, 2, 3)
