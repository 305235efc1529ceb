import math

import pytest

import mixedmeans as mm


def test_area_example_closed_form():
    for r in (0.2, 0.5, 0.9):
        x = r * r
        value, err = mm.weighted_mean("z+0.5*z^2", 1.0, 1.0, r, quadrature=True)
        assert value == pytest.approx((12 - 3 * x - 2 * x * x) / (6 * (2 - x)), rel=1e-9)
        assert err >= 0


def test_length_example_closed_form():
    r = 0.7
    x = r * r
    value, _ = mm.weighted_mean([8, 12, 6, 1], 1.0, 1.0, r, kind=mm.LENGTH)
    assert value == pytest.approx((24 - 9 * x - 2 * x * x) / (2 - x), rel=1e-9)


def test_monomial_paths_agree():
    closed, _ = mm.weighted_mean_monomial(3, -2.0, 0.5, 0.6)
    quad, _ = mm.weighted_mean("monomial:3", -2.0, 0.5, 0.6, quadrature=True)
    assert quad == pytest.approx(closed, rel=1e-9)


def test_geometry_and_weights():
    assert mm.area("identity", 0.5)[0] == pytest.approx(math.pi * 0.25)
    assert mm.length([0, 2], 0.5)[0] == pytest.approx(2 * math.pi)
    assert mm.nu_alpha(0.0, 0.5) == pytest.approx(0.25)
    assert mm.f_lambda(1.0, 0.0, 0.5) == pytest.approx(0.125)
    assert mm.mixed_ratio("z", 0.3, 1.0) == pytest.approx(1.0)
    assert mm.parse_function("z+0.5*z^2") == [0, 1, 0.5]


def test_delta_and_scan():
    assert mm.delta_limit(1.0, -4.0) == pytest.approx(-0.75)
    assert mm.delta(1.0, 1.0, 0.999) == pytest.approx(-3.9800658164688625, rel=1e-8)
    assert mm.scan("paper_area_example", 1.0, 0.0)["verdict"] == "neither"
    assert mm.scan("monomial:2", -1.0, 1.0)["verdict"] == "convex"


def test_univalence_and_examples():
    assert mm.univalence("z+0.5*z^2", "wedge")["status"] == "pass"
    assert mm.univalence("z+2*z^2", "wedge")["status"] == "fail"
    reports = mm.examples()
    assert len(reports) == 18
    assert all(r["status"] == "pass" for r in reports)


def test_means_table_csv():
    text = mm.means_table("identity", 0.0, 1.0, grid=3)
    lines = text.splitlines()
    assert lines[0] == "r,phi_A,phi_L,mean_A,mean_L,err_A,err_L"
    assert len(lines) == 4


def test_errors():
    with pytest.raises(mm.MixedMeansError):
        mm.weighted_mean("z", 0.0, 1.0, 1.5)
    with pytest.raises(ValueError):
        mm.weighted_mean("z", 0.0, 2.0, 0.5)
    with pytest.raises(ValueError):
        mm.parse_function("not a map")
