import math

import pytest

import hycap


def test_closed_form_ring():
    r, R = 0.5, 2.0
    expected = 4 * math.pi / (1 / math.tanh(r) - 1 / math.tanh(R))
    assert hycap.ring_capacity(2, 2, r, R) == pytest.approx(expected, rel=1e-10)


def test_ball_and_kappa():
    r = 1.0
    assert hycap.ball_capacity(2, 2, r) == pytest.approx(4 * math.pi * math.sinh(r) * math.exp(r), rel=1e-10)
    kappa = hycap.kappa(2, 2, r)
    assert kappa == pytest.approx((1 / math.tanh(r) - 1) / (4 * math.pi), rel=1e-10)


def test_radii_round_trip():
    volume = hycap.ball_volume(2, 0.8)
    assert hycap.rvol(2, volume) == pytest.approx(0.8, rel=1e-12)
    assert hycap.rcap(3, 2, hycap.ball_capacity(3, 2, 0.5)) == pytest.approx(0.5, rel=1e-8)
    assert math.log(hycap.relative_volume_ball(2, 1.0)) / 2 == pytest.approx(1.0)


def test_point_capacity():
    assert hycap.point_capacity(1, 3) == pytest.approx(0.45694658104446362, rel=1e-8)
    assert hycap.point_capacity(2, 2) == 0.0


def test_bounds():
    n, p, r, R = 2, 2.0, 0.5, 2.0
    lower = hycap.mazya_lower(n, p, hycap.ball_volume(n, r), hycap.ball_volume(n, R))
    assert lower == pytest.approx(hycap.ring_capacity(n, p, r, R), rel=1e-8)
    area = hycap.sphere_area(n, 1.0)
    P = [hycap.af_lower_bound(n, k, area) for k in (1, 2)]
    assert hycap.polya_upper(n, p, area, P) == pytest.approx(hycap.ball_capacity(n, p, 1.0), rel=1e-8)
    assert hycap.steiner_area(n, area, P, 0.5) == pytest.approx(hycap.sphere_area(n, 1.5), rel=1e-10)
    r_of_d, linear, excess = hycap.diameter_bound(30.0)
    assert abs(r_of_d - 15 - math.log(2)) < 1e-6
    assert r_of_d < linear


def test_certifiers_pass():
    for verdicts in (
        hycap.certify_t21(2, 2, 0.5, 2),
        hycap.certify_t31(1, 3, 0.5, 2),
        hycap.certify_t32([1, 2, 5]),
        hycap.certify_t41(3, 2, 1),
        hycap.certify_t51_ball(2, 2, 1),
    ):
        assert verdicts
        assert all(v["pass"] for v in verdicts if not v["informational"])


def test_errors_are_raised():
    with pytest.raises(hycap.Error):
        hycap.ring_capacity(2, 2, 2.0, 1.0)
    with pytest.raises(ValueError):
        hycap.ball_capacity(0, 2, 1.0)


def test_cli_round_trip():
    code, report = hycap.run_json("compute", "ring", "--n", 2, "--p", 2, "--r", 0.5, "--R", 2)
    assert code == 0
    assert report["command"] == "compute ring"
    assert report["results"]["capacity"] == pytest.approx(11.153860321247921, rel=1e-12)
    code, out, err = hycap.run_command(["certify", "t41", "--n", "2", "--p", "2", "--r", "1", "--tol", "1e-16"])
    assert code == 3
    assert out
