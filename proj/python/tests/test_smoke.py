import math

import pytest

import wandering


def test_reduce_default_point():
    r = wandering.reduce()
    assert r["det_n1"] == pytest.approx(1.6207616e-56, rel=1e-7)
    assert r["E"][0] == pytest.approx(-16.37478, rel=1e-6)
    assert r["G"][2] == pytest.approx(5.4695405e15, rel=1e-7)


def test_singular_alpha_raises():
    with pytest.raises(ValueError):
        wandering.reduce(alpha="0")


def test_b1_is_scale_free():
    a = wandering.objectives(["1", "1", "4", "6"])
    b = wandering.objectives(["3", "3", "12", "18"])
    assert a["B1_exact"] == b["B1_exact"]
    assert a["B2"] == pytest.approx(0.0279255, rel=1e-5)


def test_pipeline_certificate_round_trip():
    out = wandering.pipeline()
    assert out["exit_code"] == 0
    assert out["verdict"] == "pass"
    assert out["c"] < 1
    assert out["register"] == "1"
    assert wandering.recheck(out["certificate"]) == "pass"


def test_pipeline_reports_nothing_found():
    out = wandering.pipeline(alpha="-1/2")
    assert not out["found"]
    assert out["exit_code"] == 2
    assert out["certificate"] is None


def test_tampered_certificate_fails():
    cert = wandering.pipeline(d=["1", "1", "4", "6"])["certificate"]
    assert wandering.recheck(cert) == "pass"
    cert["coefficients"]["a"]["2"] = "3"
    assert wandering.recheck(cert) == "fail"


def test_reproduce_tables_are_csv():
    for table in (1, 2, 3, 4, 5):
        text = wandering.reproduce(table)
        assert text.count("\n") >= 5
        assert "," in text.splitlines()[0]


def test_asymptotics():
    assert wandering.a_factor(10) < 1
    assert wandering.a_factor(10**6) == pytest.approx(0.5, abs=1e-4)
    assert wandering.sigma_threshold(10, 0.05) == pytest.approx(292.159, rel=1e-5)
    assert wandering.objective_bound(10, 530, 0.05) < 1
    assert wandering.minimal_beta(12)["beta"] == 112
    assert math.isfinite(wandering.objective_bound(17, 88, 0.97))
