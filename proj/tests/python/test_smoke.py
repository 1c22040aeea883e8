import json

import pytest

import koszulci


def test_ci_check_routes():
    ci = koszulci.ci_check(["x", "y"], ["x^2", "y^2"])
    assert ci["verdict"] == "CI"
    assert ci["agreement"]
    non = koszulci.ci_check(["x", "y"], ["x^2", "x*y"])
    assert non["verdict"] == "not CI"
    assert non["agreement"]


def test_ext_kk_generators():
    r = koszulci.ext_kk(["x", "y"], ["x^2", "y^2"], N=7)
    assert r["resolution"]["generator_degrees"] == [0, 1, 1, 2]
    assert r["closed_form"]["hilbert"] == r["resolution"]["hilbert"]


def test_c_tilde_variety():
    r = koszulci.c_tilde_variety(["x", "y"], ["x^2", "y^2"], g=["chi1"])
    assert r["cones"][0]["ideal"] == "(chi1)"


def test_proxy_witness_verifies():
    r = koszulci.verify_witness(["x"], ["x^2"])
    assert r["ok"]
    assert all(r["faults_detected"].values())


def test_deterministic_reports():
    text = koszulci.job_text(["x", "y"], ["x^2", "x*y"], N=8)
    assert koszulci._core.run("support-variety", text) == koszulci._core.run("support-variety", text)
    report = koszulci.run("support-variety", text)
    assert list(report) == sorted(report)
    assert report["provenance"]["N"] == 8
    assert json.loads(json.dumps(report)) == report


def test_canonical_job_round_trip():
    text = koszulci.job_text(["y", "x"], ["x*y + 2*y^2"], matrix=[["x", "y"]])
    canon = koszulci.canonical_job(text)
    assert koszulci.canonical_job(canon) == canon


def test_errors_carry_codes():
    with pytest.raises(koszulci.KciError) as err:
        koszulci.ci_check(["x", "y"], ["x^2", "z*y"])
    assert err.value.code == "UnknownVariable"
    assert koszulci.exit_status(err.value.code) == 2
    with pytest.raises(koszulci.KciError) as err:
        koszulci.proxy_witness(["x", "y"], ["x^2", "x*y"])
    assert err.value.code == "NotCertifiedCI"
