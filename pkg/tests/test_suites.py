import json

import pytest

from src.config import Config
from src.errors import UnknownSuiteError
from src.evaluation.suites import SUITES, run_suite, run_suites

SMALL = 3


def test_registry_matches_config():
    assert tuple(sorted(SUITES)) == tuple(sorted(Config.SUITES))


@pytest.mark.parametrize("name", Config.SUITES)
def test_suite_passes(name):
    report = run_suite(name, seed=0, cases=SMALL)
    failing = [p.name for p in report.properties if not p.passed]
    assert failing == []
    assert report.passed
    assert report.cases == SMALL


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("curvature", seed=0)


def test_same_seed_same_report():
    first = run_suite("geodesic", seed=7, cases=SMALL)
    second = run_suite("geodesic", seed=7, cases=SMALL)
    assert first.to_json() == second.to_json()


def test_report_json_shape():
    payload = json.loads(run_suite("algebra", seed=1, cases=SMALL).to_json())
    assert set(payload) == {"suite", "seed", "cases", "properties"}
    assert {"name", "max_residual", "tol", "pass"} <= set(payload["properties"][0])


def test_algebra_is_exact():
    report = run_suite("algebra", seed=2, cases=SMALL)
    assert all(p.max_residual == 0 for p in report.properties)


def test_control_override_forces_failure():
    report = run_suite("mirror", seed=0, cases=SMALL, tol_overrides={"affine_hyperplane_control": 1e6})
    (control,) = [p for p in report.properties if p.name == "affine_hyperplane_control"]
    assert not control.passed
    assert control.counterexample
    assert not report.passed


def test_table_override_applies_to_every_property_using_it():
    report = run_suite("geodesic", seed=0, cases=SMALL, tol_overrides={"geodesic": 0.5})
    tolerances = {p.name: p.tol for p in report.properties}
    assert tolerances["closed_form"] == 0.5
    assert tolerances["log_positive"] == 0.0


def test_run_suites_sorted_and_deduplicated():
    reports = run_suites(["mirror", "algebra", "mirror"], seed=0, workers=2, cases=SMALL)
    assert [r.suite for r in reports] == ["algebra", "mirror"]


def test_run_suites_rejects_unknown():
    with pytest.raises(UnknownSuiteError):
        run_suites(["algebra", "nope"], seed=0)


def test_causal_suite_rejects_skewed_cones():
    report = run_suite("causal", seed=0, cases=SMALL)
    (skewed,) = [p for p in report.properties if p.name == "skewed_cone_rejected"]
    assert skewed.passed
    assert skewed.max_residual == 1.0
