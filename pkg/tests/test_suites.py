import json
from fractions import Fraction

from meixner_scheme import suites
from meixner_scheme.families import Krawtchouk, MeixnerPollaczek, parse_family


def test_family_suites_pass(family):
    failed = [r.name for r in suites.family_suites(family) if not r.passed]
    assert failed == []


def test_irrational_angle_skips_classification():
    fam = parse_family("mp:lambda=1,phi=1/3")
    assert isinstance(fam, MeixnerPollaczek)
    reports = {r.name: r for r in suites.family_suites(fam)}
    assert reports["round-trip"].details["skipped"]
    assert reports["gf-recurrence"].passed
    assert reports["gram"].passed


def test_identities_are_reproducible():
    first = [r.to_json() for r in suites.identity_suites(seed=3, count=6)]
    second = [r.to_json() for r in suites.identity_suites(seed=3, count=6)]
    assert json.dumps(first) == json.dumps(second)
    assert all(entry["passed"] for entry in first)


def test_negative_controls_trip():
    assert all(r.passed for r in suites.negative_controls())


def test_run_family_report():
    report = suites.run_family(Krawtchouk(Fraction(1, 2), 4))
    assert report["passed"]
    assert report["family"] == "krawtchouk:p=1/2,N=4"


def test_limit_suite_all_edges():
    report = suites.limit_suite()
    assert report.passed, report.failures
    assert set(report.details["min_order"]) == set(suites.EDGES)
