"""Verification suites shared by ``verify`` and the tests.

Every suite returns CheckReport objects; ``run_all`` bundles them into one
deterministic report.
"""
import logging
import math
from dataclasses import replace
from fractions import Fraction

import numpy as np

from . import settings
from .classify import classify, eigen_equation_check, mgf_identity_check, operator_check
from .families import (
    Angle,
    Charlier,
    Meixner,
    MeixnerPollaczek,
    acceptance_families,
    identity_krawtchouk_meixner,
    identity_mp_meixner,
    limit_transition,
    standard_equation_check,
)
from .limits import EDGES
from .ortho import gram_check, moment_match, moments_from_recurrence
from .recurrence import favard_check
from .report import CheckReport
from .sheffer import ShefferPair, apply_tD, expand, gaussian_lambda_smoke, verify_commutation

logger = logging.getLogger(__name__)

EXPAND_DEGREE = 20
COMMUTATION_DEGREE = 15
SERIES_ORDER = settings.default_order(EXPAND_DEGREE)
MGF_ORDER = 12
EIGEN_DEGREE = 10
MOMENT_COUNT = 8
HANKEL_SIZE = 6
LIMIT_DEGREE = 5
LIMIT_POINTS = (Fraction(0), Fraction(1, 2), Fraction(1))


def gram_degree(fam):
    return 8 if isinstance(fam, MeixnerPollaczek) else 12


def _pair(fam, order):
    gf = fam.generating_function(order)
    return ShefferPair.from_series(gf.f, gf.u)


def gf_recurrence_suite(fam, n_max=EXPAND_DEGREE):
    """expand() of the generating function against the three-term recurrence."""
    from_gf = expand(_pair(fam, n_max), n_max)
    from_rec = fam.recurrence().polynomials(n_max)
    failures = [n for n, (a, b) in enumerate(zip(from_gf, from_rec)) if a != b]
    return CheckReport("gf-recurrence", not failures, failures, {"family": fam.label, "n_max": n_max})


def lowering_suite(fam, n_max=EXPAND_DEGREE):
    """t(D) P_n == n P_(n-1)."""
    pair = _pair(fam, n_max)
    polys = expand(pair, n_max)
    failures = [n for n in range(1, n_max + 1) if apply_tD(pair.t, polys[n]) != polys[n - 1] * n]
    return CheckReport("lowering", not failures, failures, {"family": fam.label, "n_max": n_max})


def commutation_suite(fam, n_max=COMMUTATION_DEGREE):
    report = verify_commutation(_pair(fam, n_max), n_max)
    report.details["family"] = fam.label
    return report


def round_trip_suite(fam, result, order=SERIES_ORDER):
    """classify(recurrence_of(fam)) must give back fam and its closed-form f, u."""
    gf = fam.generating_function(order)
    failures = []
    if result.case_tag != fam.case:
        failures.append("case")
    if result.family != fam:
        failures.append("params")
    if result.scale != 1 or result.shift != 0:
        failures.append("affine")
    if result.pair.f.truncate(order) != gf.f:
        failures.append("f")
    if result.pair.u.truncate(order) != gf.u:
        failures.append("u")
    return CheckReport("round-trip", not failures, failures,
                       {"family": fam.label, "case": result.case_tag, "order": order,
                        "recovered": result.family.label if result.family is not None else None})


def positivity_suite(fam):
    """Favard verdict plus positive Hankel determinants of the recurrence moments."""
    spec = fam.recurrence()
    favard = favard_check(spec)
    failures = [] if favard.passed else ["favard"]
    dets = None
    if spec.is_rational():
        size = HANKEL_SIZE if favard.size is None else min(HANKEL_SIZE, favard.size)
        dets = moments_from_recurrence(spec, 2 * size).hankel_determinants(size)
        failures += [m for m, det in enumerate(dets) if not det > 0]
    return CheckReport("positivity", not failures, failures,
                       {"family": fam.label, "favard": favard.status, "hankel": dets})


def orthogonality_suite(fam, n_max=None):
    return gram_check(fam, gram_degree(fam) if n_max is None else n_max)


def moment_suite(fam, count=MOMENT_COUNT, tol=None):
    return moment_match(fam, count, tol=tol)


def _skipped(name, fam, reason):
    return CheckReport(name, True, [], {"family": fam.label, "skipped": reason})


def family_suites(fam, tol=None):
    """Every per-family check, in a fixed order."""
    logger.info("running suites for %s", fam.label)
    reports = [
        gf_recurrence_suite(fam),
        lowering_suite(fam),
        commutation_suite(fam),
        positivity_suite(fam),
        orthogonality_suite(fam),
        moment_suite(fam, tol=tol),
        standard_equation_check(fam, EIGEN_DEGREE),
    ]
    spec = fam.recurrence()
    if not spec.is_rational():
        reason = "recurrence is not rational"
        reports += [_skipped(name, fam, reason) for name in
                    ("round-trip", "operator-closed-form", "mgf-identity", "eigen-equation")]
        return reports
    result = classify(spec, SERIES_ORDER)
    reports += [
        round_trip_suite(fam, result),
        operator_check(result),
        mgf_identity_check(result, MGF_ORDER),
        eigen_equation_check(result, EIGEN_DEGREE),
    ]
    return reports


def _random_rational(rng, low, high, denominator):
    return Fraction(int(rng.integers(low, high)), int(rng.integers(1, denominator + 1)))


def identity_suites(seed=0, count=20, tol=None):
    """Krawtchouk-Meixner over random rationals; Meixner-Pollaczek-Meixner exact and in doubles."""
    tol = settings.IDENTITY_TOL if tol is None else tol
    rng = np.random.default_rng(seed)
    km_failures = []
    for _ in range(count):
        p = Fraction(int(rng.integers(1, 12)), 12)
        N = int(rng.integers(1, 9))
        x = _random_rational(rng, -20, 21, 6)
        for n in range(N + 1):
            if not identity_krawtchouk_meixner(p, N, n, x).passed:
                km_failures.append([str(p), N, n, str(x)])
    km = CheckReport("krawtchouk-meixner", not km_failures, km_failures, {"triples": count, "seed": seed})

    right = Angle.right()
    exact_failures = []
    for lam in (Fraction(1, 2), Fraction(1), Fraction(3, 2)):
        for x in (Fraction(0), Fraction(1, 2), Fraction(-3, 2), Fraction(2)):
            for n in range(9):
                if not identity_mp_meixner(lam, right, n, x).passed:
                    exact_failures.append([str(lam), n, str(x)])
    exact = CheckReport("mp-meixner-exact", not exact_failures, exact_failures, {"phi": "pi/2"})

    float_failures = []
    worst = 0.0
    draws = min(count, 10)
    for _ in range(draws):
        lam = float(rng.uniform(0.5, 2.0))
        phi = Angle(float(rng.uniform(0.3, math.pi - 0.3)))
        x = float(rng.uniform(-2.0, 2.0))
        for n in range(9):
            report = identity_mp_meixner(lam, phi, n, x, tol)
            worst = max(worst, report.details["error"])
            if not report.passed:
                float_failures.append([lam, phi.radians, n, x])
    numeric = CheckReport("mp-meixner-float", not float_failures, float_failures,
                          {"draws": draws, "seed": seed, "tol": tol, "max_error": worst})
    return [km, exact, numeric]


def limit_suite(n_max=LIMIT_DEGREE, points=LIMIT_POINTS, epsilons=None):
    failures = []
    orders = {}
    for edge in EDGES:
        worst = math.inf
        for n in range(n_max + 1):
            for x in points:
                record = limit_transition(edge, n, x, epsilons)
                worst = min(worst, record.order)
                if not record.passed:
                    failures.append([edge, n, str(x)])
        orders[edge] = worst if math.isfinite(worst) else None
    return CheckReport("limits", not failures, failures, {"n_max": n_max, "min_order": orders})


def negative_controls():
    """Checks that must fail, reported as passing when they do fail where expected."""
    meixner = Meixner(Fraction(3, 2), Fraction(1, 4))
    dropped = moment_match(meixner, 4, weight=meixner.weight_without_power)
    mp = MeixnerPollaczek(Fraction(1), Angle.from_pi_fraction(Fraction(1, 3)))
    printed = moment_match(mp, 4, weight=mp.printed_weight)
    charlier = Charlier(Fraction(1))
    pair = _pair(charlier, 6)
    stale = verify_commutation(replace(pair, t=pair.u), 6)
    return [
        CheckReport("control-meixner-without-power", not dropped.passed and dropped.first_failure == 1,
                    [] if dropped.first_failure == 1 else [dropped.first_failure],
                    {"moment_failures": dropped.failures}),
        CheckReport("control-mp-printed-weight", not printed.passed and printed.first_failure == 1,
                    [] if printed.first_failure == 1 else [printed.first_failure],
                    {"moment_failures": printed.failures}),
        CheckReport("control-stale-lowering-series", not stale.passed, [] if not stale.passed else [0],
                    {"commutation_failures": stale.failures}),
    ]


def run_family(fam, tol=None):
    reports = family_suites(fam, tol)
    return {"family": fam.label, "passed": all(r.passed for r in reports),
            "reports": [r.to_json() for r in reports]}


def run_all(seed=0, count=20, tol=None, with_limits=True):
    """The full acceptance run; identical arguments give an identical report."""
    families = [run_family(fam, tol) for fam in acceptance_families()]
    extra = identity_suites(seed, count, tol) + [gaussian_lambda_smoke()] + negative_controls()
    if with_limits:
        extra.append(limit_suite())
    passed = all(entry["passed"] for entry in families) and all(r.passed for r in extra)
    logger.info("acceptance run %s", "passed" if passed else "FAILED")
    return {"passed": passed, "families": families, "checks": [r.to_json() for r in extra]}
