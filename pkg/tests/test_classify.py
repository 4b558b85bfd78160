import math
from dataclasses import replace
from fractions import Fraction

import pytest

from meixner_scheme import series
from meixner_scheme.classify import (
    CHARLIER,
    HERMITE,
    KRAWTCHOUK,
    LAGUERRE,
    MEIXNER,
    MEIXNER_POLLACZEK,
    NOT_ORTHOGONAL,
    RecurrenceSpec,
    classify,
    eigen_equation_check,
    mgf_identity_check,
    operator_check,
    recover_operator,
)
from meixner_scheme.errors import DegenerateRecurrenceError, InsufficientOrderError, MeixnerError
from meixner_scheme.families import Angle, Charlier, Krawtchouk, Laguerre, Meixner, MeixnerPollaczek
from meixner_scheme.scalar import factor_quadratic, sqrt_rational
from meixner_scheme.series import TruncatedSeries
from meixner_scheme.sheffer import expand


def test_hermite_case():
    result = classify(RecurrenceSpec(0, Fraction(-1, 2), 0), order=10)
    assert result.case_tag == HERMITE
    assert result.pair.f == series.exp(TruncatedSeries((0, 0, Fraction(-1, 4)), 10))
    assert result.pair.u == TruncatedSeries.variable(10)


def test_laguerre_case():
    result = classify(RecurrenceSpec(-2, -1, -1, -1), order=10)
    assert result.case_tag == LAGUERRE
    assert result.family == Laguerre(Fraction(0))
    assert (result.roots.alpha, result.roots.beta) == (-1, -1)


def test_charlier_case():
    result = classify(RecurrenceSpec(-1, -2, 0, -2), order=10)
    assert result.case_tag == CHARLIER
    assert result.family == Charlier(Fraction(2))
    assert list(result.pair.f) == [Fraction((-2) ** k, math.factorial(k)) for k in range(11)]
    assert result.pair.u == series.log(TruncatedSeries((1, 1), 10))


def test_meixner_case_with_shift():
    result = classify(RecurrenceSpec(-3, -2, -2), order=10)
    assert result.case_tag == MEIXNER
    assert result.family == Meixner(Fraction(1), Fraction(1, 2))
    assert result.scale == 1
    assert result.shift == 1


def test_meixner_pollaczek_case():
    result = classify(RecurrenceSpec(0, Fraction(-1, 2), Fraction(-1, 4)), order=10)
    assert result.case_tag == MEIXNER_POLLACZEK
    assert result.family == MeixnerPollaczek(Fraction(1), Angle.right())


def test_krawtchouk_case():
    p, N = Fraction(1, 3), 4
    spec = RecurrenceSpec(2 * p - 1, -p * (1 - p) * N, p * (1 - p), -p * N)
    result = classify(spec, order=10)
    assert result.case_tag == KRAWTCHOUK
    assert result.family == Krawtchouk(p, N)
    assert result.shift == 0


def test_krawtchouk_boundary_n_equals_one():
    result = classify(RecurrenceSpec(0, -1, 1), order=6)
    assert result.case_tag == KRAWTCHOUK
    assert result.family == Krawtchouk(Fraction(1, 2), 1)


def test_not_orthogonal_keeps_candidate():
    result = classify(RecurrenceSpec(0, -1, Fraction(2, 3)), order=6)
    assert result.case_tag == NOT_ORTHOGONAL
    assert result.candidate == KRAWTCHOUK
    assert result.family is None
    assert result.to_json()["params"] is None


def test_degenerate_recurrence():
    with pytest.raises(DegenerateRecurrenceError, match="degenerate, not orthogonal"):
        classify(RecurrenceSpec(-1, 0, 0))


def test_round_trip(family):
    result = classify(family.recurrence(), order=42)
    gf = family.generating_function(42)
    assert result.case_tag == family.case
    assert result.family == family
    assert result.pair.f == gf.f
    assert result.pair.u == gf.u


def test_shift_translates_polynomials():
    base = classify(RecurrenceSpec(-1, -1, 0, 0), order=12)
    moved = classify(RecurrenceSpec(-1, -1, 0, 5), order=12)
    assert moved.case_tag == base.case_tag
    assert moved.family == base.family
    for P, Q in zip(expand(base.pair, 6), expand(moved.pair, 6)):
        assert Q == P.shift(5)


def test_expansion_satisfies_recurrence():
    spec = RecurrenceSpec(-3, -2, -2, 1)
    result = classify(spec, order=20)
    assert expand(result.pair, 20) == spec.polynomials(20)


def test_operator_for_double_root():
    form = recover_operator(factor_quadratic(-2, -1), 8)
    assert list(form.series) == [0] + [1] * 8


def test_operator_for_charlier_roots():
    form = recover_operator(factor_quadratic(-1, 0), 8)
    assert form.series == series.exp(TruncatedSeries.variable(8)) - 1


def test_operator_check(family):
    assert operator_check(classify(family.recurrence(), order=42)).passed


def test_eigen_equation_meixner():
    result = classify(Meixner(Fraction(3, 2), Fraction(1, 4)).recurrence(), order=20)
    report = eigen_equation_check(result, 8)
    assert report.passed
    assert report.details["display_residuals"] == {}


def test_eigen_equation_rescaled_hermite():
    result = classify(RecurrenceSpec(0, -1, 0), order=22)
    assert result.scale == sqrt_rational(2)
    assert eigen_equation_check(result, 10).passed


def test_eigen_equation_charlier():
    result = classify(Charlier(Fraction(1)).recurrence(), order=22)
    assert eigen_equation_check(result, 10).passed


def test_mgf_identity_and_tampering():
    result = classify(Charlier(Fraction(2)).recurrence(), order=12)
    assert mgf_identity_check(result, 6).passed
    coeffs = list(result.pair.f.coeffs)
    coeffs[3] += 1
    tampered = replace(result.pair, f=TruncatedSeries(tuple(coeffs), result.pair.f.order))
    report = mgf_identity_check(result, 6, pair=tampered)
    assert not report.passed
    assert report.details["first_difference"] == 3


def test_mgf_identity_every_case(family):
    result = classify(family.recurrence(), order=26)
    assert mgf_identity_check(result, 12).passed


def test_json_shape():
    data = classify(RecurrenceSpec(0, Fraction(-1, 2), 0), order=6).to_json()
    assert data["case"] == HERMITE
    for key in ("alpha", "beta", "params", "f_coeffs", "u_coeffs", "t_coeffs"):
        assert key in data


def test_classified_series_are_exact():
    result = classify(RecurrenceSpec(0, Fraction(-1, 2), 0), order=8)
    for s in (result.pair.f, result.pair.u, result.pair.t):
        assert all(type(c) is Fraction for c in s)
    assert result.pair.f[2] == Fraction(-1, 4)
    u = Charlier(Fraction(1)).generating_function(6).u
    assert all(type(c) is Fraction for c in u)


def test_eigen_equation_needs_series_order():
    result = classify(Charlier(Fraction(1)).recurrence(), order=6)
    with pytest.raises(InsufficientOrderError) as info:
        eigen_equation_check(result, 8)
    assert isinstance(info.value, MeixnerError)
