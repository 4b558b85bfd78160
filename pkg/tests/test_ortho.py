import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from meixner_scheme.errors import GammaPoleError, PositivityError, TruncationError
from meixner_scheme.families import Charlier, Hermite, Krawtchouk, Laguerre, Meixner
from meixner_scheme.ortho import (
    discrete_sums,
    gram_check,
    log_gamma_complex,
    moment_match,
    moments_from_recurrence,
    quadrature_from_jacobi,
)
from meixner_scheme.recurrence import RecurrenceSpec


def test_hermite_moments():
    moments = moments_from_recurrence(Hermite().recurrence(), 6).moments
    assert moments == (1, 0, Fraction(1, 2), 0, Fraction(3, 4), 0, Fraction(15, 8))


def test_poisson_moments():
    moments = moments_from_recurrence(Charlier(Fraction(2)).recurrence(), 3).moments
    assert moments == (1, 2, 6, 22)


def test_hankel_determinants_positive():
    functional = moments_from_recurrence(Charlier(Fraction(2)).recurrence(), 10)
    assert all(det > 0 for det in functional.hankel_determinants())


def test_moments_refuse_non_positive_recurrence():
    with pytest.raises(PositivityError) as info:
        moments_from_recurrence(RecurrenceSpec(0, 1, 0), 4)
    assert info.value.index == 1


def test_gauss_rule_from_jacobi_matrix():
    nodes, weights = quadrature_from_jacobi(Hermite().recurrence(), 10)
    assert weights.sum() == pytest.approx(1.0)
    assert np.dot(weights, nodes ** 2) == pytest.approx(0.5)
    assert np.dot(weights, nodes ** 4) == pytest.approx(0.75)


def test_log_gamma():
    assert log_gamma_complex(5).real == pytest.approx(math.log(24))
    z = complex(1.5, 2.0)
    assert log_gamma_complex(z) == pytest.approx(complex(mpmath.loggamma(z)))
    with pytest.raises(GammaPoleError):
        log_gamma_complex(-2)


def test_gram(family):
    report = gram_check(family, 8 if family.tag == "MeixnerPollaczek" else 12)
    assert report.passed, report.details


def test_krawtchouk_gram_is_exact():
    report = gram_check(Krawtchouk(Fraction(1, 3), 6), 6)
    assert report.details["method"] == "exact-finite-sum"
    assert report.passed


def test_moment_match(family):
    assert moment_match(family, 6).passed


def test_meixner_without_power_fails_at_first_moment():
    fam = Meixner(Fraction(3, 2), Fraction(1, 4))
    report = moment_match(fam, 4, weight=fam.weight_without_power)
    assert not report.passed
    assert report.first_failure == 1


def test_discrete_sum_without_decay_raises():
    with pytest.raises(TruncationError):
        discrete_sums(lambda x: Fraction(1), [lambda x: Fraction(1)], ratio_sup=lambda x: 1.0)


def test_laguerre_two_point_rule():
    spec = Laguerre(Fraction(0)).recurrence()
    nodes, weights = quadrature_from_jacobi(spec, 2)
    assert sorted(nodes) == pytest.approx([2 - math.sqrt(2), 2 + math.sqrt(2)])
    mu3 = moments_from_recurrence(spec, 3).moments[3]
    assert mu3 == 6
    assert np.dot(weights, nodes ** 3) == pytest.approx(float(mu3))


def test_moment_match_reports_weight_moments():
    report = moment_match(Charlier(Fraction(2)), 3)
    assert report.details["weight"]["provenance"] == "from-weight"
    assert len(report.details["weight"]["moments"]) == 4
    assert Krawtchouk(Fraction(1, 3), 6).weight_spec.kind == "discrete"
    assert Hermite().weight_spec.support == "(-inf, inf)"
