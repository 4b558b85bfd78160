from dataclasses import replace
from fractions import Fraction

import pytest

from meixner_scheme import series
from meixner_scheme.errors import InsufficientOrderError, SeriesDomainError
from meixner_scheme.families import Hermite
from meixner_scheme.series import TruncatedSeries
from meixner_scheme.sheffer import (
    Poly,
    ShefferPair,
    apply_tD,
    basic_sequence,
    expand,
    f_from_values,
    from_lowering,
    gaussian_lambda_smoke,
    lambda_apply,
    verify_commutation,
)

x = Poly.x()


def test_poly_basics():
    assert (x + 1) ** 2 == Poly((1, 2, 1))
    assert Poly().degree == -1
    assert (x ** 3).derivative() == x * x * 3
    assert (x * x).shift(1) == Poly((1, 2, 1))
    assert (x * x).compose(x - 1) == Poly((1, -2, 1))
    assert (x * x - 1)(Fraction(1, 2)) == Fraction(-3, 4)
    assert Poly((0, 0)) == Poly()


def test_charlier_expansion(charlier_pair):
    polys = expand(charlier_pair, 3)
    assert polys[1] == x - 1
    assert polys[2] == x * x - x * 3 + 1
    assert all(P.is_monic() for P in polys)


def test_hermite_expansion(pair_of):
    polys = expand(pair_of(Hermite(), 6), 3)
    assert polys[2] == x * x - Fraction(1, 2)
    assert polys[3] == x ** 3 - x * Fraction(3, 2)


def test_lowering_identity(laguerre_pair):
    polys = expand(laguerre_pair, 12)
    for n in range(1, 13):
        assert apply_tD(laguerre_pair.t, polys[n]) == polys[n - 1] * n


def test_lambda_sends_basis_to_powers(charlier_pair):
    basis = expand(charlier_pair, 8)
    for n, P in enumerate(basis):
        assert lambda_apply(charlier_pair, P, basis) == Poly.monomial(n)


def test_commutation_and_stale_control(charlier_pair):
    assert verify_commutation(charlier_pair, 10).passed
    stale = replace(charlier_pair, t=charlier_pair.u)
    report = verify_commutation(stale, 10)
    assert not report.passed
    assert report.first_failure is not None


def test_from_lowering_matches_expand(laguerre_pair):
    assert from_lowering(laguerre_pair.t, laguerre_pair.f, 10) == expand(laguerre_pair, 10)


def test_basic_sequence_falling_factorials():
    t = series.exp(TruncatedSeries.variable(6)) - 1
    polys = basic_sequence(t, 3)
    assert polys[2] == x * x - x
    assert polys[3] == x ** 3 - x * x * 3 + x * 2


def test_f_from_values(charlier_pair):
    assert f_from_values(expand(charlier_pair, 8)) == charlier_pair.f.truncate(8)


def test_expand_needs_order(charlier_pair):
    with pytest.raises(InsufficientOrderError):
        expand(charlier_pair, 13)


def test_pair_validation():
    with pytest.raises(SeriesDomainError):
        ShefferPair.from_series(TruncatedSeries((2,), 4), TruncatedSeries.variable(4))
    with pytest.raises(SeriesDomainError):
        ShefferPair.from_series(TruncatedSeries.one(4), TruncatedSeries((0, 2), 4))


def test_gaussian_lambda_smoke():
    assert gaussian_lambda_smoke().passed


def test_lambda_with_positive_mu():
    pair = ShefferPair.from_series(TruncatedSeries.one(8), TruncatedSeries.variable(8), mu=1)
    for n in range(1, 7):
        assert lambda_apply(pair, x ** n) == Poly.monomial(n - 1, Fraction(n))
    assert lambda_apply(pair, Poly.constant(Fraction(5))) == Poly()
