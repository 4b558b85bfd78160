from fractions import Fraction

import pytest

from meixner_scheme.errors import FieldMismatchError
from meixner_scheme.scalar import (
    I,
    Angle,
    QuadraticNumber,
    RootTag,
    factor_quadratic,
    gaussian,
    parse_rational,
    pochhammer,
    sign,
    sqrt_rational,
    to_json,
)


def test_sqrt_rational_exact_and_surd():
    assert sqrt_rational(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_rational(8) == QuadraticNumber(0, 2, 2)
    assert sqrt_rational(Fraction(1, 2)) == QuadraticNumber(0, Fraction(1, 2), 2)
    assert sqrt_rational(-1) == I


def test_surd_collapses_to_fraction():
    root2 = sqrt_rational(2)
    product = root2 * root2
    assert product == 2
    assert isinstance(product, Fraction)
    assert (root2 + 1) - root2 == 1


def test_mixed_radicands_raise():
    with pytest.raises(FieldMismatchError):
        sqrt_rational(2) + sqrt_rational(3)


def test_exact_sign_and_order():
    assert sign(QuadraticNumber(1, -1, 2)) == -1
    assert sign(QuadraticNumber(3, -2, 2)) == 1
    assert Fraction(7, 5) < sqrt_rational(2) < Fraction(3, 2)


def test_gaussian_arithmetic():
    assert gaussian(1, 1) * gaussian(1, -1) == 2
    assert 1 / I == -I
    assert I * I == -1


def test_pochhammer():
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(Fraction(3), 0) == 1


@pytest.mark.parametrize("lam, kappa, tag", [
    (0, 0, RootTag.BOTH_ZERO),
    (-1, 0, RootTag.ONE_ZERO),
    (-2, -1, RootTag.EQUAL_NONZERO),
    (-3, -2, RootTag.DISTINCT_REAL),
    (0, Fraction(-1, 4), RootTag.COMPLEX_CONJUGATE),
    (Fraction(-1, 3), Fraction(2, 9), RootTag.DISTINCT_REAL),
    (1, 1, RootTag.DISTINCT_REAL),
])
def test_factor_quadratic_recovers_coefficients(lam, kappa, tag):
    roots = factor_quadratic(lam, kappa)
    assert roots.tag is tag
    assert roots.coefficients() == (lam, kappa)


def test_distinct_roots_ordering():
    roots = factor_quadratic(-3, -2)
    assert (roots.alpha, roots.beta) == (-1, -2)
    complex_roots = factor_quadratic(0, Fraction(-1, 4))
    assert complex_roots.alpha == QuadraticNumber(0, Fraction(1, 2), -1)


def test_angle_exact_values():
    assert Angle.from_pi_fraction(Fraction(1, 2)) == Angle.right()
    assert Angle.from_pi_fraction(Fraction(1, 4)).cot == 1
    assert Angle.from_pi_fraction(Fraction(1, 3)).cot == QuadraticNumber(0, Fraction(1, 3), 3)
    phi = Angle.from_cot(Fraction(3, 4))
    assert phi.sin() == Fraction(4, 5)
    assert phi.cos() == Fraction(3, 5)
    assert phi.unit() == gaussian(Fraction(3, 5), Fraction(4, 5))
    assert Angle.from_pi_fraction(Fraction(1, 4)).unit() is None


def test_angle_rejects_out_of_range():
    with pytest.raises(ValueError):
        Angle.from_pi_fraction(Fraction(3, 2))


def test_parse_rational():
    assert parse_rational(" -3/4 ") == Fraction(-3, 4)
    with pytest.raises(ValueError, match="malformed rational"):
        parse_rational("x")


def test_to_json():
    assert to_json(Fraction(3, 4)) == "3/4"
    assert to_json(I) == {"re": "0", "im": "1"}
    assert to_json(sqrt_rational(2)) == {"rational": "0", "coefficient": "1", "radicand": "2"}
