from fractions import Fraction

from meixner_scheme.recurrence import FINITE, INFINITE, NOT_ORTHOGONAL, RecurrenceSpec, favard_check
from meixner_scheme.sheffer import Poly

x = Poly.x()


def test_coefficients():
    spec = RecurrenceSpec(-1, -2, 0, -2)
    assert spec.l(1) == -2
    assert spec.l(4) == -5
    assert spec.k(1) == 0
    assert [spec.k(n + 1) for n in range(1, 5)] == [-2, -4, -6, -8]


def test_polynomials():
    polys = RecurrenceSpec(-1, -1, 0, -1).polynomials(2)
    assert polys[0] == 1
    assert polys[1] == x - 1
    assert polys[2] == x * x - x * 3 + 1


def test_charlier_is_infinite():
    report = favard_check(RecurrenceSpec(-1, -2, 0, -2), horizon=50)
    assert report.status == INFINITE
    assert report.signs == [-1] * 50
    assert report.passed
    assert report.first_failure is None


def test_krawtchouk_terminates():
    p, N = Fraction(1, 3), 4
    spec = RecurrenceSpec(2 * p - 1, -p * (1 - p) * N, p * (1 - p), -p * N)
    report = favard_check(spec, horizon=10)
    assert report.status == FINITE
    assert report.size == 4
    assert report.signs[:5] == [-1, -1, -1, -1, 0]
    assert report.first_failure is None
    assert report.positive_through(4)
    assert not report.positive_through(5)


def test_kappa_positive_without_termination():
    report = favard_check(RecurrenceSpec(0, -1, Fraction(2, 3)))
    assert report.status == NOT_ORTHOGONAL
    assert report.first_failure == 3


def test_positive_k2_is_not_orthogonal():
    report = favard_check(RecurrenceSpec(0, 1, 0))
    assert not report.passed
    assert report.first_failure == 1


def test_shifted_and_json():
    spec = RecurrenceSpec(0, Fraction(-1, 2), 0).shifted(3)
    assert spec.l1 == 3
    assert spec.to_json() == {"lambda": "0", "k2": "-1/2", "kappa": "0", "l1": "3"}
