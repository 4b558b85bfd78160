import math
from fractions import Fraction

import pytest

from meixner_scheme.limits import EDGES, default_epsilons, limit_transition


def test_default_epsilons():
    assert default_epsilons(3) == [0.1, 0.01, 0.001]


def test_charlier_hermite_is_first_order():
    # 2a C_2(sqrt(2a) x + a; a) = 4x^2 - 2 - 2 sqrt(2) x eps
    record = limit_transition("charlier-hermite", 2, Fraction(1, 2))
    assert record.passed
    assert record.decreasing
    assert record.order == pytest.approx(1.0, abs=1e-6)
    for eps, err in zip(record.epsilons, record.errors):
        assert err == pytest.approx(math.sqrt(2) * eps, rel=1e-9)


def test_laguerre_hermite_degree_one():
    record = limit_transition("laguerre-hermite", 1, Fraction(1))
    assert record.passed
    assert record.errors[0] == pytest.approx(math.sqrt(2) * 0.1, rel=1e-9)


def test_identical_limit_has_infinite_order():
    # K_1(x; a/N, N) = 1 - x/a = C_1(x; a) for every N
    record = limit_transition("krawtchouk-charlier", 1, Fraction(1, 2))
    assert record.passed
    assert record.order == math.inf
    assert record.to_json()["order"] is None


def test_degree_zero_passes_everywhere():
    for edge in EDGES:
        assert limit_transition(edge, 0, Fraction(1, 2), default_epsilons(3)).passed


def test_unknown_edge():
    with pytest.raises(ValueError, match="unknown limit edge"):
        limit_transition("hermite-legendre", 1, Fraction(0))


def test_record_frame():
    frame = limit_transition("charlier-hermite", 2, Fraction(1, 2), default_epsilons(4)).to_frame()
    assert list(frame.columns) == ["eps", "error"]
    assert len(frame) == 4
    assert frame["error"].is_monotonic_decreasing


def test_exact_limit_stays_below_floor():
    # terms of size eps^-8 cancel to zero at x = 0
    record = limit_transition("mp-hermite", 4, Fraction(0))
    assert record.passed
    assert max(record.errors) < 1e-40
