from fractions import Fraction

import pytest

from meixner_scheme.families import Charlier, Laguerre, acceptance_families
from meixner_scheme.sheffer import ShefferPair


def _pair(fam, order):
    gf = fam.generating_function(order)
    return ShefferPair.from_series(gf.f, gf.u)


@pytest.fixture(params=acceptance_families(), ids=lambda fam: fam.label)
def family(request):
    return request.param


@pytest.fixture
def charlier_pair():
    return _pair(Charlier(Fraction(1)), 12)


@pytest.fixture
def laguerre_pair():
    return _pair(Laguerre(Fraction(1, 2)), 12)


@pytest.fixture
def pair_of():
    return _pair
