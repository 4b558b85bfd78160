"""Limit transitions of the Meixner scheme, evaluated in high precision.

Each edge maps a small parameter eps to (scaled source, target) values at a
point x. A record passes when the errors shrink strictly with eps at an
empirical rate of at least first order (or vanish identically).
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np
import pandas as pd

from . import settings
from .families import charlier_c, hermite_h, krawtchouk_k, laguerre_l, meixner_m, meixner_pollaczek_p

logger = logging.getLogger(__name__)

# parameters held fixed along each edge
LIMIT_DEFAULTS = {
    "alpha": Fraction(1, 2),
    "a": Fraction(2),
    "c": Fraction(1, 4),
    "p": Fraction(1, 3),
    "phi_over_pi": Fraction(1, 3),
}


def _mp(value):
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def _real(value):
    return value.real if isinstance(value, mpmath.mpc) else value


def _mp_laguerre(n, x, eps, one):
    # P_n^((alpha+1)/2)(-x/(2 eps); eps) -> L_n^alpha(x)
    alpha = _mp(LIMIT_DEFAULTS["alpha"])
    src = meixner_pollaczek_p(n, (alpha + 1) / 2, mpmath.expj(eps), -x / (2 * eps), one)
    return _real(src), laguerre_l(n, alpha, x, one)


def _meixner_laguerre(n, x, eps, one):
    # M_n(x/eps; alpha+1, 1-eps) -> L_n^alpha(x) / L_n^alpha(0)
    alpha = _mp(LIMIT_DEFAULTS["alpha"])
    src = meixner_m(n, alpha + 1, one - eps, x / eps, one)
    return src, laguerre_l(n, alpha, x, one) / laguerre_l(n, alpha, 0 * one, one)


def _meixner_charlier(n, x, eps, one):
    # M_n(x; 1/eps, a/(a + 1/eps)) -> C_n(x; a)
    a = _mp(LIMIT_DEFAULTS["a"])
    beta = one / eps
    return meixner_m(n, beta, a / (a + beta), x, one), charlier_c(n, a, x, one)


def _krawtchouk_charlier(n, x, eps, one):
    # K_n(x; a/N, N) with N = 1/eps -> C_n(x; a)
    a = _mp(LIMIT_DEFAULTS["a"])
    N = int(mpmath.nint(one / eps))
    return krawtchouk_k(n, a / N, N, x, one), charlier_c(n, a, x, one)


def _laguerre_hermite(n, x, eps, one):
    # (2/alpha)^(n/2) L_n^alpha(sqrt(2 alpha) x + alpha), alpha = eps^-2 -> (-1)^n H_n(x)/n!
    alpha = one / eps ** 2
    src = (2 / alpha) ** (mpmath.mpf(n) / 2) * laguerre_l(n, alpha, mpmath.sqrt(2 * alpha) * x + alpha, one)
    return src, (-1) ** n * hermite_h(n, x) / math.factorial(n)


def _charlier_hermite(n, x, eps, one):
    # (2a)^(n/2) C_n(sqrt(2a) x + a; a), a = eps^-2 -> (-1)^n H_n(x)
    a = one / eps ** 2
    src = (2 * a) ** (mpmath.mpf(n) / 2) * charlier_c(n, a, mpmath.sqrt(2 * a) * x + a, one)
    return src, (-1) ** n * hermite_h(n, x)


def _centered(n, x, l1, k2, monic):
    # sigma^-n P_n(-l1 + sigma x), sigma = sqrt(-2 k2), against monic Hermite H_n(x)/2^n
    sigma = mpmath.sqrt(-2 * k2)
    return _real(monic(-l1 + sigma * x)) / sigma ** n, hermite_h(n, x) / 2 ** n


def _meixner_hermite(n, x, eps, one):
    beta, c = one / eps ** 2, _mp(LIMIT_DEFAULTS["c"])
    norm = mpmath.rf(beta, n) * (c / (c - 1)) ** n

    def monic(y):
        return norm * meixner_m(n, beta, c, y, one)

    return _centered(n, x, -beta * c / (1 - c), -beta * c / (1 - c) ** 2, monic)


def _krawtchouk_hermite(n, x, eps, one):
    p = _mp(LIMIT_DEFAULTS["p"])
    N = int(mpmath.nint(one / eps ** 2))
    norm = math.factorial(n) * math.comb(N, n) * (-p) ** n

    def monic(y):
        return norm * krawtchouk_k(n, p, N, y, one)

    return _centered(n, x, -p * N, -p * (1 - p) * N, monic)


def _mp_hermite(n, x, eps, one):
    lam = one / eps ** 2
    phi = mpmath.pi * _mp(LIMIT_DEFAULTS["phi_over_pi"])
    cot = mpmath.cot(phi)
    norm = math.factorial(n) / (2 * mpmath.sin(phi)) ** n

    def monic(y):
        return norm * meixner_pollaczek_p(n, lam, mpmath.expj(phi), y, one)

    return _centered(n, x, lam * cot, -lam * (1 + cot ** 2) / 2, monic)


EDGES = {
    "mp-laguerre": _mp_laguerre,
    "meixner-laguerre": _meixner_laguerre,
    "meixner-charlier": _meixner_charlier,
    "krawtchouk-charlier": _krawtchouk_charlier,
    "laguerre-hermite": _laguerre_hermite,
    "charlier-hermite": _charlier_hermite,
    "meixner-hermite": _meixner_hermite,
    "krawtchouk-hermite": _krawtchouk_hermite,
    "mp-hermite": _mp_hermite,
}


@dataclass
class LimitRecord:
    edge: str
    n: int
    x: object
    epsilons: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    decreasing: bool = False
    order: float = float("nan")
    passed: bool = False

    def to_frame(self):
        return pd.DataFrame({"eps": self.epsilons, "error": self.errors})

    def to_json(self):
        return {"edge": self.edge, "n": self.n, "x": str(self.x), "epsilons": self.epsilons,
                "errors": self.errors, "decreasing": self.decreasing,
                "order": self.order if math.isfinite(self.order) else None, "passed": self.passed}


def default_epsilons(decades=6):
    return [10.0 ** -k for k in range(1, decades + 1)]


def _fitted_order(epsilons, errors):
    eps = np.log10(np.asarray(epsilons[-settings.LIMIT_FIT_POINTS:]))
    err = np.log10(np.asarray(errors[-settings.LIMIT_FIT_POINTS:]))
    return float(np.polyfit(eps, err, 1)[0])


def limit_transition(edge, n, x, epsilons=None):
    """Errors |scaled source - target| along one edge for a decreasing eps sequence."""
    if edge not in EDGES:
        raise ValueError(f"unknown limit edge {edge!r}; choose from {sorted(EDGES)}")
    epsilons = list(epsilons or default_epsilons())
    run = EDGES[edge]
    errors = []
    # sources carry terms up to eps^(-2n) that cancel down to O(1)
    dps = settings.LIMIT_DPS + max(0, math.ceil(2 * max(n, 1) * math.log10(1 / min(epsilons))))
    with mpmath.workdps(dps):
        one = mpmath.mpf(1)
        xm = _mp(x)
        for eps in epsilons:
            src, tgt = run(n, xm, _mp(eps), one)
            errors.append(float(abs(src - tgt)))
    floor = settings.LIMIT_ZERO_FLOOR
    if all(e < floor for e in errors):
        record = LimitRecord(edge, n, x, epsilons, errors, True, float("inf"), True)
    else:
        decreasing = all(b < a or (a < floor and b < floor) for a, b in zip(errors, errors[1:]))
        tail = errors[-settings.LIMIT_FIT_POINTS:]
        order = float("inf") if any(e < floor for e in tail) else _fitted_order(epsilons, errors)
        passed = decreasing and order >= 1 - settings.LIMIT_ORDER_SLACK
        record = LimitRecord(edge, n, x, epsilons, errors, decreasing, order, passed)
    logger.debug("limit %s n=%d x=%s order=%.3f passed=%s", edge, n, x, record.order, record.passed)
    return record
