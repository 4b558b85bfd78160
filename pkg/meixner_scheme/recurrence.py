"""Monic three-term recurrences with linear/quadratic coefficients.

    P_(n+1)(x) = (x + l_(n+1)) P_n(x) + k_(n+1) P_(n-1)(x)
    l_(n+1) = l1 + n*lambda,   k_(n+1) = n*(k2 + (n-1)*kappa)
"""
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .scalar import is_rational, sign, to_json
from .sheffer import Poly

logger = logging.getLogger(__name__)

INFINITE = "infinite-positive-definite"
FINITE = "finite"
NOT_ORTHOGONAL = "not-orthogonal"


def _scalar(value):
    return Fraction(value) if is_rational(value) else value


@dataclass(frozen=True)
class RecurrenceSpec:
    lambda_rec: object
    k2: object
    kappa: object
    l1: object = Fraction(0)

    def __post_init__(self):
        for name in ("lambda_rec", "k2", "kappa", "l1"):
            object.__setattr__(self, name, _scalar(getattr(self, name)))

    def l(self, m):
        """l_m for m >= 1."""
        return self.l1 + (m - 1) * self.lambda_rec

    def k(self, m):
        """k_m for m >= 1 (k_1 = 0)."""
        return (m - 1) * (self.k2 + (m - 2) * self.kappa)

    def is_rational(self):
        return all(is_rational(v) for v in (self.lambda_rec, self.k2, self.kappa, self.l1))

    def shifted(self, l1):
        return replace(self, l1=_scalar(l1))

    def polynomials(self, n_max):
        """P_0..P_n_max generated by the recurrence."""
        x = Poly.x()
        polys = [Poly.constant(Fraction(1))]
        if n_max >= 1:
            polys.append(x + self.l(1))
        for n in range(1, n_max):
            polys.append((x + self.l(n + 1)) * polys[n] + polys[n - 1] * self.k(n + 1))
        return polys

    def to_json(self):
        return {"lambda": to_json(self.lambda_rec), "k2": to_json(self.k2),
                "kappa": to_json(self.kappa), "l1": to_json(self.l1)}


@dataclass
class FavardReport:
    status: str
    horizon: int
    signs: list = field(default_factory=list)
    # N for a finite functional: k_(n+1) first vanishes at n = N + 1
    size: int = None

    @property
    def passed(self):
        return self.status != NOT_ORTHOGONAL

    @property
    def first_failure(self):
        """First n whose k_(n+1) breaks negativity before any termination."""
        for n, s in enumerate(self.signs, start=1):
            if s >= 0 and (self.size is None or n <= self.size):
                return n
        return None

    def positive_through(self, n):
        """Whether k_2..k_(n+1) are all negative."""
        if self.status == INFINITE:
            return True
        if self.status == FINITE:
            return n <= self.size
        return False

    def to_json(self):
        return {"status": self.status, "horizon": self.horizon, "size": self.size,
                "signs": list(self.signs), "passed": self.passed}


def favard_check(spec, horizon=50):
    """Sign pattern of k_(n+1) for 1 <= n <= horizon, plus the exact verdict.

    k_(n+1)/n is linear in n, so the verdict follows from k2 and kappa alone:
    kappa <= 0 with k2 < 0 never vanishes; kappa > 0 needs -k2/kappa to be a
    positive integer N, the last nonvanishing index.
    """
    signs = [sign(spec.k(n + 1)) for n in range(1, horizon + 1)]
    size = None
    if sign(spec.k2) >= 0:
        status = NOT_ORTHOGONAL
    elif sign(spec.kappa) <= 0:
        status = INFINITE
    else:
        ratio = -spec.k2 / spec.kappa
        if is_rational(ratio) and Fraction(ratio).denominator == 1:
            status, size = FINITE, int(ratio)
        else:
            status = NOT_ORTHOGONAL
    logger.debug("favard verdict %s (size %s)", status, size)
    return FavardReport(status, horizon, signs, size)
