"""Sheffer pairs: expansion into monic sequences, the lowering operator t(D)
and the operator Lambda with D Lambda = Lambda t(D).
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InsufficientOrderError, SeriesDomainError
from .report import CheckReport
from .scalar import to_json
from .series import TruncatedSeries, exp, revert

logger = logging.getLogger(__name__)


def _strip(coeffs):
    coeffs = [Fraction(c) if type(c) is int else c for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Poly:
    """Polynomial in x, coefficients listed from the constant term up."""

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def x(cls):
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def monomial(cls, n, coeff=Fraction(1)):
        return cls((Fraction(0),) * n + (coeff,))

    @property
    def degree(self):
        # the zero polynomial has degree -1
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self):
        return self.leading == 1

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Poly(tuple(c / other for c in self.coeffs))

    def __pow__(self, exponent):
        result = Poly.constant(Fraction(1))
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self == Poly.constant(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def derivative(self):
        return Poly(tuple(k * self.coeffs[k] for k in range(1, len(self.coeffs))))

    def antiderivative(self, constant=0):
        return Poly((constant,) + tuple(c * Fraction(1, k + 1) for k, c in enumerate(self.coeffs)))

    def compose(self, inner):
        """P(inner(x)) for a polynomial or scalar inner."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, h):
        """P(x + h)."""
        return self.compose(Poly.x() + h)

    def map(self, fn):
        return Poly(tuple(fn(c) for c in self.coeffs))

    def to_json(self):
        return [to_json(c) for c in self.coeffs]

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


@dataclass(frozen=True)
class ShefferPair:
    """(f, u) with the cached inverse series t of u and the order mu of Lambda.

    Build pairs with ``from_series``; the plain constructor trusts the cached t.
    """

    f: TruncatedSeries
    u: TruncatedSeries
    t: TruncatedSeries
    mu: int = 0

    @classmethod
    def from_series(cls, f, u, mu=0):
        if f[0] != 1:
            raise SeriesDomainError("f must have constant term 1")
        if u[0] != 0 or u[1] != 1:
            raise SeriesDomainError("u must start s + ...")
        if mu < 0:
            raise ValueError("mu must be nonnegative")
        return cls(f, u, revert(u), mu)

    @property
    def order(self):
        return min(self.f.order, self.u.order, self.t.order)

    def to_json(self):
        return {"f": self.f.to_json(), "u": self.u.to_json(), "t": self.t.to_json(), "mu": self.mu}


def expand(pair, n_max):
    """Monic P_0..P_n_max from f(s) e^{x u(s)} = sum P_n(x) s^n / n!."""
    if pair.order < n_max:
        raise InsufficientOrderError(
            f"series known through order {pair.order}, degree {n_max} requested")
    order = n_max
    f = pair.f.truncate(order)
    u = pair.u.truncate(order)
    columns = [f]
    for _ in range(n_max):
        columns.append(columns[-1] * u)
    polys = []
    for n in range(n_max + 1):
        nfact = math.factorial(n)
        polys.append(Poly(tuple(
            columns[j][n] * Fraction(nfact, math.factorial(j)) for j in range(n + 1))))
    return polys


def apply_operator(series, P):
    """sum_k series_k D^k P."""
    if P.degree > series.order:
        raise InsufficientOrderError(
            f"operator known through order {series.order}, polynomial of degree {P.degree}")
    out = Poly()
    current = P
    for k in range(P.degree + 1):
        if series[k] != 0:
            out = out + current * series[k]
        current = current.derivative()
    return out


def apply_tD(t, P):
    return apply_operator(t, P)


def decompose(P, basis):
    """Coefficients of P in a monic triangular basis P_0, P_1, ..."""
    if P.degree >= len(basis):
        raise InsufficientOrderError(f"basis too short for degree {P.degree}")
    remainder = P
    coords = [Fraction(0)] * (P.degree + 1)
    for n in range(P.degree, -1, -1):
        c = remainder.coeff(n)
        coords[n] = c
        if c != 0:
            remainder = remainder - basis[n] * c
    return coords


def lambda_apply(pair, P, basis=None):
    """Lambda P, using Lambda P_n = C(n, mu) x^(n - mu) (zero below degree mu)."""
    if P.degree < 0:
        return Poly()
    if basis is None:
        basis = expand(pair, P.degree)
    out = Poly()
    for n, c in enumerate(decompose(P, basis)):
        if c != 0 and n >= pair.mu:
            out = out + Poly.monomial(n - pair.mu, c * math.comb(n, pair.mu))
    return out


def verify_commutation(pair, n_max):
    """Check D(Lambda P_n) == Lambda(t(D) P_n) for n <= n_max."""
    basis = expand(pair, n_max)
    failures = []
    for n, P in enumerate(basis):
        lhs = lambda_apply(pair, P, basis).derivative()
        rhs = lambda_apply(pair, apply_tD(pair.t, P), basis)
        if lhs != rhs:
            logger.debug("commutation fails at degree %d", n)
            failures.append(n)
    return CheckReport("commutation", not failures, failures, {"n_max": n_max})


def f_from_values(polys):
    """f(s) = sum P_n(0) s^n / n!."""
    return TruncatedSeries(
        tuple(P(Fraction(0)) * Fraction(1, math.factorial(n)) for n, P in enumerate(polys)),
        len(polys) - 1)


def from_lowering(t, f, n_max):
    """The monic sequence with t(D) P_n = n P_(n-1) and P_n(0) = n! f_n.

    Writing t(D) = D h(D), each P_n is the antiderivative of h(D)^(-1) n P_(n-1).
    """
    if t[0] != 0 or t[1] == 0:
        raise SeriesDomainError("t must start with a nonzero linear term")
    if min(t.order, f.order) < n_max:
        raise InsufficientOrderError(f"series too short for degree {n_max}")
    h_inverse = TruncatedSeries(t.coeffs[1:], t.order - 1).reciprocal()
    polys = [Poly.constant(f[0])]
    for n in range(1, n_max + 1):
        lowered = apply_operator(h_inverse, polys[-1] * n)
        polys.append(lowered.antiderivative(f[n] * math.factorial(n)))
    return polys


def basic_sequence(t, n_max):
    """P_0 = 1, P_n(0) = 0 and t(D) P_n = n P_(n-1)."""
    if t[0] != 0 or t[1] != 1:
        raise SeriesDomainError("t must start s + ...")
    pair = ShefferPair.from_series(TruncatedSeries.one(t.order), revert(t))
    return expand(pair, n_max)


def gaussian_pair(order):
    """f = exp(-t^2/2), u = t: Lambda is averaging against the standard normal law."""
    half_square = TruncatedSeries((0, 0, Fraction(-1, 2)), order)
    return ShefferPair.from_series(exp(half_square), TruncatedSeries.variable(order))


def gaussian_lambda_smoke(n_max=6, points=(-1.5, 0.0, 0.5, 2.0), nodes=40, tol=1e-9):
    """Lambda P(x) = E[P(x + Y)], Y ~ N(0, 1), must send P_n to x^n."""
    pair = gaussian_pair(n_max)
    y, w = np.polynomial.hermite_e.hermegauss(nodes)
    w = w / np.sqrt(2 * np.pi)
    failures = []
    for n, P in enumerate(expand(pair, n_max)):
        coeffs = [float(c) for c in P.coeffs]
        for x in points:
            value = float(np.dot(w, np.polynomial.polynomial.polyval(x + y, coeffs)))
            if abs(value - x ** n) > tol * max(1.0, abs(x) ** n):
                failures.append((n, x))
    return CheckReport("gaussian-lambda", not failures, failures, {"nodes": nodes})
