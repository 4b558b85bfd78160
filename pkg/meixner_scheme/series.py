"""Truncated formal power series with exact coefficients.

A series is known through ``order`` (inclusive). Coefficients may be any of the
scalar kinds in ``scalar``; arithmetic between series of different orders keeps
the smaller one.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import SeriesDomainError
from .scalar import to_json


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("series order must be nonnegative")
        coeffs = tuple(Fraction(c) if type(c) is int else c for c in self.coeffs[: self.order + 1])
        coeffs += (Fraction(0),) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, order):
        return cls((), order)

    @classmethod
    def one(cls, order):
        return cls((Fraction(1),), order)

    @classmethod
    def constant(cls, value, order):
        return cls((value,), order)

    @classmethod
    def variable(cls, order):
        """The identity series s."""
        return cls((Fraction(0), Fraction(1)), order)

    def __getitem__(self, k):
        if 0 <= k <= self.order:
            return self.coeffs[k]
        raise IndexError(f"coefficient {k} outside truncation order {self.order}")

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order):
        return TruncatedSeries(self.coeffs, min(order, self.order))

    def map(self, fn):
        return TruncatedSeries(tuple(fn(c) for c in self.coeffs), self.order)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self + TruncatedSeries.constant(other, self.order)
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self):
        return self.map(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor):
        return self.map(lambda c: c * factor)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = 0
            for i in range(k + 1):
                if a[i] != 0 and b[k - i] != 0:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncatedSeries(tuple(out), n)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = TruncatedSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def reciprocal(self):
        a = self.coeffs
        if a[0] == 0:
            raise SeriesDomainError("reciprocal needs an invertible constant term")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                if a[k] != 0:
                    acc = acc + a[k] * out[n - k]
            out.append(-acc * inv0)
        return TruncatedSeries(tuple(out), self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        return self.map(lambda c: c / other)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def derivative(self):
        if self.order == 0:
            return TruncatedSeries.zero(0)
        return TruncatedSeries(tuple(k * self.coeffs[k] for k in range(1, self.order + 1)),
                               self.order - 1)

    def integral(self, constant=0):
        """Antiderivative; known one order further than the integrand."""
        tail = tuple(self.coeffs[k] * Fraction(1, k + 1) for k in range(self.order + 1))
        return TruncatedSeries((constant,) + tail, self.order + 1)

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self):
        return [to_json(c) for c in self.coeffs]


def compose(outer, inner):
    """outer(inner(s)), Horner style; inner must have zero constant term."""
    if inner[0] != 0:
        raise SeriesDomainError("inner series of a composition must have zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    result = TruncatedSeries.constant(outer[n], n)
    for k in range(n - 1, -1, -1):
        result = result * inner + outer[k]
    return result


def revert(u):
    """Compositional inverse t with t(u(s)) = s through the order of u."""
    if u.order < 1:
        raise SeriesDomainError("reversion needs a series of order at least 1")
    if u[0] != 0:
        raise SeriesDomainError("reversion needs u(0) = 0")
    if u[1] == 0:
        raise SeriesDomainError("reversion needs an invertible linear coefficient")
    n = u.order
    powers = [None, u]
    for k in range(2, n + 1):
        powers.append(powers[-1] * u)
    t = [Fraction(0)]
    for m in range(1, n + 1):
        acc = Fraction(1) if m == 1 else Fraction(0)
        for k in range(1, m):
            if t[k] != 0:
                acc = acc - t[k] * powers[k][m]
        t.append(acc / powers[m][m])
    return TruncatedSeries(tuple(t), n)


def exp(a):
    if a[0] != 0:
        raise SeriesDomainError("exp needs a series with zero constant term")
    y = [Fraction(1)]
    for n in range(1, a.order + 1):
        acc = 0
        for k in range(1, n + 1):
            if a[k] != 0:
                acc = acc + k * a[k] * y[n - k]
        y.append(acc * Fraction(1, n))
    return TruncatedSeries(tuple(y), a.order)


def log(a):
    if a[0] != 1:
        raise SeriesDomainError("log needs a series with constant term 1")
    if a.order == 0:
        return TruncatedSeries.zero(0)
    return (a.derivative() / a.truncate(a.order - 1)).integral()


def pow(a, exponent):
    """a**exponent for a rational exponent, a(0) = 1 (binomial series)."""
    if a[0] != 1:
        raise SeriesDomainError("pow needs a series with constant term 1")
    r = exponent
    y = [Fraction(1)]
    for n in range(1, a.order + 1):
        acc = 0
        for k in range(1, n + 1):
            if a[k] != 0:
                acc = acc + (r * k - (n - k)) * a[k] * y[n - k]
        y.append(acc * Fraction(1, n))
    return TruncatedSeries(tuple(y), a.order)


def solve_ode_ratio(numer, denom):
    """Series y with y'/y = numer/denom and y(0) = 1.

    The solution is known one order further than the quotient numer/denom.
    """
    if denom[0] == 0:
        raise SeriesDomainError("denominator must have an invertible constant term")
    return exp((numer / denom).integral())


def solve_autonomous(rhs, order):
    """Series y with y' = Q(y), y(0) = 0, for Q given by its coefficient list."""
    rhs = list(rhs)
    y = [Fraction(0)]
    for k in range(order):
        current = TruncatedSeries(tuple(y), k)
        value = TruncatedSeries.constant(rhs[-1], k)
        for q in reversed(rhs[:-1]):
            value = value * current + q
        y.append(value[k] * Fraction(1, k + 1))
    return TruncatedSeries(tuple(y), order)
