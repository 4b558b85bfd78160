"""Number kernels shared by every other module.

Rationals are plain ``fractions.Fraction``. Irrational roots of the quadratic
1 - lambda*t - kappa*t^2 are kept exactly as ``QuadraticNumber`` values
a + b*sqrt(d); d = -1 gives the Gaussian rationals used for complex
parameters. Floats (``complex``) only show up in numeric checks.
"""
import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import sympy
from sympy.ntheory import factorint

from .errors import FieldMismatchError

# double precision complex, the numeric fallback everywhere
CF64 = complex


def parse_rational(token):
    try:
        return Fraction(str(token).strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational {token!r}") from None


def rat_to_str(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_rational(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def is_exact(x):
    return is_rational(x) or isinstance(x, QuadraticNumber)


def squarefree_split(n):
    """Write a positive integer as r^2 * d with d squarefree; returns (r, d)."""
    root = math.isqrt(n)
    if root * root == n:
        return root, 1
    r, d = 1, 1
    for prime, power in factorint(n).items():
        r *= prime ** (power // 2)
        if power % 2:
            d *= prime
    return r, d


def _make(a, b, d):
    # collapse to a plain rational once the surd part cancels
    if b == 0:
        return Fraction(a)
    return QuadraticNumber(a, b, d)


class QuadraticNumber:
    """a + b*sqrt(d) with a, b rational and d a squarefree integer (d != 0, 1)."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        d = int(d)
        if d in (0, 1):
            raise ValueError(f"radicand must be squarefree and not 0 or 1, got {d}")
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticNumber is immutable")

    def _parts(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise FieldMismatchError(
                    f"cannot combine sqrt({self.d}) and sqrt({other.d}) values")
            return other.a, other.b
        if is_rational(other):
            return Fraction(other), Fraction(0)
        return None

    def _numeric(self):
        return float(self) if self.d > 0 else complex(self)

    def __add__(self, other):
        parts = self._parts(other)
        if parts is None:
            if isinstance(other, (float, complex)):
                return self._numeric() + other
            return NotImplemented
        return _make(self.a + parts[0], self.b + parts[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        parts = self._parts(other)
        if parts is None:
            if isinstance(other, (float, complex)):
                return self._numeric() - other
            return NotImplemented
        return _make(self.a - parts[0], self.b - parts[1], self.d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        parts = self._parts(other)
        if parts is None:
            if isinstance(other, (float, complex)):
                return self._numeric() * other
            return NotImplemented
        a, b = parts
        return _make(self.a * a + self.b * b * self.d, self.a * b + self.b * a, self.d)

    __rmul__ = __mul__

    def norm(self):
        """Field norm (a + b sqrt d)(a - b sqrt d) = a^2 - b^2 d."""
        return self.a * self.a - self.b * self.b * self.d

    def conjugate(self):
        return QuadraticNumber(self.a, -self.b, self.d)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return QuadraticNumber(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadraticNumber):
            self._parts(other)
            return self * other.inverse()
        if is_rational(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadraticNumber(self.a / other, self.b / other, self.d)
        if isinstance(other, (float, complex)):
            return self._numeric() / other
        return NotImplemented

    def __rtruediv__(self, other):
        if is_rational(other):
            return self.inverse() * other
        if isinstance(other, (float, complex)):
            return other / self._numeric()
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = Fraction(1)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if is_rational(other):
            return False
        if isinstance(other, (float, complex)):
            return self._numeric() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    # ordering only makes sense inside a real field
    def _compare(self, other):
        if self.d < 0:
            raise TypeError("imaginary quadratic numbers are not ordered")
        return sign(self - other)

    def __lt__(self, other):
        return self._compare(other) < 0

    def __le__(self, other):
        return self._compare(other) <= 0

    def __gt__(self, other):
        return self._compare(other) > 0

    def __ge__(self, other):
        return self._compare(other) >= 0

    def __float__(self):
        if self.d < 0:
            raise TypeError("imaginary quadratic number has no float value")
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __complex__(self):
        if self.d > 0:
            return complex(float(self), 0.0)
        return complex(float(self.a), float(self.b) * math.sqrt(-self.d))

    @property
    def re(self):
        if self.d != -1:
            raise TypeError("re/im are only exact over the Gaussian rationals")
        return self.a

    @property
    def im(self):
        if self.d != -1:
            raise TypeError("re/im are only exact over the Gaussian rationals")
        return self.b

    def __repr__(self):
        return f"QuadraticNumber({rat_to_str(self.a)}, {rat_to_str(self.b)}, {self.d})"

    def __str__(self):
        unit = "i" if self.d == -1 else f"sqrt({self.d})"
        if self.a == 0:
            return f"{rat_to_str(self.b)}*{unit}"
        op = "+" if self.b > 0 else "-"
        return f"{rat_to_str(self.a)} {op} {rat_to_str(abs(self.b))}*{unit}"


I = QuadraticNumber(0, 1, -1)


def gaussian(re, im):
    """The Gaussian rational re + i*im (a Fraction when im == 0)."""
    return _make(re, im, -1)


def sqrt_rational(q):
    """Exact square root of a rational, as a Fraction or a QuadraticNumber."""
    q = Fraction(q)
    if q == 0:
        return Fraction(0)
    negative = q < 0
    num = abs(q.numerator) * q.denominator
    r, d = squarefree_split(num)
    coeff = Fraction(r, q.denominator)
    if negative:
        d = -d
    if d == 1:
        return coeff
    return QuadraticNumber(0, coeff, d)


def sign(x):
    if isinstance(x, QuadraticNumber):
        if x.d < 0:
            raise TypeError("imaginary quadratic numbers have no sign")
        sa = (x.a > 0) - (x.a < 0)
        sb = (x.b > 0) - (x.b < 0)
        if sa >= 0 and sb >= 0:
            return 1 if (sa or sb) else 0
        if sa <= 0 and sb <= 0:
            return -1
        # opposite signs, the larger square wins (a^2 == b^2 d is impossible)
        return sa if x.a * x.a > x.b * x.b * x.d else sb
    return (x > 0) - (x < 0)


def conj(z):
    if isinstance(z, QuadraticNumber):
        return z.conjugate() if z.d < 0 else z
    if hasattr(z, "conjugate"):
        return z.conjugate()
    return z


def pochhammer(x, n):
    """Rising factorial (x)_n = x(x+1)...(x+n-1), generic over the scalar kinds."""
    result = x ** 0
    for j in range(n):
        result = result * (x + j)
    return result


def to_json(x):
    if isinstance(x, bool):
        return x
    if is_rational(x):
        return rat_to_str(x)
    if isinstance(x, QuadraticNumber):
        if x.d == -1:
            return {"re": rat_to_str(x.a), "im": rat_to_str(x.b)}
        return {"rational": rat_to_str(x.a), "coefficient": rat_to_str(x.b),
                "radicand": str(x.d)}
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    if isinstance(x, float):
        return x
    # mpmath and numpy scalars
    try:
        return float(x)
    except TypeError:
        c = complex(x)
        return {"re": c.real, "im": c.imag}


def sympy_to_scalar(expr):
    """Convert an exact sympy number of the form r + s*sqrt(d); None if it isn't one."""
    expr = sympy.radsimp(sympy.nsimplify(expr))
    rational = Fraction(0)
    surd = Fraction(0)
    radicand = None
    for term in sympy.Add.make_args(expr):
        coeff, rest = term.as_coeff_Mul()
        if not coeff.is_Rational:
            return None
        coeff = Fraction(int(coeff.p), int(coeff.q))
        if rest == 1:
            rational += coeff
        elif rest.is_Pow and rest.exp == sympy.S.Half and rest.base.is_Integer:
            base = int(rest.base)
            if radicand not in (None, base):
                return None
            radicand = base
            surd += coeff
        else:
            return None
    if radicand is None:
        return rational
    return rational + surd * sqrt_rational(radicand)


class RootTag(str, Enum):
    BOTH_ZERO = "both-zero"
    ONE_ZERO = "one-zero"
    EQUAL_NONZERO = "equal-nonzero"
    DISTINCT_REAL = "distinct-real"
    COMPLEX_CONJUGATE = "complex-conjugate"


@dataclass(frozen=True)
class RootPair:
    """alpha, beta with 1 - lambda*t - kappa*t^2 = (1 - alpha*t)(1 - beta*t)."""

    alpha: object
    beta: object
    tag: RootTag
    discriminant: Fraction

    def coefficients(self):
        # (lambda, kappa) recovered from the roots
        return self.alpha + self.beta, -(self.alpha * self.beta)


def factor_quadratic(lam, kappa):
    """Factor 1 - lam*t - kappa*t^2 over Q or its quadratic extension.

    Detection order: both roots zero, one root zero, a double root, then the
    sign of the discriminant lam^2 + 4*kappa. Every test is exact.
    """
    lam, kappa = Fraction(lam), Fraction(kappa)
    disc = lam * lam + 4 * kappa
    if lam == 0 and kappa == 0:
        return RootPair(Fraction(0), Fraction(0), RootTag.BOTH_ZERO, disc)
    if kappa == 0:
        return RootPair(lam, Fraction(0), RootTag.ONE_ZERO, disc)
    if disc == 0:
        return RootPair(lam / 2, lam / 2, RootTag.EQUAL_NONZERO, disc)
    root = sqrt_rational(disc)
    tag = RootTag.DISTINCT_REAL if disc > 0 else RootTag.COMPLEX_CONJUGATE
    return RootPair((lam + root) / 2, (lam - root) / 2, tag, disc)


class Angle:
    """An angle phi in (0, pi), carried exactly through cot(phi) when possible."""

    __slots__ = ("radians", "cot")

    def __init__(self, radians, cot=None):
        radians = float(radians)
        if not 0.0 < radians < math.pi:
            raise ValueError(f"angle must lie in (0, pi), got {radians}")
        object.__setattr__(self, "radians", radians)
        object.__setattr__(self, "cot", cot)

    def __setattr__(self, name, value):
        raise AttributeError("Angle is immutable")

    @classmethod
    def from_cot(cls, cot):
        return cls(math.atan2(1.0, float(cot)), cot)

    @classmethod
    def from_pi_fraction(cls, q):
        q = Fraction(q)
        if not 0 < q < 1:
            raise ValueError(f"phi/pi must lie in (0, 1), got {rat_to_str(q)}")
        exact = sympy_to_scalar(sympy.cot(sympy.pi * sympy.Rational(q.numerator, q.denominator)))
        return cls(float(q) * math.pi, exact)

    @classmethod
    def right(cls):
        return cls.from_cot(Fraction(0))

    @property
    def exact(self):
        return self.cot is not None

    def sin2(self):
        if self.cot is None:
            return math.sin(self.radians) ** 2
        return 1 / (1 + self.cot * self.cot)

    def sin(self):
        # sin(phi) > 0 on (0, pi); exact only when cot is rational
        if is_rational(self.cot):
            return sqrt_rational(self.sin2())
        return math.sin(self.radians)

    def cos(self):
        if is_rational(self.cot):
            return self.cot * self.sin()
        return math.cos(self.radians)

    def unit(self):
        """exp(i*phi) as a Gaussian rational, or None when it is not one."""
        if not is_rational(self.cot):
            return None
        s = self.sin()
        if not is_rational(s):
            return None
        return gaussian(self.cot * s, s)

    def unit_complex(self):
        return cmath.exp(1j * self.radians)

    def __eq__(self, other):
        if not isinstance(other, Angle):
            return NotImplemented
        if self.cot is not None and other.cot is not None:
            return self.cot == other.cot
        return self.radians == other.radians

    def __hash__(self):
        return hash(round(self.radians, 12))

    def __repr__(self):
        if self.cot is not None:
            return f"Angle(cot={self.cot})"
        return f"Angle({self.radians!r})"

    def to_json(self):
        out = {"radians": self.radians}
        if self.cot is not None:
            out["cot"] = to_json(self.cot)
        return out
