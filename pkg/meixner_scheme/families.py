"""The six families of orthogonal Sheffer polynomials.

Each family knows its monic recurrence, its generating function normalized to
f(0) = 1 and u'(0) = 1, its standard polynomials p_n (hypergeometric form), the
constants c_n with f(t) e^{x u(t)} = sum c_n p_n(x) t^n, its weight and its
second-order difference or differential equation.

Standard polynomials are evaluated by terminating hypergeometric sums that
only use ring operations, so passing ``Poly.x()`` for x returns the polynomial
itself and passing an mpmath number evaluates in high precision.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from . import series
from .errors import ParameterError, WeightDomainError
from .ortho import CONTINUOUS, DISCRETE, log_gamma_complex
from .recurrence import RecurrenceSpec
from .report import CheckReport
from .scalar import Angle, I, conj, is_exact, is_rational, parse_rational, pochhammer, rat_to_str, to_json
from .series import TruncatedSeries
from .sheffer import Poly

logger = logging.getLogger(__name__)


def terminating_hypergeometric(n, upper, lower, z, one=Fraction(1)):
    """sum_k (-n)_k prod (a)_k / prod (b)_k * z^k / k!, k = 0..n."""
    term = one
    total = one
    for k in range(n):
        num = k - n
        for a in upper:
            num = num * (a + k)
        den = k + 1
        for b in lower:
            den = den * (b + k)
        term = term * num * z / den
        total = total + term
    return total


def hermite_h(n, x):
    total = 0
    for m in range(n // 2 + 1):
        coeff = math.factorial(n) // (math.factorial(m) * math.factorial(n - 2 * m))
        total = total + (-1) ** m * coeff * (2 * x) ** (n - 2 * m)
    return total


def laguerre_l(n, alpha, x, one=Fraction(1)):
    lead = pochhammer(alpha + 1, n) / math.factorial(n)
    return lead * terminating_hypergeometric(n, [], [alpha + 1], x, one)


def charlier_c(n, a, x, one=Fraction(1)):
    return terminating_hypergeometric(n, [-x], [], -one / a, one)


def meixner_m(n, beta, c, x, one=Fraction(1)):
    return terminating_hypergeometric(n, [-x], [beta], one - one / c, one)


def krawtchouk_k(n, p, N, x, one=Fraction(1)):
    return terminating_hypergeometric(n, [-x], [-N], one / p, one)


def meixner_pollaczek_p(n, lam, unit, x, one=Fraction(1)):
    """P_n^(lam)(x; phi) with unit = e^{i phi} (Gaussian rational or complex)."""
    imag = I if is_exact(unit) else 1j
    z = one - conj(unit) ** 2
    lead = pochhammer(2 * lam, n) / math.factorial(n) * unit ** n
    return lead * terminating_hypergeometric(n, [lam + imag * x], [2 * lam], z, one)


def _exact_param(value):
    return Fraction(value) if is_rational(value) else value


def _is_nonneg_integer(x):
    if isinstance(x, int) and not isinstance(x, bool):
        return x >= 0
    return isinstance(x, Fraction) and x.denominator == 1 and x >= 0


@dataclass(frozen=True)
class GeneratingFunction:
    f: TruncatedSeries
    u: TruncatedSeries
    normalizations: tuple


@dataclass(frozen=True)
class WeightSpec:
    kind: str
    support: str
    evaluate: object


class FamilyInstance:
    """Common surface of the six families; subclasses are frozen dataclasses."""

    tag = ""
    case = ""
    weight_kind = CONTINUOUS
    support = ""

    def params(self):
        return {}

    @property
    def label(self):
        args = ",".join(f"{k}={_format_param(v)}" for k, v in self.params().items())
        return f"{self.tag.lower()}:{args}" if args else self.tag.lower()

    def recurrence(self):
        raise NotImplementedError

    def generating_function(self, order):
        raise NotImplementedError

    def normalization(self, n):
        raise NotImplementedError

    def standard(self, n, x):
        raise NotImplementedError

    def monic(self, n, x):
        return self.standard(n, x) * (self.normalization(n) * math.factorial(n))

    def monic_polynomials(self, n_max):
        x = Poly.x()
        out = []
        for n in range(n_max + 1):
            P = self.monic(n, x)
            out.append(P if isinstance(P, Poly) else Poly.constant(P))
        return out

    def weight(self, x):
        raise NotImplementedError

    @property
    def weight_spec(self):
        return WeightSpec(self.weight_kind, self.support, self.weight)

    def equation_residual(self, n, P):
        """Residual of the family's second-order equation applied to P; zero for P_n."""
        raise NotImplementedError

    def relative_moments(self, count):
        """mu_k / mu_0 in closed form, for the continuous families that have one."""
        return None

    def weight_ratio_sup(self, x0):
        """sup of w(x+1)/w(x) over x >= x0, for infinite discrete supports."""
        return None

    def to_json(self):
        return {"family": self.tag, "case": self.case,
                "params": {k: to_json(v) if not hasattr(v, "to_json") else v.to_json()
                           for k, v in self.params().items()}}


def _format_param(value):
    if isinstance(value, Angle):
        return f"cot={value.cot}" if value.cot is not None else f"radians={value.radians}"
    if is_rational(value):
        return rat_to_str(value)
    return str(value)


@dataclass(frozen=True)
class Hermite(FamilyInstance):
    tag = "Hermite"
    case = "I-Hermite"
    support = "(-inf, inf)"
    base_constant = "sqrt(pi)"

    def recurrence(self):
        return RecurrenceSpec(0, Fraction(-1, 2), 0, 0)

    def generating_function(self, order):
        f = series.exp(TruncatedSeries((0, 0, Fraction(-1, 4)), order))
        return GeneratingFunction(f, TruncatedSeries.variable(order),
                                  tuple(self.normalization(n) for n in range(order + 1)))

    def normalization(self, n):
        return Fraction(1, 2 ** n * math.factorial(n))

    def standard(self, n, x):
        return hermite_h(n, x)

    def weight(self, x):
        return math.exp(-float(x) ** 2)

    def equation_residual(self, n, P):
        x = Poly.x()
        return P.derivative().derivative() - x * P.derivative() * 2 + P * (2 * n)

    def relative_moments(self, count):
        out = []
        for k in range(count + 1):
            if k % 2:
                out.append(Fraction(0))
            else:
                j = k // 2
                out.append(Fraction(math.prod(range(1, 2 * j, 2)), 2 ** j))
        return out


@dataclass(frozen=True)
class Laguerre(FamilyInstance):
    alpha: Fraction = Fraction(0)

    tag = "Laguerre"
    case = "II-Laguerre"
    support = "(0, inf)"
    base_constant = "Gamma(alpha+1)"

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha <= -1:
            raise ParameterError(f"Laguerre needs alpha > -1, got {rat_to_str(self.alpha)}")

    def params(self):
        return {"alpha": self.alpha}

    def recurrence(self):
        return RecurrenceSpec(-2, -1 - self.alpha, -1, -(self.alpha + 1))

    def generating_function(self, order):
        one_plus_t = TruncatedSeries((1, 1), order)
        f = series.pow(one_plus_t, -self.alpha - 1)
        u = TruncatedSeries.variable(order) / one_plus_t
        return GeneratingFunction(f, u, tuple(self.normalization(n) for n in range(order + 1)))

    def normalization(self, n):
        return Fraction((-1) ** n)

    def standard(self, n, x):
        return laguerre_l(n, self.alpha, x)

    def weight(self, x):
        x = float(x)
        if x < 0 or (x == 0 and self.alpha < 0):
            raise WeightDomainError(f"Laguerre weight is supported on (0, inf), got {x}")
        return x ** float(self.alpha) * math.exp(-x)

    def equation_residual(self, n, P):
        x = Poly.x()
        return (x * P.derivative().derivative() + (self.alpha + 1 - x) * P.derivative()
                + P * n)

    def relative_moments(self, count):
        return [pochhammer(self.alpha + 1, k) for k in range(count + 1)]


class _DiscreteFamily(FamilyInstance):
    weight_kind = DISCRETE

    def _check_support(self, x):
        if not _is_nonneg_integer(x):
            raise WeightDomainError(f"{self.tag} weight lives on nonnegative integers, got {x}")
        return int(x)


@dataclass(frozen=True)
class Charlier(_DiscreteFamily):
    a: Fraction = Fraction(1)

    tag = "Charlier"
    case = "III-Charlier"
    support = "{0, 1, 2, ...}"

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        if self.a <= 0:
            raise ParameterError(f"Charlier needs a > 0, got {rat_to_str(self.a)}")

    def params(self):
        return {"a": self.a}

    def recurrence(self):
        return RecurrenceSpec(-1, -self.a, 0, -self.a)

    def generating_function(self, order):
        f = series.exp(TruncatedSeries((0, -self.a), order))
        u = series.log(TruncatedSeries((1, 1), order))
        return GeneratingFunction(f, u, tuple(self.normalization(n) for n in range(order + 1)))

    def normalization(self, n):
        return (-self.a) ** n / math.factorial(n)

    def standard(self, n, x):
        return charlier_c(n, self.a, x)

    def weight(self, x):
        x = self._check_support(x)
        return self.a ** x / math.factorial(x)

    def weight_ratio_sup(self, x0):
        return self.a / (x0 + 1)

    def equation_residual(self, n, P):
        x = Poly.x()
        return (P.shift(1) * self.a - (x + self.a) * P + x * P.shift(-1) + P * n)


@dataclass(frozen=True)
class Meixner(_DiscreteFamily):
    beta: Fraction = Fraction(1)
    c: Fraction = Fraction(1, 2)

    tag = "Meixner"
    case = "IV-Meixner"
    support = "{0, 1, 2, ...}"

    def __post_init__(self):
        object.__setattr__(self, "beta", _exact_param(self.beta))
        object.__setattr__(self, "c", _exact_param(self.c))
        if self.beta <= 0 or not 0 < self.c < 1:
            raise ParameterError(
                f"Meixner needs beta > 0 and 0 < c < 1, got beta={_format_param(self.beta)}, "
                f"c={_format_param(self.c)}")

    def params(self):
        return {"beta": self.beta, "c": self.c}

    def recurrence(self):
        beta, c = self.beta, self.c
        return RecurrenceSpec(-(1 + c) / (1 - c), -beta * c / (1 - c) ** 2,
                              -c / (1 - c) ** 2, -beta * c / (1 - c))

    def generating_function(self, order):
        beta, c = self.beta, self.c
        shrink = TruncatedSeries((1, c / (1 - c)), order)
        grow = TruncatedSeries((1, 1 / (1 - c)), order)
        f = series.pow(shrink, -beta)
        u = series.log(grow) - series.log(shrink)
        return GeneratingFunction(f, u, tuple(self.normalization(n) for n in range(order + 1)))

    def normalization(self, n):
        return pochhammer(self.beta, n) / math.factorial(n) * (self.c / (self.c - 1)) ** n

    def standard(self, n, x):
        return meixner_m(n, self.beta, self.c, x)

    def weight(self, x):
        x = self._check_support(x)
        return pochhammer(self.beta, x) * self.c ** x / math.factorial(x)

    def weight_without_power(self, x):
        """(beta)_x / x!, the weight as printed without the factor c^x."""
        x = self._check_support(x)
        return pochhammer(self.beta, x) / math.factorial(x)

    def weight_ratio_sup(self, x0):
        return max(self.c * (self.beta + x0) / (x0 + 1), self.c)

    def equation_residual(self, n, P):
        x = Poly.x()
        beta, c = self.beta, self.c
        return ((x + beta) * P.shift(1) * c - (x + (x + beta) * c) * P
                + x * P.shift(-1) - P * (n * (c - 1)))


@dataclass(frozen=True)
class Krawtchouk(_DiscreteFamily):
    p: Fraction = Fraction(1, 2)
    N: int = 1

    tag = "Krawtchouk"
    case = "VI-Krawtchouk"

    def __post_init__(self):
        object.__setattr__(self, "p", _exact_param(self.p))
        if not 0 < self.p < 1:
            raise ParameterError(f"Krawtchouk needs 0 < p < 1, got {_format_param(self.p)}")
        if not _is_nonneg_integer(self.N) or self.N < 1:
            raise ParameterError(f"Krawtchouk needs a positive integer N, got {self.N}")
        object.__setattr__(self, "N", int(self.N))

    @property
    def support(self):
        return f"{{0, ..., {self.N}}}"

    def params(self):
        return {"p": self.p, "N": self.N}

    def recurrence(self):
        p, q = self.p, 1 - self.p
        return RecurrenceSpec(2 * p - 1, -p * q * self.N, p * q, -p * self.N)

    def generating_function(self, order):
        p = self.p
        down = TruncatedSeries((1, -p), order)
        f = series.pow(down, self.N)
        u = series.log(TruncatedSeries((1, 1 - p), order)) - series.log(down)
        return GeneratingFunction(f, u, tuple(self.normalization(n) for n in range(order + 1)))

    def normalization(self, n):
        return math.comb(self.N, n) * (-self.p) ** n

    def standard(self, n, x):
        if n > self.N:
            raise ParameterError(f"Krawtchouk K_n needs n <= N = {self.N}, got {n}")
        return krawtchouk_k(n, self.p, self.N, x)

    def monic_polynomials(self, n_max):
        # past N the standard polynomials stop; the recurrence keeps going
        if n_max > self.N:
            return self.recurrence().polynomials(n_max)
        return super().monic_polynomials(n_max)

    def weight(self, x):
        x = self._check_support(x)
        if x > self.N:
            raise WeightDomainError(f"Krawtchouk weight lives on 0..{self.N}, got {x}")
        return math.comb(self.N, x) * self.p ** x * (1 - self.p) ** (self.N - x)

    def equation_residual(self, n, P):
        x = Poly.x()
        p, N = self.p, self.N
        return ((N - x) * P.shift(1) * p - ((N - x) * p + x * (1 - p)) * P
                + x * P.shift(-1) * (1 - p) + P * n)


@dataclass(frozen=True)
class MeixnerPollaczek(FamilyInstance):
    lambda_mp: Fraction = Fraction(1)
    phi: Angle = None

    tag = "MeixnerPollaczek"
    case = "V-Meixner-Pollaczek"
    support = "(-inf, inf)"

    def __post_init__(self):
        object.__setattr__(self, "lambda_mp", Fraction(self.lambda_mp))
        if self.phi is None:
            object.__setattr__(self, "phi", Angle.right())
        if self.lambda_mp <= 0:
            raise ParameterError(
                f"Meixner-Pollaczek needs lambda > 0, got {rat_to_str(self.lambda_mp)}")
        if not isinstance(self.phi, Angle):
            raise ParameterError("Meixner-Pollaczek needs phi as an Angle")

    @property
    def label(self):
        return f"mp:lambda={rat_to_str(self.lambda_mp)},{_format_param(self.phi)}"

    def params(self):
        return {"lambda": self.lambda_mp, "phi": self.phi}

    def _cot(self):
        if self.phi.exact:
            return self.phi.cot
        logger.warning("cot(phi) is not exact for %r, using floats", self.phi)
        return 1.0 / math.tan(self.phi.radians)

    def recurrence(self):
        cot = self._cot()
        csc2 = 1 + cot * cot
        lam = self.lambda_mp
        return RecurrenceSpec(cot, -lam * csc2 / 2, -csc2 / 4, lam * cot)

    def generating_function(self, order):
        cot = self._cot()
        csc2 = 1 + cot * cot
        f = series.pow(TruncatedSeries((1, -cot, csc2 / 4), order), -self.lambda_mp)
        # u_k = 2 Im(((cot + i)/2)^k) / k, summed binomially to stay inside Q(cot)
        u = [Fraction(0)]
        for k in range(1, order + 1):
            imag = 0
            for j in range(1, k + 1, 2):
                imag = imag + (-1) ** ((j - 1) // 2) * math.comb(k, j) * cot ** (k - j)
            u.append(imag * Fraction(2, k * 2 ** k))
        norms = tuple(self.normalization(n) for n in range(order + 1))
        return GeneratingFunction(f, TruncatedSeries(tuple(u), order), norms)

    def normalization(self, n):
        sin = self.phi.sin()
        return 1 / (2 * sin) ** n

    def _unit(self):
        unit = self.phi.unit()
        return unit if unit is not None else self.phi.unit_complex()

    def standard(self, n, x):
        unit = self._unit()
        one = Fraction(1) if is_exact(unit) else complex(1)
        return meixner_pollaczek_p(n, self.lambda_mp, unit, x, one)

    def monic(self, n, x):
        if self.phi.unit() is None:
            value = self.standard(n, x)
            return value * (float(self.normalization(n)) * math.factorial(n))
        return super().monic(n, x)

    def monic_polynomials(self, n_max):
        if self.phi.unit() is None:
            return self.recurrence().polynomials(n_max)
        return super().monic_polynomials(n_max)

    def weight(self, x):
        x = float(x)
        log_abs = 2 * log_gamma_complex(complex(float(self.lambda_mp), x)).real
        return math.exp((2 * self.phi.radians - math.pi) * x + log_abs)

    def printed_weight(self, x):
        """e^{-pi x} |Gamma(lambda + i x)|^2, the form without the phi-dependence."""
        x = float(x)
        log_abs = 2 * log_gamma_complex(complex(float(self.lambda_mp), x)).real
        return math.exp(-math.pi * x + log_abs)

    def equation_residual(self, n, P):
        unit = self.phi.unit()
        if unit is None:
            return None
        x = Poly.x()
        lam = self.lambda_mp
        cos, sin = self.phi.cos(), self.phi.sin()
        return (P.shift(I) * (lam - I * x) * unit
                + P * (x * cos - (n + lam) * sin) * (2 * I)
                - P.shift(-I) * (lam + I * x) * conj(unit))

    def equation_residual_numeric(self, n, P, points=(-1.3, 0.0, 0.7, 2.1)):
        unit = self.phi.unit_complex()
        lam = float(self.lambda_mp)
        cos, sin = math.cos(self.phi.radians), math.sin(self.phi.radians)
        out = []
        for x in points:
            value = (unit * (lam - 1j * x) * P(complex(x, 1))
                     + 2j * (x * cos - (n + lam) * sin) * P(complex(x, 0))
                     - unit.conjugate() * (lam + 1j * x) * P(complex(x, -1)))
            out.append(abs(value))
        return out


def recurrence_of(fam):
    return fam.recurrence()


def generating_function_of(fam, order):
    return fam.generating_function(order)


def evaluate(fam, n, x):
    return fam.standard(n, x)


def weight_eval(fam, x):
    return fam.weight_spec.evaluate(x)


def acceptance_families():
    """The fixed parameter sets the verification suites run on."""
    return [
        Hermite(),
        Laguerre(Fraction(0)),
        Laguerre(Fraction(1, 2)),
        Charlier(Fraction(1)),
        Charlier(Fraction(2)),
        Meixner(Fraction(3, 2), Fraction(1, 4)),
        MeixnerPollaczek(Fraction(1), Angle.right()),
        Krawtchouk(Fraction(1, 3), 6),
    ]


_FAMILY_NAMES = {
    "hermite": "hermite",
    "laguerre": "laguerre",
    "charlier": "charlier",
    "meixner": "meixner",
    "mp": "mp",
    "meixnerpollaczek": "mp",
    "meixner-pollaczek": "mp",
    "krawtchouk": "krawtchouk",
}


def parse_family(text):
    """Parse strings like "meixner:beta=3/2,c=1/4" or "mp:lambda=1,phi=1/2"."""
    name, _, rest = text.strip().partition(":")
    key = _FAMILY_NAMES.get(name.strip().lower())
    if key is None:
        raise ParameterError(f"unknown family {name!r}")
    raw = {}
    for item in filter(None, (part.strip() for part in rest.split(","))):
        pname, sep, value = item.partition("=")
        if not sep:
            raise ParameterError(f"malformed family parameter {item!r}")
        try:
            raw[pname.strip()] = parse_rational(value)
        except ValueError as exc:
            raise ParameterError(str(exc)) from None

    def take(*names):
        unknown = set(raw) - set(names)
        if unknown:
            raise ParameterError(f"unknown parameter(s) {sorted(unknown)} for {key}")
        return raw

    if key == "hermite":
        take()
        return Hermite()
    if key == "laguerre":
        return Laguerre(take("alpha").get("alpha", Fraction(0)))
    if key == "charlier":
        return Charlier(take("a").get("a", Fraction(1)))
    if key == "meixner":
        args = take("beta", "c")
        return Meixner(args.get("beta", Fraction(1)), args.get("c", Fraction(1, 2)))
    if key == "krawtchouk":
        args = take("p", "N")
        N = args.get("N", Fraction(1))
        if N.denominator != 1:
            raise ParameterError(f"Krawtchouk N must be an integer, got {rat_to_str(N)}")
        return Krawtchouk(args.get("p", Fraction(1, 2)), int(N))
    args = take("lambda", "phi", "cot")
    if "phi" in args and "cot" in args:
        raise ParameterError("give either phi (as a fraction of pi) or cot, not both")
    try:
        if "cot" in args:
            phi = Angle.from_cot(args["cot"])
        else:
            phi = Angle.from_pi_fraction(args.get("phi", Fraction(1, 2)))
    except ValueError as exc:
        raise ParameterError(str(exc)) from None
    return MeixnerPollaczek(args.get("lambda", Fraction(1)), phi)


def identity_krawtchouk_meixner(p, N, n, x):
    """K_n(x; p, N) == M_n(x; -N, p/(p-1)), exactly.

    The left side comes from the Krawtchouk three-term recurrence, the right
    side from the Meixner hypergeometric sum.
    """
    p, x = Fraction(p), Fraction(x)
    if not 0 < p < 1 or n > N:
        raise ParameterError("identity needs 0 < p < 1 and n <= N")
    q = 1 - p
    prev, cur = Fraction(0), Fraction(1)
    for m in range(n):
        nxt = ((p * (N - m) + m * q - x) * cur - m * q * prev) / (p * (N - m))
        prev, cur = cur, nxt
    rhs = meixner_m(n, Fraction(-N), p / (p - 1), x)
    return CheckReport("krawtchouk-meixner", cur == rhs, [] if cur == rhs else [n],
                       {"p": p, "N": N, "n": n, "x": x, "lhs": cur, "rhs": rhs})


def identity_mp_meixner(lambda_mp, phi, n, x, tol=1e-10):
    """P_n^(lam)(x; phi) == (2 lam)_n / n! e^{i n phi} M_n(-lam - i x; 2 lam, e^{2 i phi}).

    Exact over the Gaussian rationals when e^{i phi} is one and x is rational;
    otherwise in double precision with a relative tolerance.
    """
    unit = phi.unit()
    exact = unit is not None and is_rational(x) and is_rational(lambda_mp)
    if exact:
        lam, x = Fraction(lambda_mp), Fraction(x)
        sin, cos = phi.sin(), phi.cos()
        one = Fraction(1)
        imag = I
    else:
        lam, x = float(lambda_mp), float(x)
        sin, cos = math.sin(phi.radians), math.cos(phi.radians)
        unit = phi.unit_complex()
        one = complex(1)
        imag = 1j
    prev, cur = 0, one
    for m in range(n):
        nxt = (2 * (x * sin + (m + lam) * cos) * cur - (m + 2 * lam - 1) * prev) / (m + 1)
        prev, cur = cur, nxt
    lead = pochhammer(2 * lam, n) / math.factorial(n) * unit ** n
    rhs = lead * meixner_m(n, 2 * lam, unit ** 2, -lam - imag * x, one)
    if exact:
        passed = cur == rhs
        error = 0.0 if passed else abs(complex(cur - rhs))
    else:
        error = abs(complex(cur) - complex(rhs))
        passed = error <= tol * max(1.0, abs(complex(cur)))
    return CheckReport("mp-meixner", passed, [] if passed else [n],
                       {"lambda": lambda_mp, "phi": phi.radians, "n": n, "x": x,
                        "exact": exact, "lhs": cur, "rhs": rhs, "error": error})


def standard_equation_check(fam, n_max):
    """The family's own difference/differential equation on P_0..P_n_max."""
    failures = []
    numeric = False
    polys = fam.monic_polynomials(n_max)
    for n, P in enumerate(polys):
        residual = fam.equation_residual(n, P)
        if residual is None:
            numeric = True
            scale = max(1.0, max(abs(complex(c)) for c in P.coeffs))
            ok = all(r <= 1e-8 * scale for r in fam.equation_residual_numeric(n, P))
        else:
            ok = residual == Poly()
        if not ok:
            failures.append(n)
    return CheckReport("standard-equation", not failures, failures,
                       {"family": fam.label, "n_max": n_max, "numeric": numeric})


def limit_transition(edge, n, x, epsilons=None):
    """Run one limit edge of the scheme; see ``limits.limit_transition``."""
    from .limits import limit_transition as run

    return run(edge, n, x, epsilons)
