"""From recurrence data (lambda, k2, kappa, l1) to the Sheffer pair and the family.

t(u) solves t' = 1 - lambda t - kappa t^2, u is its inverse, and f solves
f'/f = (l1 + k2 t)/(1 - lambda t - kappa t^2). The root pattern of
1 - lambda t - kappa t^2 = (1 - alpha t)(1 - beta t) picks the case; Favard
positivity decides whether it is orthogonal at all.

Recovered families are reported together with an affine normalization
P_n(x) = s^n Phat_n((x + d)/s), Phat_n the family's standard monic polynomial.
"""
import logging
import math
from dataclasses import dataclass

from . import series, settings
from .errors import DegenerateRecurrenceError, InsufficientOrderError, ParameterError
from .families import Charlier, Hermite, Krawtchouk, Laguerre, Meixner, MeixnerPollaczek
from .ortho import moments_from_recurrence
from .recurrence import RecurrenceSpec, favard_check  # noqa: F401  (re-exported)
from .report import CheckReport
from .scalar import Angle, RootTag, factor_quadratic, sqrt_rational, to_json
from .series import TruncatedSeries
from .sheffer import Poly, ShefferPair, apply_operator, expand

logger = logging.getLogger(__name__)

HERMITE = "I-Hermite"
LAGUERRE = "II-Laguerre"
CHARLIER = "III-Charlier"
MEIXNER = "IV-Meixner"
MEIXNER_POLLACZEK = "V-Meixner-Pollaczek"
KRAWTCHOUK = "VI-Krawtchouk"
NOT_ORTHOGONAL = "NotOrthogonal"


@dataclass(frozen=True)
class ClassificationResult:
    case_tag: str
    candidate: str
    spec: RecurrenceSpec
    roots: object
    pair: ShefferPair
    family: object = None
    scale: object = 1
    shift: object = 0
    favard: object = None

    @property
    def orthogonal(self):
        return self.case_tag != NOT_ORTHOGONAL

    def to_json(self):
        return {
            "case": self.case_tag,
            "candidate": self.candidate,
            "recurrence": self.spec.to_json(),
            "alpha": to_json(self.roots.alpha),
            "beta": to_json(self.roots.beta),
            "roots": self.roots.tag.value,
            "params": self.family.to_json()["params"] if self.family is not None else None,
            "scale": to_json(self.scale),
            "shift": to_json(self.shift),
            "favard": self.favard.to_json() if self.favard is not None else None,
            "f_coeffs": self.pair.f.to_json(),
            "u_coeffs": self.pair.u.to_json(),
            "t_coeffs": self.pair.t.to_json(),
        }


def _candidate(roots, kappa):
    if roots.tag is RootTag.BOTH_ZERO:
        return HERMITE
    if roots.tag is RootTag.EQUAL_NONZERO:
        return LAGUERRE
    if roots.tag is RootTag.ONE_ZERO:
        return CHARLIER
    if roots.tag is RootTag.COMPLEX_CONJUGATE:
        return MEIXNER_POLLACZEK
    return MEIXNER if kappa < 0 else KRAWTCHOUK


def _recover_family(case, spec, roots):
    """Family with standard parameters plus (scale, shift) of the affine map."""
    lam, k2, kappa, l1 = spec.lambda_rec, spec.k2, spec.kappa, spec.l1
    if case == HERMITE:
        scale = sqrt_rational(-2 * k2)
        fam = Hermite()
    elif case == LAGUERRE:
        rho = lam / 2
        scale = -rho
        fam = Laguerre(-1 - k2 / (rho * rho))
    elif case == CHARLIER:
        scale = -lam
        fam = Charlier(-k2 / (lam * lam))
    elif case == MEIXNER:
        # r1 is the root of larger modulus; both roots share a sign
        r1, r2 = roots.alpha, roots.beta
        if r2 * r2 > r1 * r1:
            r1, r2 = r2, r1
        scale = r2 - r1
        fam = Meixner(k2 / kappa, r2 / r1)
    elif case == MEIXNER_POLLACZEK:
        scale = sqrt_rational(-roots.discriminant)
        fam = MeixnerPollaczek(k2 / (2 * kappa), Angle.from_cot(lam / scale))
    else:
        scale = sqrt_rational(roots.discriminant)
        fam = Krawtchouk(roots.alpha / scale, int(-k2 / kappa))
    shift = l1 - scale * fam.recurrence().l1
    return fam, scale, shift


def classify(spec, order=None):
    """Solve for (f, u, t), detect the case and recover the family parameters."""
    order = settings.default_order(settings.DEFAULT_N_MAX) if order is None else order
    if spec.k2 == 0:
        raise DegenerateRecurrenceError("k2 = 0: degenerate, not orthogonal")
    if not spec.is_rational():
        raise ParameterError("classification needs rational recurrence data")
    lam, k2, kappa, l1 = spec.lambda_rec, spec.k2, spec.kappa, spec.l1
    roots = factor_quadratic(lam, kappa)
    t = series.solve_autonomous([1, -lam, -kappa], order)
    u = series.revert(t)
    f = series.solve_ode_ratio(TruncatedSeries((l1, k2), order - 1),
                               TruncatedSeries((1, -lam, -kappa), order - 1))
    pair = ShefferPair(f, u, t, 0)
    candidate = _candidate(roots, kappa)
    favard = favard_check(spec)
    if not favard.passed:
        logger.info("root pattern suggests %s but the recurrence is not positive", candidate)
        return ClassificationResult(NOT_ORTHOGONAL, candidate, spec, roots, pair, favard=favard)
    fam, scale, shift = _recover_family(candidate, spec, roots)
    logger.info("classified %s as %s (scale %s, shift %s)", spec, candidate, scale, shift)
    return ClassificationResult(candidate, candidate, spec, roots, pair, fam, scale, shift, favard)


@dataclass(frozen=True)
class OperatorForm:
    expression: str
    series: TruncatedSeries


def recover_operator(roots, order):
    """Closed form of t(D) from the roots of 1 - lambda t - kappa t^2.

    Integrating t' = (1 - alpha t)(1 - beta t) by partial fractions gives
    t(D) = (e^{(alpha-beta)D} - 1)/(alpha e^{(alpha-beta)D} - beta), and
    t(D) = D/(1 + alpha D) for a double root.
    """
    alpha, beta = roots.alpha, roots.beta
    D = TruncatedSeries.variable(order)
    if alpha == beta:
        return OperatorForm(f"D/(1 + ({alpha})D)", D / (1 + D * alpha))
    E = series.exp(D * (alpha - beta))
    expression = f"(exp(({alpha} - ({beta}))D) - 1)/(({alpha}) exp(({alpha} - ({beta}))D) - ({beta}))"
    return OperatorForm(expression, (E - 1) / (E * alpha - beta))


def operator_check(result):
    """recover_operator's series against the series solution of t' = 1 - lambda t - kappa t^2."""
    form = recover_operator(result.roots, result.pair.t.order)
    failures = [k for k, (a, b) in enumerate(zip(form.series, result.pair.t)) if a != b]
    return CheckReport("operator-closed-form", not failures, failures,
                       {"expression": form.expression, "order": result.pair.t.order})


def _standard_frame(P, n, scale, shift):
    # Phat_n(y) = s^-n P_n(s y - d)
    if scale == 1 and shift == 0:
        return P
    return P.compose(Poly.x() * scale - shift) / scale ** n


def eigen_equation_check(result, n_max):
    """The second-order operator identity on P_0..P_n_max, plus the family's own equation.

    (n+2) P_n = (x + l1 + (n+1) lambda) t(D) P_n + 2 t'(D) P_n + (k2 + n kappa) t(D)^2 P_n
    with t' the formal derivative of the series t.
    """
    spec, pair = result.spec, result.pair
    if pair.t.order - 1 < n_max:
        raise InsufficientOrderError(f"series order {pair.t.order} too small for degree {n_max}")
    polys = expand(pair, n_max)
    dt = pair.t.derivative()
    x = Poly.x()
    residuals = {}
    for n, P in enumerate(polys):
        tP = apply_operator(pair.t, P)
        rhs = ((x + spec.l1 + (n + 1) * spec.lambda_rec) * tP
               + apply_operator(dt, P) * 2
               + apply_operator(pair.t, tP) * (spec.k2 + n * spec.kappa))
        residual = rhs - P * (n + 2)
        if residual != Poly():
            residuals[n] = residual
    standard = None
    standard_failures = []
    fam = result.family
    if fam is not None:
        numeric = False
        for n, P in enumerate(polys):
            Phat = _standard_frame(P, n, result.scale, result.shift)
            residual = fam.equation_residual(n, Phat)
            if residual is None:
                numeric = True
                ok = all(r <= 1e-8 * max(1.0, abs(complex(Phat.leading)))
                         for r in fam.equation_residual_numeric(n, Phat))
            else:
                ok = residual == Poly()
            if not ok:
                standard_failures.append(n)
        standard = {"family": fam.label, "failures": standard_failures, "numeric": numeric}
    failures = sorted(set(residuals) | set(standard_failures))
    return CheckReport("eigen-equation", not failures, failures,
                       {"n_max": n_max, "display_residuals": residuals, "standard": standard})


def mgf_identity_check(result, order, pair=None):
    """sum mu_k u^k / k! == 1 / f(t(u)) through ``order``."""
    pair = result.pair if pair is None else pair
    order = min(order, pair.t.order, pair.f.order)
    moments = moments_from_recurrence(result.spec, order).moments
    lhs = TruncatedSeries(tuple(mu / math.factorial(k) for k, mu in enumerate(moments)), order)
    rhs = series.compose(pair.f.truncate(order).reciprocal(), pair.t.truncate(order))
    failures = [k for k in range(order + 1) if lhs[k] != rhs[k]]
    return CheckReport("mgf-identity", not failures, failures,
                       {"order": order, "first_difference": failures[0] if failures else None})
