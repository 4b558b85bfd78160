"""Orthogonality checks: moment functionals, Gram matrices and quadrature.

Families are passed in duck-typed (anything with ``recurrence()``,
``monic_polynomials()``, ``weight()`` and the weight hooks of
``families.FamilyInstance``), so this module does not import the catalogue.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy
from scipy.linalg import eigh_tridiagonal
from scipy.special import loggamma

from . import settings
from .errors import GammaPoleError, PositivityError, TruncationError
from .recurrence import favard_check
from .report import CheckReport
from .scalar import is_rational, to_json

logger = logging.getLogger(__name__)

CONTINUOUS = "continuous"
DISCRETE = "discrete"

FROM_RECURRENCE = "from-recurrence"
FROM_WEIGHT = "from-weight"


def log_gamma_complex(z):
    """Principal log Gamma(z) for complex z."""
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real):
        raise GammaPoleError(f"Gamma has a pole at {z.real:g}")
    return complex(loggamma(z))


@dataclass(frozen=True)
class MomentFunctional:
    moments: tuple
    provenance: str = FROM_RECURRENCE

    def __getitem__(self, k):
        return self.moments[k]

    def __len__(self):
        return len(self.moments)

    def hankel_determinants(self, size=None):
        """det[mu_(i+j)], 0 <= i, j <= m, for m = 0..size (exact)."""
        size = (len(self.moments) - 1) // 2 if size is None else size
        entries = [_to_sympy(mu) for mu in self.moments]
        out = []
        for m in range(size + 1):
            det = sympy.Matrix(m + 1, m + 1, lambda i, j: entries[i + j]).det()
            out.append(Fraction(int(det.p), int(det.q)))
        return out

    def to_json(self):
        return {"provenance": self.provenance, "moments": [to_json(mu) for mu in self.moments]}


def _to_sympy(value):
    if not is_rational(value):
        raise TypeError("Hankel determinants are computed for rational moments only")
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def moments_from_recurrence(spec, count):
    """mu_0..mu_count of the functional with L[1] = 1 and L[P_n] = 0 for n >= 1.

    x^k is kept in the P_n basis; multiplying by x acts through the Jacobi
    matrix, (x v)_j = v_(j-1) - l_(j+1) v_j - k_(j+2) v_(j+1), and mu_k is the
    P_0 coordinate.
    """
    needed = count // 2 + 1
    report = favard_check(spec, horizon=needed)
    if not report.passed and report.first_failure is not None and report.first_failure <= needed:
        raise PositivityError(
            f"k_(n+1) is not negative at n = {report.first_failure}", report.first_failure)
    coords = [Fraction(1)]
    moments = [Fraction(1)]
    for _ in range(count):
        size = len(coords) + 1
        nxt = []
        for j in range(size):
            value = 0
            if j >= 1:
                value = value + coords[j - 1]
            if j < len(coords):
                value = value - spec.l(j + 1) * coords[j]
            if j + 1 < len(coords):
                value = value - spec.k(j + 2) * coords[j + 1]
            nxt.append(value)
        coords = nxt
        moments.append(coords[0])
    return MomentFunctional(tuple(moments), FROM_RECURRENCE)


def quadrature_from_jacobi(spec, n_points, mu0=1.0):
    """Gauss rule from the Jacobi matrix: nodes are its eigenvalues, weights mu0 v_0^2."""
    report = favard_check(spec, horizon=max(n_points - 1, 1))
    bad = [n for n, s in enumerate(report.signs[: n_points - 1], start=1) if s >= 0]
    if bad:
        index = bad[0]
        raise PositivityError(f"Jacobi matrix of size {n_points} is not positive definite", index)
    diag = np.array([-float(spec.l(j + 1)) for j in range(n_points)])
    off = np.array([math.sqrt(-float(spec.k(j + 1))) for j in range(1, n_points)])
    nodes, vectors = eigh_tridiagonal(diag, off)
    return nodes, mu0 * vectors[0, :] ** 2


def zero_bound(spec, degree):
    """Gershgorin upper bound for the zeros of P_0..P_degree."""
    bound = -math.inf
    for j in range(degree):
        radius = math.sqrt(-float(spec.k(j + 1))) if j > 0 else 0.0
        if j + 1 < degree:
            radius += math.sqrt(-float(spec.k(j + 2)))
        bound = max(bound, -float(spec.l(j + 1)) + radius)
    return bound if degree else 0.0


@dataclass
class DiscreteSums:
    sums: list
    terms: int
    certified: bool
    bounds: list


def discrete_sums(weight, functions, ratio_sup=None, zero=0.0, degree=0, support=None):
    """Exact partial sums S_ij = sum_x w(x) g_i(x) g_j(x) with a certified tail.

    Past the zeros (x > zero) a term ratio is bounded by
    ratio_sup(x) * ((x + 1 - zero)/(x - zero))^degree; once that is below one the
    tail is geometric and summing stops when it is below GRAM_TAIL_RATIO of the
    diagonal scale. Without a ratio bound the sum stops at UNCERTIFIED_TERMS.
    """
    size = len(functions)
    sums = [[Fraction(0)] * size for _ in range(size)]
    limit = support if support is not None else (
        settings.MAX_DISCRETE_TERMS if ratio_sup is not None else settings.UNCERTIFIED_TERMS)
    bounds = [[0.0] * size for _ in range(size)]
    for x in range(limit):
        w = weight(x)
        values = [g(Fraction(x)) for g in functions]
        for i in range(size):
            for j in range(i, size):
                sums[i][j] += w * values[i] * values[j]
        if support is not None or ratio_sup is None or x <= zero + 1:
            continue
        rho = float(ratio_sup(x)) * ((x + 1 - zero) / (x - zero)) ** degree
        if rho >= 1:
            continue
        geometric = rho / (1 - rho)
        wf = float(w)
        done = True
        for i in range(size):
            for j in range(i, size):
                tail = abs(wf * float(values[i]) * float(values[j])) * geometric
                bounds[i][j] = tail
                scale = math.sqrt(abs(float(sums[i][i]) * float(sums[j][j])))
                if tail > settings.GRAM_TAIL_RATIO * scale:
                    done = False
        if done:
            logger.info("discrete sum certified after %d terms", x + 1)
            return DiscreteSums(_symmetric(sums), x + 1, True, _symmetric(bounds))
    if support is not None:
        return DiscreteSums(_symmetric(sums), limit, True, _symmetric(bounds))
    if ratio_sup is not None:
        raise TruncationError(
            f"tail bound not reached within {limit} terms", required_terms=2 * limit)
    logger.warning("discrete sum stopped after %d terms without a tail certificate", limit)
    return DiscreteSums(_symmetric(sums), limit, False, _symmetric(bounds))


def _symmetric(upper):
    size = len(upper)
    return [[upper[min(i, j)][max(i, j)] for j in range(size)] for i in range(size)]


def mp_cutoff(fam, degree):
    """Half-width L of [-L, L] where the Meixner-Pollaczek weight tail is negligible."""
    phi = fam.phi.radians
    rate = 2 * min(phi, math.pi - phi)
    growth = 2 * float(fam.lambda_mp) - 1 + degree
    target = -math.log(settings.MP_TAIL_TARGET)
    cutoff = settings.MP_MIN_CUTOFF
    while rate * cutoff - max(growth, 0.0) * math.log(cutoff) < target:
        cutoff += 10.0
    return cutoff


def mp_nodes(fam, degree, weight=None):
    """Composite Gauss-Legendre nodes on unit panels times weight values."""
    cutoff = mp_cutoff(fam, degree)
    base, base_w = np.polynomial.legendre.leggauss(settings.MP_PANEL_NODES)
    left = np.arange(-cutoff, cutoff)
    nodes = (left[:, None] + (base[None, :] + 1) / 2).ravel()
    gl = np.tile(base_w / 2, len(left))
    if weight is None:
        lam = float(fam.lambda_mp)
        values = np.exp((2 * fam.phi.radians - math.pi) * nodes + 2 * loggamma(lam + 1j * nodes).real)
    else:
        values = np.array([weight(x) for x in nodes])
    return nodes, gl * values


def _float_coeffs(P):
    return [complex(c).real if not is_rational(c) else float(c) for c in P.coeffs] or [0.0]


def gram_check(fam, n_max):
    """Gram matrix of P_0..P_n_max against the family's weight."""
    if fam.weight_spec.kind == DISCRETE and fam.weight_ratio_sup(0) is None:
        return _gram_finite(fam, n_max)
    if fam.weight_spec.kind == DISCRETE:
        return _gram_discrete(fam, n_max)
    if fam.relative_moments(0) is not None:
        return _gram_moments(fam, n_max)
    return _gram_quadrature(fam, n_max)


def _offdiag_failures(matrix, exact):
    failures = []
    for m in range(len(matrix)):
        if not matrix[m][m] > 0:
            failures.append([m, m])
        for n in range(m + 1, len(matrix)):
            if exact and matrix[m][n] != 0:
                failures.append([m, n])
    return failures


def _gram_finite(fam, n_max):
    n_max = min(n_max, fam.N)
    polys = fam.monic_polynomials(n_max)
    sums = discrete_sums(fam.weight, polys, support=fam.N + 1)
    failures = _offdiag_failures(sums.sums, exact=True)
    return CheckReport("gram", not failures, failures,
                       {"family": fam.label, "method": "exact-finite-sum", "n_max": n_max,
                        "diagonal": [sums.sums[m][m] for m in range(n_max + 1)]})


def _gram_discrete(fam, n_max):
    polys = fam.monic_polynomials(n_max)
    spec = fam.recurrence()
    zero = zero_bound(spec, n_max)
    sums = discrete_sums(fam.weight, polys, fam.weight_ratio_sup, zero, 2 * n_max)
    failures = _offdiag_failures(sums.sums, exact=False)
    worst = 0.0
    for m in range(n_max + 1):
        for n in range(m + 1, n_max + 1):
            scale = math.sqrt(float(sums.sums[m][m]) * float(sums.sums[n][n]))
            ratio = abs(float(sums.sums[m][n])) / scale
            worst = max(worst, ratio)
            if ratio >= settings.GRAM_OFFDIAG_BOUND:
                failures.append([m, n])
    return CheckReport("gram", not failures, failures,
                       {"family": fam.label, "method": "certified-discrete-sum", "n_max": n_max,
                        "terms": sums.terms, "zero_bound": zero, "max_offdiag_ratio": worst,
                        "bound": settings.GRAM_OFFDIAG_BOUND})


def _gram_moments(fam, n_max):
    polys = fam.monic_polynomials(n_max)
    mu = fam.relative_moments(2 * n_max)
    size = n_max + 1
    matrix = [[sum((a * b * mu[i + j] for i, a in enumerate(polys[m].coeffs)
                    for j, b in enumerate(polys[n].coeffs)), Fraction(0))
               for n in range(size)] for m in range(size)]
    failures = _offdiag_failures(matrix, exact=True)
    return CheckReport("gram", not failures, failures,
                       {"family": fam.label, "method": "exact-moments", "n_max": n_max,
                        "base": getattr(fam, "base_constant", None),
                        "diagonal": [matrix[m][m] for m in range(size)]})


def _gram_quadrature(fam, n_max, tol=None):
    tol = settings.MP_GRAM_TOL if tol is None else tol
    polys = fam.monic_polynomials(n_max)
    nodes, weights = mp_nodes(fam, 2 * n_max)
    values = np.array([np.polynomial.polynomial.polyval(nodes, _float_coeffs(P)) for P in polys])
    matrix = (values * weights) @ values.T
    diag = np.sqrt(np.abs(np.diag(matrix)))
    normalized = matrix / np.outer(diag, diag)
    failures = []
    for m in range(n_max + 1):
        if not matrix[m, m] > 0:
            failures.append([m, m])
        for n in range(m + 1, n_max + 1):
            if abs(normalized[m, n]) >= tol:
                failures.append([m, n])
    off = normalized - np.diag(np.diag(normalized))
    return CheckReport("gram", not failures, failures,
                       {"family": fam.label, "method": "gauss-legendre-panels", "n_max": n_max,
                        "nodes": int(nodes.size), "max_offdiag_ratio": float(np.abs(off).max()),
                        "bound": tol})


def moment_match(fam, count, weight=None, ratio_sup=None, tol=None):
    """Compare mu_k / mu_0 of the weight with the moments of the recurrence functional.

    ``weight`` replaces the family's own weight (negative controls); an
    infinite discrete sum is only certified when ``ratio_sup`` bounds it.
    """
    tol = settings.MOMENT_TOL if tol is None else tol
    expected = moments_from_recurrence(fam.recurrence(), count).moments
    certified = True
    terms = None
    if weight is None and fam.relative_moments(0) is not None:
        observed = fam.relative_moments(count)
        exact = True
    elif fam.weight_spec.kind == DISCRETE:
        own = weight is None
        weight = fam.weight_spec.evaluate if own else weight
        if own:
            ratio_sup = fam.weight_ratio_sup
        monomials = [_monomial(k) for k in range(count + 1)]
        if fam.weight_ratio_sup(0) is None:
            sums = discrete_sums_row(weight, monomials, support=fam.N + 1)
        else:
            sums = discrete_sums_row(weight, monomials, ratio_sup=ratio_sup, degree=count)
        certified, terms = sums.certified, sums.terms
        observed = [s / sums.sums[0] for s in sums.sums]
        exact = fam.weight_ratio_sup(0) is None
    else:
        nodes, weights = mp_nodes(fam, count, weight)
        raw = [float(np.dot(weights, nodes ** k)) for k in range(count + 1)]
        observed = [r / raw[0] for r in raw]
        exact = False
    observed = MomentFunctional(tuple(observed), FROM_WEIGHT)
    failures = []
    for k, (mu, obs) in enumerate(zip(expected, observed.moments)):
        if exact:
            ok = mu == obs
        else:
            ok = abs(float(obs) - float(mu)) <= tol * max(1.0, abs(float(mu)))
        if not ok:
            failures.append(k)
    return CheckReport("moment-match", not failures, failures,
                       {"family": fam.label, "count": count, "certified": certified,
                        "terms": terms, "recurrence": list(expected),
                        "weight": observed.to_json()})


def _monomial(k):
    return lambda x: x ** k


@dataclass
class _MomentSums:
    sums: list
    terms: int
    certified: bool


def discrete_sums_row(weight, functions, ratio_sup=None, degree=0, support=None):
    """Exact partial sums sum_x w(x) g_k(x) with the same tail certificate as discrete_sums."""
    sums = [Fraction(0)] * len(functions)
    limit = support if support is not None else (
        settings.MAX_DISCRETE_TERMS if ratio_sup is not None else settings.UNCERTIFIED_TERMS)
    for x in range(limit):
        w = weight(x)
        values = [g(Fraction(x)) for g in functions]
        for k, v in enumerate(values):
            sums[k] += w * v
        if support is not None or ratio_sup is None or x < 1:
            continue
        rho = float(ratio_sup(x)) * ((x + 1) / x) ** degree
        if rho >= 1:
            continue
        geometric = rho / (1 - rho)
        wf = float(w)
        if all(abs(wf * float(v)) * geometric <= settings.GRAM_TAIL_RATIO * abs(float(s))
               for v, s in zip(values, sums) if s != 0):
            logger.info("moment sums certified after %d terms", x + 1)
            return _MomentSums(sums, x + 1, True)
    if support is not None:
        return _MomentSums(sums, limit, True)
    if ratio_sup is not None:
        raise TruncationError(
            f"tail bound not reached within {limit} terms", required_terms=2 * limit)
    logger.warning("moment sums stopped after %d terms without a tail certificate", limit)
    return _MomentSums(sums, limit, False)
