"""Special functions behind group matrix elements.

Jacobi polynomials, Wigner d-functions with a matrix-exponential oracle,
the Gauss hypergeometric series, complex log-gamma, and the discrete /
mixed / continuous series matrix elements of the hyperbolic analog group.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import (
    ConvergenceError,
    DomainError,
    PoleError,
    UnsupportedBranchError,
)
from .halfint import HalfInt, HalfIntLike
from .probability import SeriesKind

#: Series evaluation of the hypergeometric function needs |z| <= this.
HYP2F1_RADIUS = 0.95

#: Discrete-series rapidity domain: |z(it)| = (cosh t - 1)/2 < 0.95.
DISCRETE_COSH_LIMIT = 2.9

#: Mixed/continuous rapidity domain: |z(t)| = cosh(t)/2 < 0.95.
CONTINUOUS_COSH_LIMIT = 1.9


# ----------------------------------------------------------------------
# Jacobi polynomials


def _gbinom(alpha: float, k: int) -> float:
    """Generalized binomial coefficient C(alpha, k) for integer k >= 0."""
    out = 1.0
    for i in range(1, k + 1):
        out *= (alpha - k + i) / i
    return out


def _jacobi_direct(n: int, a: float, b: float, x: float) -> float:
    """Direct summation form; total in (a, b), used as recurrence fallback."""
    half_minus = (x - 1.0) / 2.0
    half_plus = (x + 1.0) / 2.0
    return math.fsum(
        _gbinom(n + a, n - s) * _gbinom(n + b, s) * half_minus**s * half_plus ** (n - s)
        for s in range(n + 1)
    )


def jacobi(n: int, a: float, b: float, x: float) -> float:
    """Jacobi polynomial P_n^(a,b)(x) by the three-term recurrence.

    Any real (a, b) is accepted; degenerate recurrence denominators
    (possible for negative integer a+b) fall back to direct summation.
    """
    if n < 0:
        raise DomainError("polynomial degree must be nonnegative")
    if n == 0:
        return 1.0
    p_prev = 1.0
    p_curr = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0
    for k in range(2, n + 1):
        denom = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0)
        if abs(denom) < 1e-6:
            return _jacobi_direct(n, a, b, x)
        c1 = (2.0 * k + a + b - 1.0) * (
            (2.0 * k + a + b) * (2.0 * k + a + b - 2.0) * x + a * a - b * b
        )
        c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b)
        p_prev, p_curr = p_curr, (c1 * p_curr - c2 * p_prev) / denom
    return p_curr


# ----------------------------------------------------------------------
# Complex log-gamma (Lanczos, g = 7, 9 coefficients)

_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def _nonpos_int(z: complex) -> Optional[int]:
    """Return k >= 0 when z == -k exactly, else None."""
    if z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real):
        return int(-z.real)
    return None


def _sin_pi(z: complex) -> complex:
    """sin(pi z) with range reduction on the real part."""
    n = math.floor(z.real)
    s = cmath.sin(cmath.pi * (z - n))
    return -s if n % 2 else s


def log_gamma(z: Union[complex, float]) -> complex:
    """Principal-branch log Gamma via the Lanczos approximation.

    Reflection handles Re z < 0.5; nonpositive integers raise PoleError.
    """
    z = complex(z)
    if _nonpos_int(z) is not None:
        raise PoleError(f"log_gamma pole at {z}")
    if z.real < 0.5:
        return (
            math.log(math.pi) - cmath.log(_sin_pi(z)) - log_gamma(1.0 - z)
        )
    w = z - 1.0
    x = complex(_LANCZOS_C[0])
    for i, coeff in enumerate(_LANCZOS_C[1:], start=1):
        x += coeff / (w + i)
    t = w + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (w + 0.5) * cmath.log(t) - t + cmath.log(x)


def rgamma(z: Union[complex, float]) -> complex:
    """1 / Gamma(z), equal to 0 at the poles of Gamma."""
    z = complex(z)
    if _nonpos_int(z) is not None:
        return 0.0 + 0.0j
    return cmath.exp(-log_gamma(z))


# ----------------------------------------------------------------------
# Gauss hypergeometric series


def hyp2f1(
    a: Union[complex, float],
    b: Union[complex, float],
    c: Union[complex, float],
    z: Union[complex, float],
    series_tol: float = 1e-16,
    max_terms: int = 10**6,
) -> complex:
    """2F1(a, b; c; z) by direct power series.

    Requires |z| <= 0.95 unless a or b is a nonpositive integer, in which
    case the series terminates and any z is accepted.  The sum stops once
    three consecutive terms fall below `series_tol` relative to the
    partial sum.
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    degrees = [d for d in (_nonpos_int(a), _nonpos_int(b)) if d is not None]
    n_term = min(degrees) if degrees else None
    if n_term is None and abs(z) > HYP2F1_RADIUS:
        raise DomainError(
            f"|z| = {abs(z):.4f} outside the series domain and no terminating parameter"
        )
    c_pole = _nonpos_int(c)
    if c_pole is not None and (n_term is None or c_pole < n_term):
        raise PoleError(f"c = {c} hits a pole before the series terminates")

    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    small_streak = 0
    k = 0
    while True:
        if n_term is not None and k == n_term:
            break
        numerator = (a + k) * (b + k)
        if numerator == 0:
            break
        term = term * numerator * z / ((c + k) * (k + 1))
        total += term
        k += 1
        if n_term is None:
            if abs(term) < series_tol * abs(total):
                small_streak += 1
                if small_streak >= 3:
                    break
            else:
                small_streak = 0
            if k >= max_terms:
                raise ConvergenceError(f"no convergence after {max_terms} terms")
    return total


# ----------------------------------------------------------------------
# Wigner d-functions


def _weight_triple(
    j: HalfIntLike, m_prime: HalfIntLike, m: HalfIntLike
) -> tuple[int, int, int]:
    two_j = HalfInt.coerce(j).doubled
    if two_j < 0:
        raise DomainError("j must be nonnegative")
    doubled = []
    for label, value in (("m'", m_prime), ("m", m)):
        w = HalfInt.coerce(value).doubled
        if (w - two_j) % 2:
            raise DomainError(f"{label} must share the parity class of j")
        if abs(w) > two_j:
            raise DomainError(f"|{label}| <= j required")
        doubled.append(w)
    return two_j, doubled[0], doubled[1]


def s_factor(j: HalfIntLike, m_prime: HalfIntLike, m: HalfIntLike, theta: float) -> float:
    """Envelope factor of a squared d-element in the canonical sector.

    S = [(j+m')!(j-m')! / ((j+m)!(j-m)!)] cos^(2(m'+m))(t/2) sin^(2(m'-m))(t/2),
    defined for m'+m >= 0 and m'-m >= 0; factorials go through log space.
    """
    two_j, two_mp, two_m = _weight_triple(j, m_prime, m)
    if two_mp + two_m < 0 or two_mp - two_m < 0:
        raise DomainError("canonical sector needs m'+m >= 0 and m'-m >= 0")
    log_ratio = (
        math.lgamma((two_j + two_mp) // 2 + 1)
        + math.lgamma((two_j - two_mp) // 2 + 1)
        - math.lgamma((two_j + two_m) // 2 + 1)
        - math.lgamma((two_j - two_m) // 2 + 1)
    )
    cos_sq = math.cos(theta / 2.0) ** 2
    sin_sq = math.sin(theta / 2.0) ** 2
    return (
        math.exp(log_ratio)
        * cos_sq ** ((two_mp + two_m) // 2)
        * sin_sq ** ((two_mp - two_m) // 2)
    )


def _wigner_canonical(two_j: int, two_mp: int, two_m: int, theta: float) -> float:
    # caller guarantees m'+m >= 0 and m'-m >= 0
    log_ratio = 0.5 * (
        math.lgamma((two_j + two_mp) // 2 + 1)
        + math.lgamma((two_j - two_mp) // 2 + 1)
        - math.lgamma((two_j + two_m) // 2 + 1)
        - math.lgamma((two_j - two_m) // 2 + 1)
    )
    degree = (two_j - two_mp) // 2
    a = (two_mp - two_m) // 2
    b = (two_mp + two_m) // 2
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    poly = jacobi(degree, float(a), float(b), math.cos(theta))
    return math.exp(log_ratio) * c**b * s**a * poly


def _wigner_dispatch(two_j: int, two_mp: int, two_m: int, theta: float) -> float:
    sum_w = two_mp + two_m
    diff_w = two_mp - two_m
    if sum_w >= 0 and diff_w >= 0:
        return _wigner_canonical(two_j, two_mp, two_m, theta)
    if sum_w <= 0 and diff_w >= 0:
        return _wigner_canonical(two_j, -two_m, -two_mp, theta)
    sign = -1.0 if (diff_w // 2) % 2 else 1.0
    if sum_w >= 0:
        return sign * _wigner_canonical(two_j, two_m, two_mp, theta)
    return sign * _wigner_canonical(two_j, -two_mp, -two_m, theta)


def wigner_d(j: HalfIntLike, m_prime: HalfIntLike, m: HalfIntLike, theta: float) -> float:
    """Rotation matrix element d^j_{m'm}(theta) about the y-axis.

    The canonical sector (m'+m >= 0, m'-m >= 0) is evaluated from the
    Jacobi-polynomial form with signed half-angle powers; remaining
    sectors are reached through the index symmetries
    d_{m'm} = d_{-m,-m'} = (-1)^(m'-m) d_{mm'} = (-1)^(m'-m) d_{-m',-m}.
    """
    two_j, two_mp, two_m = _weight_triple(j, m_prime, m)
    return _wigner_dispatch(two_j, two_mp, two_m, float(theta))


def dmatrix(j: HalfIntLike, theta: float) -> np.ndarray:
    """Full (2j+1) x (2j+1) rotation matrix, rows/columns m', m ascending."""
    two_j = HalfInt.coerce(j).doubled
    if two_j < 0:
        raise DomainError("j must be nonnegative")
    size = two_j + 1
    theta = float(theta)
    out = np.empty((size, size))
    for r, two_mp in enumerate(range(-two_j, two_j + 1, 2)):
        for c, two_m in enumerate(range(-two_j, two_j + 1, 2)):
            out[r, c] = _wigner_dispatch(two_j, two_mp, two_m, theta)
    return out


def _expm_taylor(a: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring with a Taylor core."""
    norm = float(np.linalg.norm(a, 1))
    squarings = max(0, math.ceil(math.log2(norm))) if norm > 1.0 else 0
    b = a / (2.0**squarings)
    size = a.shape[0]
    out = np.eye(size, dtype=complex)
    term = np.eye(size, dtype=complex)
    for k in range(1, 80):
        term = term @ b / k
        out = out + term
        if np.linalg.norm(term, 1) <= 1e-18 * max(1.0, np.linalg.norm(out, 1)):
            break
    for _ in range(squarings):
        out = out @ out
    return out


def wigner_oracle(j: HalfIntLike, theta: float) -> np.ndarray:
    """Independent route to dmatrix: exponentiate the tridiagonal generator.

    Builds the y-axis angular-momentum generator on the ascending weight
    basis and sums its scaled Taylor series; restricted to 2j <= 12.
    """
    two_j = HalfInt.coerce(j).doubled
    if two_j < 0:
        raise DomainError("j must be nonnegative")
    if two_j > 12:
        raise DomainError("oracle restricted to 2j <= 12")
    size = two_j + 1
    gen = np.zeros((size, size), dtype=complex)
    for idx in range(size - 1):
        two_m = -two_j + 2 * idx
        coupling = math.sqrt((two_j - two_m) * (two_j + two_m + 2)) / 2.0
        gen[idx + 1, idx] = 0.5j * coupling
        gen[idx, idx + 1] = -0.5j * coupling
    return _expm_taylor(-1j * float(theta) * gen).real


# ----------------------------------------------------------------------
# SU(1,1)-type matrix elements


@dataclass(frozen=True)
class Su11Args:
    """Parameter bundle for discrete/mixed/continuous series elements.

    Discrete series use spin j = -k/2 (k >= 1); continuous series use
    j = -1/2 + i s with parity label sigma.  `m` is a weight on the
    discrete lattice or a real continuous label depending on the
    operation.
    """

    series: SeriesKind
    m_prime: HalfInt
    m: Union[HalfInt, float]
    t: float
    k: Optional[int] = None
    s: Optional[float] = None
    sigma: int = 0

    def __post_init__(self) -> None:
        series = SeriesKind(self.series)
        object.__setattr__(self, "series", series)
        object.__setattr__(self, "m_prime", HalfInt.coerce(self.m_prime))
        t = float(self.t)
        if t < 0.0:
            raise DomainError("rapidity t must be nonnegative")
        object.__setattr__(self, "t", t)
        if self.sigma not in (0, 1):
            raise DomainError("sigma must be 0 or 1")
        if series in (SeriesKind.DISCRETE_POSITIVE, SeriesKind.DISCRETE_NEGATIVE):
            if self.k is None or int(self.k) < 1:
                raise DomainError("discrete series need an integer k >= 1")
            object.__setattr__(self, "k", int(self.k))
        else:
            if self.s is None or not float(self.s) > 0.0:
                raise DomainError("continuous series need s > 0")
            object.__setattr__(self, "s", float(self.s))

    @property
    def is_discrete(self) -> bool:
        return self.series in (
            SeriesKind.DISCRETE_POSITIVE,
            SeriesKind.DISCRETE_NEGATIVE,
        )


def _check_discrete_weight(k: int, value: HalfIntLike, positive: bool, label: str) -> int:
    doubled = HalfInt.coerce(value).doubled
    if (doubled - k) % 2:
        raise DomainError(f"{label} must sit on the k = {k} weight lattice")
    if positive and doubled < k:
        raise DomainError(f"{label} >= k/2 required on the positive series")
    if not positive and doubled > -k:
        raise DomainError(f"{label} <= -k/2 required on the negative series")
    return doubled


def _require_discrete_rapidity(t: float) -> None:
    if math.cosh(t) >= DISCRETE_COSH_LIMIT:
        raise DomainError(
            f"cosh(t) = {math.cosh(t):.4f} outside the discrete-series domain (< {DISCRETE_COSH_LIMIT})"
        )


def _require_continuous_rapidity(t: float) -> None:
    if math.cosh(t) >= CONTINUOUS_COSH_LIMIT:
        raise DomainError(
            f"cosh(t) = {math.cosh(t):.4f} outside the series domain (< {CONTINUOUS_COSH_LIMIT})"
        )


def _bargmann_positive(k: int, two_mp: int, two_m: int, t: float) -> complex:
    """Canonical positive-series element; caller ensures lattice bounds."""
    sign = 1.0
    if two_mp < two_m:
        # index swap picks up (-1)^(m'-m)
        if ((two_mp - two_m) // 2) % 2:
            sign = -1.0
        two_mp, two_m = two_m, two_mp
    mp_m = (two_mp - two_m) // 2
    log_norm = 0.5 * (
        math.lgamma((two_mp - k) // 2 + 1)
        + math.lgamma((two_mp + k) // 2)
        - math.lgamma((two_m - k) // 2 + 1)
        - math.lgamma((two_m + k) // 2)
    )
    z = (1.0 - math.cosh(t)) / 2.0
    # Pfaff-transformed series: terminates at degree m+j and avoids the
    # catastrophic cancellation of the raw alternating series at large m'.
    w = 0.0 if z == 0.0 else z / (z - 1.0)
    series = hyp2f1((two_mp + k) // 2, -((two_m - k) // 2), mp_m + 1, w)
    prefactor = math.exp(log_norm - math.lgamma(mp_m + 1))
    envelope = (1.0 - z) ** (-(mp_m + k) / 2.0) * complex(z) ** (mp_m / 2.0)
    return sign * prefactor * envelope * series


def bargmann_b(args: Su11Args) -> complex:
    """Discrete-series boost matrix element b^j_{m'm}(t).

    Hypergeometric route: b = N z^((m'-m)/2) (1-z)^((m'+m)/2)
    2F1(m'-j, m'+j+1; m'-m+1; z) / (m'-m)! with z = (1 - cosh t)/2.
    """
    if not args.is_discrete:
        raise DomainError("bargmann_b is defined for the discrete series")
    _require_discrete_rapidity(args.t)
    positive = args.series is SeriesKind.DISCRETE_POSITIVE
    two_mp = _check_discrete_weight(args.k, args.m_prime, positive, "m'")
    two_m = _check_discrete_weight(args.k, args.m, positive, "m")
    if positive:
        return _bargmann_positive(args.k, two_mp, two_m, args.t)
    # negative series mirrors onto the positive one with (-1)^(m'-m)
    sign = -1.0 if ((two_mp - two_m) // 2) % 2 else 1.0
    return sign * _bargmann_positive(args.k, -two_mp, -two_m, args.t)


def bargmann_b_continued(args: Su11Args) -> float:
    """|b|^2 by the hyperbolic continuation of the rotation-element form.

    The squared element is rebuilt from a terminating Jacobi polynomial of
    degree m+j in cosh(t) with half-angle hyperbolic envelopes, an
    algebraically independent route from `bargmann_b`.
    """
    if not args.is_discrete:
        raise DomainError("bargmann_b_continued is defined for the discrete series")
    _require_discrete_rapidity(args.t)
    k = args.k
    positive = args.series is SeriesKind.DISCRETE_POSITIVE
    two_mp = _check_discrete_weight(k, args.m_prime, positive, "m'")
    two_m = _check_discrete_weight(k, args.m, positive, "m")
    if not positive:
        two_mp, two_m = -two_mp, -two_m
    if two_mp < two_m:
        two_mp, two_m = two_m, two_mp  # modulus is swap-invariant
    degree = (two_m - k) // 2
    alpha = (two_mp - two_m) // 2
    log_prefactor = (
        math.lgamma((two_mp + k) // 2)
        + math.lgamma((two_m - k) // 2 + 1)
        - math.lgamma((two_m + k) // 2)
        - math.lgamma((two_mp - k) // 2 + 1)
    )
    ch = math.cosh(args.t / 2.0)
    sh = math.sinh(args.t / 2.0)
    poly = jacobi(degree, float(alpha), float(-(two_mp + two_m) // 2), math.cosh(args.t))
    return (
        math.exp(log_prefactor)
        * ch ** (-(two_mp + two_m))
        * sh ** (2 * alpha)
        * poly
        * poly
    )


def c_function(args: Su11Args) -> complex:
    """Mixed-basis element c^j_{m'm}(t): discrete row label, continuous column.

    Only the m' >= -j branch is defined; the complementary branch has no
    closed form here and raises UnsupportedBranchError.  Evaluation only,
    no normalization contract.
    """
    if not args.is_discrete:
        raise DomainError("c_function needs a discrete-series spin j = -k/2")
    if args.series is SeriesKind.DISCRETE_NEGATIVE:
        raise UnsupportedBranchError(
            "the m' <= j mixed-basis branch is not defined"
        )
    _require_continuous_rapidity(args.t)
    k = args.k
    two_mp = _check_discrete_weight(k, args.m_prime, True, "m'")
    mp = two_mp / 2.0
    m = float(args.m)
    j = -k / 2.0
    im = 1j * m

    s_norm = math.exp(
        0.5
        * (
            math.lgamma((two_mp + k) // 2)
            + math.lgamma((two_mp - k) // 2 + 1)
        )
        - math.lgamma((two_mp - k) // 2 + 1)
    )
    r_norm = cmath.exp(
        log_gamma(j + 1.0 + im)
        + log_gamma((-j - im) / 2.0)
        + log_gamma((-j + 1.0 + im) / 2.0)
        - math.lgamma((two_mp + k) // 2)
    ) * rgamma(1.0 - mp + im)
    norm = math.sqrt(2.0) * 2.0 ** (-j - 2.0) * s_norm * r_norm / math.pi

    z = (1.0 + 1j * math.sinh(args.t)) / 2.0
    a = -mp
    envelope = (1.0 - z) ** ((a - im) / 2.0) * z ** ((a + im) / 2.0)
    series = hyp2f1(-j + a, j + a + 1.0, a + im + 1.0, z)
    return norm * envelope * series


def l_function(args: Su11Args, series_tol: float = 1e-16) -> complex:
    """Continuous-series element l^j_{m'm sigma}(t) for j = -1/2 + i s.

    Combines the two hypergeometric branches at z(t) and z(-t) with the
    parity label sigma.  Evaluation only, no normalization contract.
    """
    if args.is_discrete:
        raise DomainError("l_function needs a continuous-series spin")
    if args.series is SeriesKind.CONTINUOUS_INTEGER and not args.m_prime.is_integer:
        raise DomainError("m' must be an integer on this lattice")
    if (
        args.series is SeriesKind.CONTINUOUS_HALF_INTEGER
        and args.m_prime.is_integer
    ):
        raise DomainError("m' must be half-odd on this lattice")
    _require_continuous_rapidity(args.t)
    j = complex(-0.5, args.s)
    m = float(args.m)
    im = 1j * m
    mp = float(args.m_prime)
    sigma = args.sigma

    s_norm = cmath.exp(
        0.5 * (log_gamma(mp - j) + log_gamma(mp + j + 1.0)) - log_gamma(mp + j + 1.0)
    )

    def t_factor(a: float) -> complex:
        denominator = (1j**sigma) * cmath.sin(cmath.pi * (-j + sigma - im) / 2.0)
        if abs(denominator) < 1e-12:
            raise PoleError("sine denominator of the parity factor vanishes")
        return (
            cmath.exp(
                (j - 1.0) * math.log(2.0)
                + log_gamma(-j + im)
                - log_gamma(-a - j)
            )
            * rgamma(a + 1.0 + im)
            / denominator
        )

    def f_factor(a: float, z: complex) -> complex:
        series = hyp2f1(
            -j + a, j + a + 1.0, a + im + 1.0, z, series_tol=series_tol
        )
        return (1.0 - z) ** ((a - im) / 2.0) * z ** ((a + im) / 2.0) * series

    z_plus = (1.0 - 1j * math.sinh(args.t)) / 2.0
    z_minus = (1.0 + 1j * math.sinh(args.t)) / 2.0
    parity_sign = -1.0 if sigma % 2 else 1.0
    return s_norm * (
        t_factor(mp) * f_factor(mp, z_plus)
        - parity_sign * t_factor(-mp) * f_factor(-mp, z_minus)
    )
