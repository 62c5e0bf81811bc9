"""Floating-point asymptotics: expansions, periodic fluctuations, special functions.

The fluctuation terms live on the critical line points chi_k = 2*pi*i*k/log 2,
so complex gamma and zeta evaluators are provided: gamma by a Lanczos
rational approximation in log form (reflected for Re < 1/2), zeta by
Euler-Maclaurin summation (reflected via the functional equation for
Re < 1/2).  Log-space reflection keeps intermediate magnitudes bounded for
large imaginary parts, where sin(pi s) alone would overflow.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

#: Fourier truncation used by default for fluctuation sums.
DEFAULT_FOURIER_TERMS = 20

_LOG2 = math.log(2.0)


def chi(k: int) -> complex:
    """The k-th pole abscissa 2*pi*i*k/log 2 contributing Fourier mode k."""
    return complex(0.0, 2.0 * math.pi * k / _LOG2)


# ---------------------------------------------------------------------------
# Complex gamma (Lanczos, g = 7).
# ---------------------------------------------------------------------------

_LANCZOS_G = 7.0
_LANCZOS = (
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


def _log_sin(z: complex) -> complex:
    """log(sin(z)), stable for large |Im z| (any 2*pi*i ambiguity is harmless
    because callers only exponentiate sums of logs)."""
    y = z.imag
    if y > 20.0:
        # sin z = (i/2) e^{-iz} (1 - e^{2iz}) with |e^{2iz}| = e^{-2y} tiny
        log_half_i = complex(-math.log(2.0), math.pi / 2.0)
        return log_half_i - 1j * z + cmath.log(1.0 - cmath.exp(2j * z))
    if y < -20.0:
        return _log_sin(z.conjugate()).conjugate()
    return cmath.log(cmath.sin(z))


def log_gamma(s: complex) -> complex:
    """log Gamma(s) up to an irrelevant multiple of 2*pi*i."""
    s = complex(s)
    if s.real < 0.5:
        if s.imag == 0.0 and s.real == int(s.real):
            raise ValueError(f"gamma pole at {s}")
        return cmath.log(math.pi) - _log_sin(math.pi * s) - log_gamma(1.0 - s)
    z = s - 1.0
    acc = _LANCZOS[0]
    for i, coeff in enumerate(_LANCZOS[1:], start=1):
        acc += coeff / (z + i)
    t = z + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * math.pi) + (z + 0.5) * cmath.log(t) - t + cmath.log(acc)


def complex_gamma(s: complex) -> complex:
    """Gamma(s) for complex s away from the nonpositive integers."""
    return cmath.exp(log_gamma(s))


# ---------------------------------------------------------------------------
# Complex zeta (Euler-Maclaurin plus functional equation).
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _bernoulli(limit: int = 32) -> tuple[Fraction, ...]:
    """B_0..B_limit by the defining recurrence, exact."""
    values = [Fraction(1)]
    for m in range(1, limit + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * values[j]
        values.append(-acc / (m + 1))
    return tuple(values)


def _zeta_em(s: complex, want_derivative: bool = False) -> tuple[complex, complex]:
    """Euler-Maclaurin zeta (and optionally its s-derivative).

    Valid well beyond the usual Re(s) > 1 region: with the correction terms
    below the formula is accurate down to Re(s) >= -1.2, which covers the
    functional-equation self-checks on the chi_k - 1 line.  Terms are
    differentiated analytically, so the derivative carries the same accuracy
    as the value.
    """
    if s.real < -1.2:
        raise ValueError("Euler-Maclaurin evaluation restricted to Re(s) >= -1.2")
    n_terms = max(25, int(1.3 * abs(s.imag)) + 20)
    value = 0.0 + 0.0j
    deriv = 0.0 + 0.0j
    for n in range(1, n_terms):
        ln = math.log(n)
        power = cmath.exp(-s * ln)
        value += power
        if want_derivative:
            deriv -= ln * power
    ln_n = math.log(n_terms)
    n_pow = cmath.exp(-s * ln_n)  # N^{-s}
    value += 0.5 * n_pow
    tail = n_pow * n_terms / (s - 1.0)  # N^{1-s}/(s-1)
    value += tail
    if want_derivative:
        deriv += -0.5 * ln_n * n_pow
        deriv += -ln_n * tail - tail / (s - 1.0)
    bern = _bernoulli()
    rising = s  # (s)_{2k-1} for k = 1 is s itself
    rising_log_deriv = [1.0 / s] if want_derivative else []
    n_inv = 1.0 / n_terms
    factor = n_pow * n_inv  # N^{-s-1}
    prev_mag = math.inf
    for k in range(1, len(bern) // 2):
        coeff = float(bern[2 * k]) / math.factorial(2 * k)
        term = coeff * rising * factor
        mag = abs(term)
        if mag > prev_mag:
            break  # asymptotic series started diverging
        value += term
        if want_derivative:
            dsum = sum(rising_log_deriv)
            deriv += coeff * factor * (rising * (dsum - ln_n))
        if mag <= 1e-18 * max(abs(value), 1.0):
            break
        prev_mag = mag
        # extend (s)_{2k-1} -> (s)_{2k+1} and N^{-s-2k+1} -> N^{-s-2k-1}
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        if want_derivative:
            rising_log_deriv.append(1.0 / (s + 2 * k - 1))
            rising_log_deriv.append(1.0 / (s + 2 * k))
        factor *= n_inv * n_inv
    return value, deriv


def complex_zeta(s: complex) -> complex:
    """zeta(s) for complex s != 1."""
    s = complex(s)
    if abs(s - 1.0) < 1e-12:
        raise ValueError("zeta pole at s = 1")
    if s.real >= 0.5 or s == 0.0:
        return _zeta_em(s)[0]
    # Functional equation in log space: the gamma decay cancels the sine
    # growth, so only the combined exponent is exponentiated.
    reflected = _zeta_em(1.0 - s)[0]
    exponent = (
        s * _LOG2
        + (s - 1.0) * math.log(math.pi)
        + _log_sin(math.pi * s / 2.0)
        + log_gamma(1.0 - s)
    )
    return cmath.exp(exponent) * reflected


def zeta_functional_check(s: complex) -> float:
    """Relative gap between the direct Euler-Maclaurin value at s and the
    functional-equation route through 1 - s.  Both sides work down to
    Re(s) >= -1.2, so every chi_k and chi_k +- 1 point is coverable."""
    s = complex(s)
    direct = _zeta_em(s)[0]
    exponent = (
        s * _LOG2
        + (s - 1.0) * math.log(math.pi)
        + _log_sin(math.pi * s / 2.0)
        + log_gamma(1.0 - s)
    )
    reflected = cmath.exp(exponent) * _zeta_em(1.0 - s)[0]
    return abs(direct - reflected) / abs(reflected)


def zeta_eta_route(s: complex) -> complex:
    """zeta(s) through the alternating (eta) series with Borwein acceleration.

    Independent of the Euler-Maclaurin evaluator; used as the second route
    in the self-checks.  For Re(s) < 0.5 the same functional-equation factor
    is applied, so the comparison probes the series evaluation itself.

    The conversion divides by 1 - 2^(1-s), which vanishes on the lattice
    s = 1 + chi_k; evaluation is rejected near those points (the functional
    equation check covers them instead).
    """
    s = complex(s)
    if abs(s - 1.0) < 1e-12:
        raise ValueError("zeta pole at s = 1")
    if s.real < 0.5 and s != 0.0:
        reflected = zeta_eta_route(1.0 - s)
        exponent = (
            s * _LOG2
            + (s - 1.0) * math.log(math.pi)
            + _log_sin(math.pi * s / 2.0)
            + log_gamma(1.0 - s)
        )
        return cmath.exp(exponent) * reflected
    if abs(1.0 - cmath.exp((1.0 - s) * _LOG2)) < 1e-6:
        raise ValueError("eta route ill-conditioned near the 1 + chi_k lattice")
    n = max(24, int(0.9 * abs(s.imag)) + 24)
    # d_k = sum_{j<=k} (n+j-1)! 4^j / ((n-j)! (2j)!), exact integers
    d = [0] * (n + 1)
    acc = 0
    for j in range(n + 1):
        acc += math.factorial(n + j - 1) * 4**j // (math.factorial(n - j) * math.factorial(2 * j))
        d[j] = acc
    dn = float(d[n])
    total = 0.0 + 0.0j
    for k in range(n):
        weight = (d[k] - d[n]) / dn  # in [-1, 0], exact big-int difference
        total += (-1) ** k * weight * cmath.exp(-s * math.log(k + 1))
    eta_factor = 1.0 - cmath.exp((1.0 - s) * _LOG2)  # 1 - 2^{1-s}
    return -total / eta_factor


def zeta_derivative(s: complex) -> complex:
    """zeta'(s) for Re(s) > 0.5, by term-wise differentiated Euler-Maclaurin."""
    if s.real < 0.5:
        raise ValueError("zeta derivative implemented for Re(s) >= 0.5 only")
    return _zeta_em(complex(s), want_derivative=True)[1]


def normal_cdf(x: float) -> float:
    """Standard normal distribution function."""
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


# ---------------------------------------------------------------------------
# Cached constants.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpecialFunctionContext:
    """Constants recomputed (never transcribed) at first use."""

    euler_gamma: float
    log2: float
    pi: float
    zeta_prime_minus1: float
    zeta_second_zero: float
    glaisher: float


def _euler_gamma() -> float:
    n = 40
    harmonic = sum(Fraction(1, k) for k in range(1, n + 1))
    value = float(harmonic) - math.log(n) - 1.0 / (2 * n)
    bern = _bernoulli()
    for k in range(1, 7):
        value += float(bern[2 * k]) / (2 * k * n ** (2 * k))
    return value


def _zeta_second_zero() -> float:
    """zeta''(0) by Richardson-extrapolated central differences on the
    reflected evaluator.

    Steps below ~1e-4 are dominated by cancellation noise in double
    precision (the difference quotient divides ~1e-13 absolute errors by
    h^2), so the step pair 1e-3 / 5e-4 is used; the extrapolated value is
    accurate to ~1e-6, ample for the variance constant it feeds.
    """

    def second_difference(h: float) -> float:
        f_plus = complex_zeta(complex(h, 0.0)).real
        f_minus = complex_zeta(complex(-h, 0.0)).real
        f_zero = complex_zeta(0.0).real
        return (f_plus - 2.0 * f_zero + f_minus) / (h * h)

    coarse = second_difference(1e-3)
    fine = second_difference(5e-4)
    return (4.0 * fine - coarse) / 3.0


@lru_cache(maxsize=1)
def default_context() -> SpecialFunctionContext:
    gamma_const = _euler_gamma()
    zeta_prime_2 = zeta_derivative(2.0 + 0.0j).real
    # Differentiate the functional equation at s = -1: psi(2) = 1 - gamma.
    zp_m1 = -(math.log(2.0 * math.pi) - 1.0 + gamma_const) / 12.0 + zeta_prime_2 / (
        2.0 * math.pi**2
    )
    return SpecialFunctionContext(
        euler_gamma=gamma_const,
        log2=_LOG2,
        pi=math.pi,
        zeta_prime_minus1=zp_m1,
        zeta_second_zero=_zeta_second_zero(),
        glaisher=math.exp(1.0 / 12.0 - zp_m1),
    )


# ---------------------------------------------------------------------------
# Fluctuations and expansions.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FluctuationSeries:
    """Finite Fourier series sum_k c_k e^{2 pi i k x} with c_{-k} = conj(c_k).

    Only k >= 1 coefficients are stored; the optional mean adds a k = 0 term.
    Evaluation is real by construction.
    """

    coefficients: tuple[complex, ...]
    mean: float = 0.0

    def evaluate(self, x: float) -> float:
        total = self.mean
        for k, c in enumerate(self.coefficients, start=1):
            total += 2.0 * (c * cmath.exp(2j * math.pi * k * x)).real
        return total

    def mean_over_period(self, samples: int = 4096) -> float:
        return sum(self.evaluate(i / samples) for i in range(samples)) / samples

    def amplitude_bounds(self, samples: int = 4096) -> tuple[float, float]:
        values = [self.evaluate(i / samples) for i in range(samples)]
        return min(values), max(values)


@dataclass(frozen=True)
class AsymptoticEstimate:
    value: float
    error_order: str


def branch_fluctuation(terms: int = DEFAULT_FOURIER_TERMS) -> FluctuationSeries:
    """Fluctuation of the expected total branch count, argument log_4 n."""
    if terms < 1:
        raise ValueError("need at least one Fourier term")
    coeffs = []
    for k in range(1, terms + 1):
        x = chi(k)
        coeffs.append(complex_gamma(x / 2.0) * complex_zeta(x - 1.0) * (x - 1.0) / _LOG2)
    return FluctuationSeries(tuple(coeffs))


def total_fringe_fluctuation(terms: int = DEFAULT_FOURIER_TERMS) -> FluctuationSeries:
    """Fluctuation of the expected total fringe size, argument log_4 n."""
    if terms < 1:
        raise ValueError("need at least one Fourier term")
    prefactor = 2.0 / (3.0 * math.sqrt(math.pi) * _LOG2)
    coeffs = []
    for k in range(1, terms + 1):
        x = chi(k)
        coeffs.append(
            prefactor
            * complex_gamma((3.0 + x) / 2.0)
            * (2.0 * complex_zeta(x - 1.0) + complex_zeta(x + 1.0))
        )
    return FluctuationSeries(tuple(coeffs))


def delta_branches(x: float, terms: int = DEFAULT_FOURIER_TERMS) -> float:
    return branch_fluctuation(terms).evaluate(x)


def asym_expected_r_branches(n: int, r: int) -> AsymptoticEstimate:
    """Four-term expansion of the mean r-branch count."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    q = 4.0**r
    value = (
        n / q
        + (1.0 + 5.0 / q) / 6.0
        + (q - 1.0 / q) / (20.0 * n)
        + (5.0 * q * q / 21.0 - 7.0 * q / 10.0 + 97.0 / (210.0 * q)) / (12.0 * n * n)
    )
    return AsymptoticEstimate(value, "O(n^-3)")


def asym_var_r_branches(n: int, r: int) -> AsymptoticEstimate:
    """Three-term expansion of the r-branch count variance."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    q = 4.0**r
    q2 = q * q
    value = (
        (q - 1.0) / (3.0 * q2) * n
        - (2.0 * q2 - 25.0 * q + 23.0) / (90.0 * q2)
        - (13.0 * q2 * q - 14.0 * q2 + 7.0 * q - 6.0) / (420.0 * q2 * n)
    )
    return AsymptoticEstimate(value, "O(n^-2)")


def branch_expansion_smooth(n: float) -> float:
    """Smooth part of the expected total branch count (no fluctuation term)."""
    ctx = default_context()
    return (
        4.0 * n / 3.0
        + math.log(n) / math.log(4.0) / 6.0
        - 2.0 * ctx.zeta_prime_minus1 / ctx.log2
        - ctx.euler_gamma / (12.0 * ctx.log2)
        - 1.0 / (6.0 * ctx.log2)
        + 43.0 / 36.0
    )


def asym_expected_branches(n: int, terms: int = DEFAULT_FOURIER_TERMS) -> AsymptoticEstimate:
    """Expected total branch count: smooth part plus Fourier fluctuation."""
    if n < 1:
        raise ValueError("need n >= 1")
    phase = math.log(n) / math.log(4.0)
    value = branch_expansion_smooth(float(n)) + branch_fluctuation(terms).evaluate(phase)
    return AsymptoticEstimate(value, "O(log n / n)")


def cdeg_expansion_smooth(n: float) -> float:
    """Smooth part of the expected compactification degree (the fluctuation
    has no closed form here and is handled empirically)."""
    ctx = default_context()
    return math.log(n) / math.log(4.0) + (ctx.euler_gamma + 2.0 - 3.0 * ctx.log2) / (2.0 * ctx.log2)


def asym_expected_cdeg_smooth(n: int) -> AsymptoticEstimate:
    if n < 1:
        raise ValueError("need n >= 1")
    return AsymptoticEstimate(cdeg_expansion_smooth(float(n)), "O(1/n) + periodic fluctuation")


def cdeg_variance_smooth() -> float:
    """Constant smooth part of the compactification-degree variance."""
    ctx = default_context()
    log_pi = math.log(ctx.pi)
    numerator = ctx.pi**2 - 24.0 * log_pi**2 - 48.0 * ctx.zeta_second_zero - 24.0
    return numerator / (24.0 * ctx.log2**2) - 2.0 * log_pi / ctx.log2 - 11.0 / 12.0


def asym_var_cdeg_smooth(n: int) -> AsymptoticEstimate:
    if n < 1:
        raise ValueError("need n >= 1")
    return AsymptoticEstimate(cdeg_variance_smooth(), "O(1/log n) + periodic fluctuations")


def fringe_error_rate(r: int) -> float | None:
    """theta_r = 4 / (2 + 2 cos(2 pi / 2^r)); None when the printed rate
    degenerates (r = 0 is exact, r = 1 hits a zero denominator)."""
    if r <= 1:
        return None
    return 4.0 / (2.0 + 2.0 * math.cos(2.0 * math.pi / 2.0**r))


def asym_fringe(n: int, r: int) -> tuple[AsymptoticEstimate, AsymptoticEstimate]:
    """Expansions of the r-th fringe size mean and variance."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    if r == 0:
        return (
            AsymptoticEstimate(float(n), "exact (degenerate)"),
            AsymptoticEstimate(0.0, "exact (degenerate)"),
        )
    q = 4.0**r
    q2 = q * q
    mean = n / q + (1.0 - 1.0 / q) / 3.0
    var = (q - 1.0) / (3.0 * q2) * n + (-2.0 * q2 - 5.0 * q + 7.0) / (45.0 * q2)
    theta = fringe_error_rate(r)
    if theta is None:
        order_mean = "exponential (rate unspecified at r = 1)"
        order_var = order_mean
    else:
        order_mean = f"O(n^3 * theta^-n), theta={theta:.6f}"
        order_var = f"O(n^5 * theta^-n), theta={theta:.6f}"
    return AsymptoticEstimate(mean, order_mean), AsymptoticEstimate(var, order_var)


def total_fringe_expansion_smooth(n: float) -> float:
    """Smooth part of the expected total fringe size."""
    ctx = default_context()
    return (
        4.0 * n / 3.0
        + math.log(n) / (3.0 * math.log(4.0))
        + (5.0 + 3.0 * ctx.euler_gamma - 11.0 * ctx.log2) / (18.0 * ctx.log2)
    )


def asym_total_fringe(n: int, terms: int = DEFAULT_FOURIER_TERMS) -> AsymptoticEstimate:
    """Expected total fringe size: smooth part plus Fourier fluctuation."""
    if n < 1:
        raise ValueError("need n >= 1")
    phase = math.log(n) / math.log(4.0)
    value = total_fringe_expansion_smooth(float(n)) + total_fringe_fluctuation(terms).evaluate(phase)
    return AsymptoticEstimate(value, "O(log n / n)")


def empirical_fluctuation(
    exact_fn: Callable[[int], Fraction | float],
    smooth_fn: Callable[[float], float],
    n_values: Sequence[int],
) -> list[tuple[float, float]]:
    """Residual cloud (log_4 n mod 1, exact - smooth), sorted by phase."""
    points = []
    for n in n_values:
        phase = math.log(n) / math.log(4.0) % 1.0
        residual = float(exact_fn(n)) - smooth_fn(float(n))
        points.append((phase, residual))
    points.sort()
    return points


def geometric_grid(n_min: int, n_max: int, per_octave: int = 8) -> list[int]:
    """Distinct integers from n_min to n_max, roughly geometrically spaced."""
    if n_min < 1 or n_max < n_min:
        raise ValueError("need 1 <= n_min <= n_max")
    values = []
    step = 2.0 ** (1.0 / per_octave)
    x = float(n_min)
    while x <= n_max:
        values.append(round(x))
        x *= step
    if values[-1] != n_max:
        values.append(n_max)
    return sorted(set(values))
