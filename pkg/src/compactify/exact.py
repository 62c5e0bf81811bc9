"""Exact counting formulas and generating-function expansions.

Everything here returns ints or Fractions; floating output is a CLI
concern.  Each closed formula has a brute-force counterpart in
:mod:`compactify.oracle` and the two are held equal in the tests.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .series import DEFAULT_ORDER, Series, VarJet, rational_series


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the convention 0 outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    """Number of binary trees with n internal nodes."""
    return math.comb(2 * n, n) // (n + 1)


def dyadic_valuation(k: int) -> int:
    """Largest power of 2 dividing k."""
    if k <= 0:
        raise ValueError("dyadic valuation needs a positive integer")
    return (k & -k).bit_length() - 1


def touchard_check(n: int) -> bool:
    """Whether Catalan(n+1) equals the dyadic-convolution sum
    sum_k Catalan(k) * 2^(n-2k) * binom(n, 2k)."""
    lhs = catalan(n + 1)
    rhs = sum(catalan(k) * 2 ** (n - 2 * k) * binomial(n, 2 * k) for k in range(n // 2 + 1))
    return lhs == rhs


# ---------------------------------------------------------------------------
# Generating functions.
#
# The tree and path families are tied together by the substitution
# z -> z^2/(1-2z)^2, which mirrors one reduction step: a reduced atom
# re-expands into a pair of runs worth z^2/(1-2z)^2.
# ---------------------------------------------------------------------------


def series_B(order: int = DEFAULT_ORDER) -> Series:
    """Catalan generating function: coefficient of z^n is catalan(n)."""
    return Series.build(lambda n: Fraction(catalan(n)), order)


def substitution_series(order: int = DEFAULT_ORDER) -> Series:
    """z^2/(1-2z)^2, the reduction-step substitution."""
    return rational_series([0, 0, 1], [1, -4, 4], order)


def chain_factor(order: int = DEFAULT_ORDER) -> Series:
    """z/(1-2z), one node followed by a two-way chain."""
    return rational_series([0, 1], [1, -2], order)


def series_Br(r: int, order: int = DEFAULT_ORDER) -> Series:
    """Generating function of binary trees with register <= r."""
    if r < 0:
        raise ValueError("register bound must be nonnegative")
    sub = substitution_series(order)
    factor = chain_factor(order)
    current = Series.from_terms({0: Fraction(1)}, order)
    for _ in range(r):
        current = (factor * current.compose(sub)).add_const(Fraction(1))
    return current


def series_Lr(r: int, order: int = DEFAULT_ORDER) -> Series:
    """Generating function of paths with compactification degree exactly r."""
    if r < 0:
        raise ValueError("degree must be nonnegative")
    sub = substitution_series(order)
    current = Series.from_terms({1: Fraction(4)}, order)
    for _ in range(r):
        current = current.compose(sub).scale(Fraction(4))
    return current


def series_Hr(r: int, order: int = DEFAULT_ORDER) -> Series:
    """Bivariate generating function of r-th fringe sizes, as a VarJet series.

    Coefficient of z^n is the jet (in w = v - 1) of
    sum over paths of length n with degree >= r of v^(fringe size).
    The base case marks every step of the path: 4zv/(1-4zv) has
    z^k coefficient (4v)^k.
    """
    if r < 0:
        raise ValueError("fringe index must be nonnegative")
    current = Series.build(
        lambda k: VarJet.v_power(k, 4**k) if k >= 1 else VarJet.const(0),
        order,
        zero=VarJet.const(0),
    )
    if r == 0:
        return current
    sub = substitution_series(order).map(VarJet.const, zero=VarJet.const(0))
    for _ in range(r):
        current = current.compose(sub).scale(VarJet.const(4))
    return current


def series_Gr(r: int, order: int = DEFAULT_ORDER) -> Series:
    """Bivariate generating function of r-branch counts, as a VarJet series.

    Base case marks every leaf: v*B(zv) has z^k coefficient catalan(k)*v^(k+1).
    Each recursion level re-expands a reduced tree, turning branch markers of
    level r-1 into markers of level r.
    """
    if r < 0:
        raise ValueError("branch index must be nonnegative")
    jet_zero = VarJet.const(0)
    current = Series.build(lambda k: VarJet.v_power(k + 1, catalan(k)), order, zero=jet_zero)
    if r == 0:
        return current
    sub = substitution_series(order).map(VarJet.const, zero=jet_zero)
    factor = chain_factor(order).map(VarJet.const, zero=jet_zero)
    for _ in range(r):
        current = (factor * current.compose(sub)).add_const(VarJet.const(1))
    return current


# ---------------------------------------------------------------------------
# Explicit formulas (trees).
# ---------------------------------------------------------------------------


def expected_r_branches(n: int, r: int) -> Fraction:
    """Mean number of r-branches over uniform binary trees of size n."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    step = 1 << r
    total = 0
    lam = 1
    while lam * step <= n + 1:
        m = lam * step
        total += lam * (
            binomial(2 * n, n + 1 - m) - 2 * binomial(2 * n, n - m) + binomial(2 * n, n - 1 - m)
        )
        lam += 1
    return Fraction((n + 1) * total, math.comb(2 * n, n))


def expected_branches(n: int) -> Fraction:
    """Mean total number of branches over uniform binary trees of size n."""
    if n < 1:
        raise ValueError("need n >= 1")
    total = 0
    for k in range(1, n + 2):
        weight = Fraction(2) - Fraction(1, 1 << dyadic_valuation(k))
        bracket = (
            binomial(2 * n, n + 1 - k) - 2 * binomial(2 * n, n - k) + binomial(2 * n, n - 1 - k)
        )
        total += weight * k * bracket
    return Fraction(n + 1, math.comb(2 * n, n)) * total


def var_r_branches_exact(n: int, r: int, order: int | None = None) -> Fraction:
    """Exact variance of the r-branch count via the marked generating function."""
    if order is None:
        order = max(DEFAULT_ORDER, n)
    jet = series_Gr(r, order)[n]
    total = catalan(n)
    mean = Fraction(jet.b, total)
    second_factorial = Fraction(2 * jet.c, total)
    return second_factorial + mean - mean * mean


# ---------------------------------------------------------------------------
# Explicit formulas (paths).
# ---------------------------------------------------------------------------


def _path_bracket(n: int, m: int) -> int:
    return binomial(2 * n - 1, n - m) - binomial(2 * n - 1, n - m - 1)


def count_paths_cdeg(n: int, r: int) -> int:
    """Number of length-n paths with compactification degree exactly r."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    step = 1 << r
    total = 0
    lam = 1
    while lam * step <= n:
        total += lam * (-1) ** (lam - 1) * _path_bracket(n, lam * step)
        lam += 1
    return 4 ** (r + 1) * total


def prob_cdeg(n: int, r: int) -> Fraction:
    """Probability that a uniform length-n path has degree exactly r."""
    return Fraction(count_paths_cdeg(n, r), 4**n)


def expected_cdeg(n: int) -> Fraction:
    """Mean compactification degree of a uniform length-n path."""
    if n < 1:
        raise ValueError("need n >= 1")
    total = 0
    for k in range(2, n + 1, 2):  # odd k carry weight 2^0 - 1 = 0
        total += 8 * k * ((1 << dyadic_valuation(k)) - 1) * _path_bracket(n, k)
    return Fraction(total, 4**n)


def var_cdeg(n: int) -> Fraction:
    """Exact variance of the compactification degree at length n."""
    if n < 1:
        raise ValueError("need n >= 1")
    mean = Fraction(0)
    second = Fraction(0)
    r = 0
    while (1 << r) <= n:
        p = prob_cdeg(n, r)
        mean += r * p
        second += r * r * p
        r += 1
    return second - mean * mean


def expected_fringe(n: int, r: int) -> Fraction:
    """Mean size of the r-th fringe of a uniform length-n path."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    step = 1 << r
    total = Fraction(0)
    lam = 1
    while lam * step <= n:
        total += Fraction(2 * lam**3 + lam, 3) * _path_bracket(n, lam * step)
        lam += 1
    return Fraction(4) ** (r + 1 - n) * total


def expected_total_fringe(n: int) -> Fraction:
    """Mean total fringe size (summed over all reduction levels) at length n.

    Summing the per-level means telescopes into a single dyadic-weighted sum;
    the 4^(2-n)/12 normalization is pinned by the exhaustive oracle.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    total = 0
    for k in range(1, n + 1):
        v = dyadic_valuation(k)
        weight = 2 * k**3 * (2 - Fraction(1, 1 << v)) + k * ((1 << (v + 1)) - 1)
        total += weight * _path_bracket(n, k)
    return Fraction(16, 12) * total / 4**n


def var_fringe_exact(n: int, r: int, order: int | None = None) -> Fraction:
    """Exact variance of the r-th fringe size via the marked generating function."""
    if order is None:
        order = max(DEFAULT_ORDER, n)
    jet = series_Hr(r, order)[n]
    total = 4**n
    mean = Fraction(jet.b, total)
    second_factorial = Fraction(2 * jet.c, total)
    return second_factorial + mean - mean * mean
