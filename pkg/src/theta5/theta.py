"""q-expansions of theta functions with rational characteristics.

theta[eps; eps'](zeta, tau) = sum_n exp(2*pi*i*(  (n+eps/2)^2 * tau / 2
                                                + (n+eps/2) * (zeta + eps'/2) ))

expanded in x = exp(pi*i*tau) and z = exp(2*pi*i*zeta): the n-th term is

    exp(pi*i*(n+eps/2)*eps') * x^((n+eps/2)^2) * z^(n+eps/2)

with an exact root-of-unity coefficient.  Constant mode sets z = 1.  Also
here: the Jacobi triple-product expansion, the zeta-derivative series
(normalized as theta'/(2*pi*i) so coefficients stay cyclotomic), the
characteristic-reduction and quasi-periodicity shift laws, and the zero
location in the fundamental parallelogram.
"""

from __future__ import annotations

import functools
import math
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .cyclotomic import exp_pi_i
from .series import ExponentPair, PuiseuxSeries2


class Characteristic(NamedTuple):
    eps: Fraction
    epsp: Fraction

    @staticmethod
    def of(eps, epsp):
        return Characteristic(Fraction(eps), Fraction(epsp))

    def __str__(self):
        return f"[{self.eps};{self.epsp}]"


class ThetaMode(Enum):
    CONSTANT = "constant"  # zeta = 0: series in x only
    FUNCTION = "function"  # symbolic zeta: series carries z-powers


def _n_range(center, spread_sq):
    """All integers n with (n + center)^2 <= spread_sq, exactly."""
    if spread_sq < 0:
        return range(0)
    # sqrt bound via integer square roots on p/q: n must satisfy
    # -center - sqrt(s) <= n <= -center + sqrt(s)
    p, q = spread_sq.numerator, spread_sq.denominator
    # floor(sqrt(p/q)) and a safe +1 margin, then filter exactly
    r = math.isqrt(p * q) // q + 2
    lo = math.floor(-center) - r
    hi = math.ceil(-center) + r
    return [n for n in range(lo, hi + 1) if (n + center) ** 2 <= spread_sq]


@functools.lru_cache(maxsize=None)
def theta_series(c: Characteristic, mode: ThetaMode, cutoff) -> PuiseuxSeries2:
    """Defining-sum expansion, exact to the inclusive cutoff on x-exponents."""
    cutoff = Fraction(cutoff)
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    a = Fraction(c.eps, 2)
    terms = {}
    for n in _n_range(a, cutoff):
        m = n + a
        coeff = exp_pi_i(m * c.epsp)
        key = ExponentPair(m * m, m if mode is ThetaMode.FUNCTION else Fraction(0))
        terms[key] = terms[key] + coeff if key in terms else coeff
    return PuiseuxSeries2(terms, cutoff)


@functools.lru_cache(maxsize=None)
def theta_deriv_series(c: Characteristic, cutoff,
                       mode: ThetaMode = ThetaMode.FUNCTION) -> PuiseuxSeries2:
    """Series of theta'/(2*pi*i) (zeta-derivative, normalized to keep the
    coefficients in Q(zeta_N)): each defining-sum term gains a factor
    (n + eps/2)."""
    cutoff = Fraction(cutoff)
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    a = Fraction(c.eps, 2)
    terms = {}
    for n in _n_range(a, cutoff):
        m = n + a
        coeff = exp_pi_i(m * c.epsp) * m
        key = ExponentPair(m * m, m if mode is ThetaMode.FUNCTION else Fraction(0))
        terms[key] = terms[key] + coeff if key in terms else coeff
    return PuiseuxSeries2(terms, cutoff)


@functools.lru_cache(maxsize=None)
def theta_product_series(c: Characteristic, mode: ThetaMode, cutoff) -> PuiseuxSeries2:
    """Jacobi triple-product expansion:

        exp(pi*i*eps*eps'/2) * x^(eps^2/4) * z^(eps/2)
          * prod_{n>=1} (1 - x^(2n))
                        (1 + e^( pi*i*eps') * x^(2n-1+eps) * z)
                        (1 + e^(-pi*i*eps') * x^(2n-1-eps) / z)

    Requires 0 <= eps < 2 (reduce via reduce_char first).  Expanded over the
    finitely many n that can touch the retained window, plus one guard factor.
    """
    cutoff = Fraction(cutoff)
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    if not 0 <= c.eps < 2:
        raise ValueError("triple product needs 0 <= eps < 2; reduce_char first")
    fn = mode is ThetaMode.FUNCTION
    # the single possibly-negative-exponent factor (n=1, eps>1) can pull
    # exponents down by at most 1 - eps > -1, so build with one unit of slack
    work = cutoff + 1
    prefactor = PuiseuxSeries2.from_terms(
        [(Fraction(c.eps, 2) ** 2,
          Fraction(c.eps, 2) if fn else 0,
          exp_pi_i(Fraction(c.eps * c.epsp, 2)))])
    acc = prefactor
    plus = exp_pi_i(c.epsp)
    minus = exp_pi_i(-c.epsp)
    n = 1
    guard = 1
    while True:
        exps = (2 * n, 2 * n - 1 + c.eps, 2 * n - 1 - c.eps)
        if min(exps) > cutoff:
            if guard == 0:
                break
            guard -= 1
        f1 = PuiseuxSeries2.from_terms([(0, 0, 1), (2 * n, 0, -1)])
        f2 = PuiseuxSeries2.from_terms(
            [(0, 0, 1), (2 * n - 1 + c.eps, 1 if fn else 0, plus)])
        f3 = PuiseuxSeries2.from_terms(
            [(0, 0, 1), (2 * n - 1 - c.eps, -1 if fn else 0, minus)])
        for f in (f1, f2, f3):
            acc = (acc * f).truncate(work)
        n += 1
    return acc.truncate(cutoff).scrubbed()


def reduce_char(c: Characteristic):
    """Normalize to eps0, eps0' in [0, 2).  Returns (c0, mu) with
    theta[c] = mu * theta[c0]; the scalar comes from the even-shift law
    theta[eps+2m; eps'+2n] = exp(pi*i*eps*n) * theta[eps; eps']."""
    m = Fraction(c.eps) // 2
    n = Fraction(c.epsp) // 2
    eps0 = Fraction(c.eps) - 2 * m
    epsp0 = Fraction(c.epsp) - 2 * n
    mu = exp_pi_i(eps0 * n)
    return Characteristic(eps0, epsp0), mu


def shift_integer(c: Characteristic, m: int, n: int, cutoff) -> PuiseuxSeries2:
    """Function-mode series of theta[c](zeta + n + m*tau), straight from the
    defining sum with the shifted argument (no transformation law applied):
    term k has x-exponent (k+eps/2)^2 + 2m(k+eps/2), z-exponent k+eps/2 and
    coefficient exp(pi*i*(k+eps/2)*(eps'+2n))."""
    cutoff = Fraction(cutoff)
    a = Fraction(c.eps, 2)
    terms = {}
    # (k+a)^2 + 2m(k+a) <= cutoff  <=>  (k+a+m)^2 <= cutoff + m^2
    for k in _n_range(a + m, cutoff + m * m):
        t = k + a
        key = ExponentPair(t * t + 2 * m * t, t)
        coeff = exp_pi_i(t * (c.epsp + 2 * n))
        terms[key] = terms[key] + coeff if key in terms else coeff
    return PuiseuxSeries2(terms, cutoff)


def shift_half_period(c: Characteristic, m: int, n: int, cutoff) -> PuiseuxSeries2:
    """Function-mode series of theta[c](zeta + (n + m*tau)/2) from the
    defining sum: term k has x-exponent (k+eps/2)^2 + m(k+eps/2),
    z-exponent k+eps/2, coefficient exp(pi*i*(k+eps/2)*(eps'+n))."""
    cutoff = Fraction(cutoff)
    a = Fraction(c.eps, 2)
    half_m = Fraction(m, 2)
    terms = {}
    # (k+a)^2 + m(k+a) <= cutoff  <=>  (k+a+m/2)^2 <= cutoff + m^2/4
    for k in _n_range(a + half_m, cutoff + half_m * half_m):
        t = k + a
        key = ExponentPair(t * t + m * t, t)
        coeff = exp_pi_i(t * (c.epsp + n))
        terms[key] = terms[key] + coeff if key in terms else coeff
    return PuiseuxSeries2(terms, cutoff)


def theta_zero_point(c: Characteristic):
    """The unique zero of theta[c](., tau) in the fundamental parallelogram,
    as (coefficient of tau, constant) = ((1-eps)/2, (1-eps')/2)."""
    return (Fraction(1 - Fraction(c.eps), 2), Fraction(1 - Fraction(c.epsp), 2))
