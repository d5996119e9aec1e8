"""Sparse truncated two-variable Puiseux series with cyclotomic coefficients.

The ambient ring for exact verification: series in x = exp(pi*i*tau) and
z = exp(2*pi*i*zeta) with exact rational exponents (negative allowed) and
Cyclotomic coefficients.  A series carries an inclusive truncation bound
`cutoff` on the x-exponent (None means the series is exact, i.e. a genuine
Laurent polynomial) and a lower bound `min_x` on the x-exponent of the full
untruncated series, which makes product truncation sound.

Multiplication is exact on every retained coefficient.  Three lanes:

* a generic Fraction/dict lane (the semantic definition),
* an integer pairwise-convolution lane (numpy int64, overflow-guarded),
* an FFT convolution lane for large operands, accepted only when a
  conservative a-priori rounding bound certifies that nearest-integer
  rounding recovers the exact integer result; otherwise it falls back.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .cyclotomic import MAX_ORDER, Cyclotomic

try:  # scipy's next_fast_len gives nicer FFT sizes; optional
    from scipy.fft import next_fast_len as _next_fast_len
except Exception:  # pragma: no cover
    def _next_fast_len(n, real=False):
        return 1 << (n - 1).bit_length()


class ExponentPair(NamedTuple):
    xExp: Fraction
    zExp: Fraction


_PAIRWISE_MAX_PAIRS = 4096
_INT64_SAFE = 1 << 61
_MAX_DENOM = 10 ** 6


def _lcm(a, b):
    return a * b // math.gcd(a, b)


class PuiseuxSeries2:
    __slots__ = ("cutoff", "terms", "min_x")

    def __init__(self, terms, cutoff, min_x=None, _scrub=True):
        """terms: mapping ExponentPair -> Cyclotomic. Terms above cutoff are
        dropped; structurally zero coefficients are dropped; with _scrub also
        coefficients that reduce to zero mod Phi_N."""
        clean = {}
        for e, c in terms.items():
            if cutoff is not None and e[0] > cutoff:
                continue
            if not c.coeffs:
                continue
            if _scrub and c.is_zero():
                continue
            clean[ExponentPair(Fraction(e[0]), Fraction(e[1]))] = c
        self.terms = clean
        self.cutoff = None if cutoff is None else Fraction(cutoff)
        if min_x is not None:
            self.min_x = Fraction(min_x)
        elif clean:
            self.min_x = min(e.xExp for e in clean)
        elif self.cutoff is not None:
            # empty truncated series: the true series has nothing at or below
            # the cutoff, so the cutoff itself is a sound lower bound
            self.min_x = self.cutoff
        else:
            self.min_x = Fraction(0)

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_terms(items, cutoff=None):
        """items: iterable of (xExp, zExp, coefficient)."""
        terms = {}
        for x, z, c in items:
            if not isinstance(c, Cyclotomic):
                c = Cyclotomic.from_rational(c)
            key = ExponentPair(Fraction(x), Fraction(z))
            terms[key] = terms[key] + c if key in terms else c
        return PuiseuxSeries2(terms, cutoff)

    @staticmethod
    def zero(cutoff=None):
        return PuiseuxSeries2({}, cutoff)

    @staticmethod
    def one(cutoff=None):
        return PuiseuxSeries2.from_terms([(0, 0, 1)], cutoff)

    # -- basic structure ------------------------------------------------------

    def items(self):
        """Terms in canonical lexicographic (xExp, zExp) order."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0].xExp, kv[0].zExp))

    def coeff(self, x, z=Fraction(0)):
        x, z = Fraction(x), Fraction(z)
        if self.cutoff is not None and x > self.cutoff:
            raise ValueError(f"exponent {x} beyond cutoff {self.cutoff}")
        return self.terms.get(ExponentPair(x, z), Cyclotomic.zero())

    def is_zero(self):
        return all(c.is_zero() for c in self.terms.values())

    def scrubbed(self):
        """Copy with coefficients that reduce to zero removed."""
        return PuiseuxSeries2(self.terms, self.cutoff, self.min_x, _scrub=True)

    def truncate(self, cutoff):
        cutoff = Fraction(cutoff)
        if self.cutoff is not None and self.cutoff <= cutoff:
            return self
        return PuiseuxSeries2(self.terms, cutoff, self.min_x, _scrub=False)

    def map_z_negate(self):
        """z -> 1/z (the series of f(-zeta))."""
        return PuiseuxSeries2({ExponentPair(e.xExp, -e.zExp): c
                               for e, c in self.terms.items()},
                              self.cutoff, self.min_x, _scrub=False)

    def shift_exponents(self, dx, dz):
        """Multiply by the monomial x^dx * z^dz."""
        dx, dz = Fraction(dx), Fraction(dz)
        cut = None if self.cutoff is None else self.cutoff + dx
        return PuiseuxSeries2({ExponentPair(e.xExp + dx, e.zExp + dz): c
                               for e, c in self.terms.items()},
                              cut, self.min_x + dx, _scrub=False)

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        cuts = [c for c in (self.cutoff, other.cutoff) if c is not None]
        cut = min(cuts) if cuts else None
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s.coeffs:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return PuiseuxSeries2(out, cut, min(self.min_x, other.min_x), _scrub=False)

    def __neg__(self):
        return PuiseuxSeries2({e: -c for e, c in self.terms.items()},
                              self.cutoff, self.min_x, _scrub=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, Cyclotomic):
            c = Cyclotomic.from_rational(c)
        return PuiseuxSeries2({e: v * c for e, v in self.terms.items()},
                              self.cutoff, self.min_x, _scrub=False)

    def __mul__(self, other):
        cut = _result_cutoff(self, other)
        if not self.terms or not other.terms:
            return PuiseuxSeries2({}, cut)
        terms = _mul_terms(self, other, cut)
        return PuiseuxSeries2(terms, cut, self.min_x + other.min_x, _scrub=False)

    def __pow__(self, p):
        if p < 1:
            raise ValueError("power must be >= 1")
        result = None
        base = self
        while p:
            if p & 1:
                result = base if result is None else result * base
            p >>= 1
            if p:
                base = base * base
        return result

    # -- serialization ---------------------------------------------------------

    def to_text(self):
        """One term per line: "xExp zExp coefficient", canonical order."""
        lines = []
        for e, c in self.items():
            r = c.reduced()
            if not r.coeffs:
                continue
            lines.append(f"{e.xExp} {e.zExp} {r.to_string()}")
        return "\n".join(lines)

    def __repr__(self):
        n = len(self.terms)
        return f"PuiseuxSeries2(<{n} terms>, cutoff={self.cutoff})"


def _result_cutoff(a, b):
    """Sound inclusive cutoff for a product of truncated series."""
    cands = []
    if a.cutoff is not None:
        cands.append(a.cutoff + b.min_x)
        if b.cutoff is not None:
            cands.append(min(a.cutoff, b.cutoff))
    if b.cutoff is not None:
        cands.append(b.cutoff + a.min_x)
    return min(cands) if cands else None


# -- multiplication lanes ------------------------------------------------------


def _mul_terms(a, b, cut):
    grids = _int_grids(a, b, cut)
    if grids is not None:
        ta, tb, order, dx, dz, denom, icut, bound = grids
        if bound < _INT64_SAFE:
            if len(ta) * len(tb) > _PAIRWISE_MAX_PAIRS:
                out = _fft_lane(ta, tb, order, icut, bound)
                if out is not None:
                    return _from_int_grid(out, order, dx, dz, denom)
            out = _pairwise_lane(ta, tb, order, icut)
            return _from_int_grid(out, order, dx, dz, denom)
    return _generic_lane(a, b, cut)


def _int_grids(a, b, cut):
    """Try to express both operands on a common integer grid.

    Returns term lists [(ix, iz, int64 vector over Z[zeta_order])], the scale
    factors, the scaled cutoff, and an upper bound on any intermediate or
    final integer produced by the convolution."""
    order = 1
    for s in (a, b):
        for c in s.terms.values():
            order = _lcm(order, c.order)
            if order > MAX_ORDER:
                return None
    dx = dz = 1
    for s in (a, b):
        for e in s.terms:
            dx = _lcm(dx, e.xExp.denominator)
            dz = _lcm(dz, e.zExp.denominator)
    if cut is not None:
        dx = _lcm(dx, cut.denominator)
    if dx > _MAX_DENOM or dz > _MAX_DENOM:
        return None
    den_a = _coeff_denom(a)
    den_b = _coeff_denom(b)
    if den_a > _MAX_DENOM or den_b > _MAX_DENOM:
        return None
    icut = None if cut is None else cut * dx  # integral by construction
    # prune terms that cannot touch the retained window
    lim_a = None if cut is None else cut - b.min_x
    lim_b = None if cut is None else cut - a.min_x
    ta = _grid_terms(a, dx, dz, order, den_a, lim_a)
    tb = _grid_terms(b, dx, dz, order, den_b, lim_b)
    if ta is None or tb is None:
        return None
    l1a = sum(int(np.abs(v).sum()) for _, _, v in ta) or 1
    l1b = sum(int(np.abs(v).sum()) for _, _, v in tb) or 1
    maxa = max((int(np.abs(v).max()) for _, _, v in ta), default=1)
    maxb = max((int(np.abs(v).max()) for _, _, v in tb), default=1)
    bound = min(l1a * maxb, l1b * maxa)
    return ta, tb, order, dx, dz, den_a * den_b, icut, bound


def _coeff_denom(s):
    d = 1
    for c in s.terms.values():
        for v in c.coeffs.values():
            d = _lcm(d, v.denominator)
            if d > _MAX_DENOM:
                return d
    return d


def _grid_terms(s, dx, dz, order, den, lim):
    out = []
    for e, c in s.terms.items():
        if lim is not None and e.xExp > lim:
            continue
        vec = np.zeros(order, dtype=np.int64)
        f = order // c.order
        for k, v in c.coeffs.items():
            q = v * den
            if q.denominator != 1 or abs(q.numerator) >= _INT64_SAFE:
                return None
            vec[k * f] += q.numerator
        out.append((int(e.xExp * dx), int(e.zExp * dz), vec))
    return out


def _pairwise_lane(ta, tb, order, icut):
    acc = {}
    for ix1, iz1, v1 in ta:
        for ix2, iz2, v2 in tb:
            ix = ix1 + ix2
            if icut is not None and ix > icut:
                continue
            conv = np.convolve(v1, v2)
            if order > 1 and conv.shape[0] > order:
                head = conv[:order].copy()
                head[: conv.shape[0] - order] += conv[order:]
                conv = head
            key = (ix, iz1 + iz2)
            if key in acc:
                acc[key] += conv  # in-bound by the caller's overflow guard
            else:
                acc[key] = conv
    return acc


def _fft_lane(ta, tb, order, icut, bound):
    """Exact integer convolution via FFT, accepted only when the rounding
    error bound certifies the result; returns None to signal fallback."""
    try:
        from scipy.fft import irfftn, rfftn
    except Exception:  # pragma: no cover
        rfftn = irfftn = None
    xs_a = [t[0] for t in ta]
    zs_a = [t[1] for t in ta]
    xs_b = [t[0] for t in tb]
    zs_b = [t[1] for t in tb]
    ox = min(xs_a) + min(xs_b)
    oz = min(zs_a) + min(zs_b)
    nxa = max(xs_a) - min(xs_a) + 1
    nxb = max(xs_b) - min(xs_b) + 1
    nza = max(zs_a) - min(zs_a) + 1
    nzb = max(zs_b) - min(zs_b) + 1
    out_x = nxa + nxb - 1
    if icut is not None:
        out_x = min(out_x, icut - ox + 1)
        if out_x <= 0:
            return {}
    out_z = nza + nzb - 1
    size_x = _next_fast_len(nxa + nxb - 1)
    size_z = _next_fast_len(nza + nzb - 1)
    # memory guard
    if size_x * size_z * order > 64_000_000:
        return None
    # conservative a-priori rounding bound for double-precision FFT convolution
    eps = 2.3e-16
    logf = 4 * (math.log2(size_x * size_z * order) + 8)
    l1a = sum(int(np.abs(v).sum()) for _, _, v in ta)
    l1b = sum(int(np.abs(v).sum()) for _, _, v in tb)
    err = eps * l1a * l1b * logf
    if err >= 0.25 or rfftn is None:
        return None
    A = np.zeros((size_x, size_z, order))
    B = np.zeros((size_x, size_z, order))
    for ix, iz, v in ta:
        A[ix - min(xs_a), iz - min(zs_a), :] += v
    for ix, iz, v in tb:
        B[ix - min(xs_b), iz - min(zs_b), :] += v
    # the zeta-axis transform length is exactly `order`: wraparound there is
    # the group-ring reduction zeta^order = 1, which is what we want
    shape = (size_x, size_z, order)
    prod = irfftn(rfftn(A, s=shape) * rfftn(B, s=shape), s=shape)
    res = np.rint(prod[:out_x, :out_z, :]).astype(np.int64)
    # belt-and-braces: observed rounding slack must be far below the bound
    slack = np.max(np.abs(prod[:out_x, :out_z, :] - res))
    if slack > 0.25:  # pragma: no cover - excluded by the a-priori bound
        return None
    acc = {}
    nz = np.nonzero(np.any(res, axis=2))
    for i, j in zip(*nz):
        acc[(int(i) + ox, int(j) + oz)] = res[i, j, :].astype(object)
    return acc


def _from_int_grid(acc, order, dx, dz, denom):
    terms = {}
    for (ix, iz), vec in acc.items():
        coeffs = {k: Fraction(int(v), denom) for k, v in enumerate(vec) if v}
        if coeffs:
            terms[ExponentPair(Fraction(ix, dx), Fraction(iz, dz))] = \
                Cyclotomic(order, coeffs)
    return terms


def _generic_lane(a, b, cut):
    small, big = (a, b) if len(a.terms) <= len(b.terms) else (b, a)
    big_items = sorted(big.terms.items(), key=lambda kv: kv[0].xExp)
    out = {}
    for e1, c1 in small.terms.items():
        lim = None if cut is None else cut - e1.xExp
        for e2, c2 in big_items:
            if lim is not None and e2.xExp > lim:
                break
            key = ExponentPair(e1.xExp + e2.xExp, e1.zExp + e2.zExp)
            prod = c1 * c2
            if key in out:
                s = out[key] + prod
                if s.coeffs:
                    out[key] = s
                else:
                    del out[key]
            elif prod.coeffs:
                out[key] = prod
    return out


# -- module-level operation names matching the published interface -------------

def series_add(a, b):
    return a + b


def series_mul(a, b):
    return a * b


def series_pow(a, p):
    return a ** p


def series_scale(a, c):
    return a.scale(c)


def series_coeff(a, e, z=None):
    if z is None:
        x, z = e
    else:
        x = e
    return a.coeff(x, z)


def series_is_zero(a):
    return a.is_zero()
