"""Floating-point evaluation of theta functions and contour-integral residues.

Complements the exact series engine: identities and residue closed forms are
checked numerically at sampled tau in the upper half-plane, with contour
integration (trapezoid rule on a circle) for residues of elliptic functions
built from theta quotients.
"""

from __future__ import annotations

import cmath
import functools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .theta import Characteristic, theta_zero_point

TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class EvalConfig:
    tol: float = 1e-12
    max_terms: int = 4000
    digits: int = 15

    def __post_init__(self):
        if self.max_terms < 8:
            raise ValueError("max_terms must be >= 8")


@functools.lru_cache(maxsize=1 << 18)
def _theta_sum(c, zeta, tau, cfg, deriv):
    """Adaptive defining sum.  Terms are exp(pi*i*(n+eps/2)^2*tau) *
    exp(2*pi*i*(n+eps/2)*(zeta+eps'/2)), summed in shells outward from the
    index of slowest decay until a whole shell falls below tol/100."""
    if tau.imag <= 0:
        raise ValueError("tau must lie in the upper half-plane")
    a = float(Fraction(c.eps)) / 2.0
    b = float(Fraction(c.epsp)) / 2.0
    # |term| = exp(-pi*(n+a)^2 Im tau - 2*pi*(n+a) Im zeta) peaks here:
    center = int(round(-a - complex(zeta).imag / tau.imag))
    total = 0j
    scale = 0.0
    n_terms = 0
    k = 0
    while True:
        shell = 0.0
        for n in ({center} if k == 0 else {center - k, center + k}):
            m = n + a
            t = cmath.exp(1j * math.pi * (m * m * tau + 2 * m * (zeta + b)))
            if deriv:
                t *= TWO_PI_I * m
            total += t
            shell = max(shell, abs(t))
            scale = max(scale, abs(t))
            n_terms += 1
            if n_terms > cfg.max_terms:
                raise ValueError(
                    f"theta sum did not converge within {cfg.max_terms} terms")
        if k > 0 and shell <= cfg.tol * 1e-2 * max(scale, 1.0):
            return total
        k += 1


def theta_eval(c, zeta, tau, cfg=None):
    """theta[c](zeta, tau) as a complex double."""
    return _theta_sum(c, complex(zeta), complex(tau), cfg or EvalConfig(),
                      deriv=False)


def theta_deriv_eval(c, zeta, tau, cfg=None):
    """d/dzeta theta[c](zeta, tau): the true derivative (with its 2*pi*i)."""
    return _theta_sum(c, complex(zeta), complex(tau), cfg or EvalConfig(),
                      deriv=True)


def sample_tau(seed, count):
    """Deterministic tau samples: Re in [-0.5, 0.5], Im in [0.8, 2.0]."""
    rng = random.Random(seed)
    return [complex(rng.uniform(-0.5, 0.5), rng.uniform(0.8, 2.0))
            for _ in range(count)]


def sample_zeta(seed, count):
    """Deterministic zeta samples kept away from lattice points and the
    rational zero/pole loci used throughout: Re in [0.03, 0.47], Im in
    [0.05, 0.25]."""
    rng = random.Random(f"zeta-{seed}")
    return [complex(rng.uniform(0.03, 0.47), rng.uniform(0.05, 0.25))
            for _ in range(count)]


def identity_residual(ident, tau, zeta=None, cfg=None):
    """Relative residual |sum of terms| / max |term| of an identity at one
    (tau, zeta) point.  Returns 0.0 when every term vanishes."""
    from .catalog import Argument  # local import to avoid a cycle
    cfg = cfg or EvalConfig()
    values = []
    for term in ident.terms:
        v = term.scalar.embed(cfg.digits)
        for f in term.factors:
            arg = zeta if f.argument is Argument.SYMBOLIC_ZETA else 0.0
            if arg is None:
                raise ValueError(f"{ident.id}: function identity needs a zeta")
            v *= theta_eval(f.char, arg, tau, cfg) ** f.power
        values.append(v)
    scale = max(abs(v) for v in values)
    if scale == 0.0:
        return 0.0
    return abs(sum(values)) / scale


def numeric_residue(f, pole, radius, samples=4096):
    """Residue of f at pole by the trapezoid rule on a circle of the given
    radius; spectrally accurate for f meromorphic with only this pole inside."""
    if radius <= 0:
        raise ValueError("radius must be > 0")
    total = 0j
    for j in range(samples):
        w = radius * cmath.exp(TWO_PI_I * j / samples)
        total += f(pole + w) * w
    return total / samples


def zero_location_check(c, tau, cfg=None, tol=1e-9):
    """Confirms theta[c] vanishes at its predicted zero (a*tau + b) and that
    the zero is simple (derivative bounded away from 0)."""
    cfg = cfg or EvalConfig()
    a, b = theta_zero_point(c)
    z0 = float(a) * tau + float(b)
    v = theta_eval(c, z0, tau, cfg)
    d = theta_deriv_eval(c, z0, tau, cfg)
    return abs(v) <= tol * max(abs(d), 1.0), z0, v, d


# -- residue witnesses --------------------------------------------------------
# Two elliptic functions whose residue bookkeeping proves the quintic
# relations among fifth powers:
#   phi(z) = theta^5[1;1](z) / prod_k theta[1/5; k/5](z),   k = 1,3,5,7,9
#   psi(z) = theta^5[1;1](z) / prod_k theta[3/5; k/5](z).
# Each has five simple poles in the fundamental parallelogram; every residue
# has a theta-constant closed form with a common denominator, and the five
# residues sum to zero.

_C11 = Characteristic.of(1, 1)


@dataclass(frozen=True)
class ResidueWitness:
    name: str
    denominator_chars: tuple          # characteristics of the pole factors
    poles: tuple                      # (coeff of tau, additive constant)
    numerator_chars: tuple            # closed-form numerators, pole-aligned
    signs: tuple

    def function(self, tau, cfg=None):
        cfg = cfg or EvalConfig()

        def f(z):
            num = theta_eval(_C11, z, tau, cfg) ** 5
            den = 1.0 + 0j
            for c in self.denominator_chars:
                den *= theta_eval(c, z, tau, cfg)
            return num / den
        return f

    def pole_points(self, tau):
        return [float(a) * tau + float(b) for a, b in self.poles]

    def closed_form_residues(self, tau, cfg=None):
        cfg = cfg or EvalConfig()
        den = (theta_deriv_eval(_C11, 0.0, tau, cfg)
               * theta_eval(Characteristic.of(1, Fraction(1, 5)), 0.0, tau, cfg) ** 2
               * theta_eval(Characteristic.of(1, Fraction(3, 5)), 0.0, tau, cfg) ** 2)
        return [s * theta_eval(c, 0.0, tau, cfg) ** 5 / den
                for s, c in zip(self.signs, self.numerator_chars)]

    def default_radius(self, tau):
        pts = self.pole_points(tau)
        dmin = min(abs(p - q) for i, p in enumerate(pts)
                   for q in pts[i + 1:])
        return 0.02 * dmin


def _chars(eps, ks):
    return tuple(Characteristic.of(eps, Fraction(k, 5)) for k in ks)


PHI_WITNESS = ResidueWitness(
    name="phi",
    denominator_chars=_chars(Fraction(1, 5), (1, 3, 5, 7, 9)),
    poles=((Fraction(2, 5), Fraction(2, 5)),
           (Fraction(2, 5), Fraction(1, 5)),
           (Fraction(2, 5), Fraction(0)),
           (Fraction(2, 5), Fraction(-1, 5)),
           (Fraction(2, 5), Fraction(-2, 5))),
    numerator_chars=_chars(Fraction(1, 5), (1, 3, 5, 7, 9)),
    signs=(-1, 1, -1, 1, -1),
)

PSI_WITNESS = ResidueWitness(
    name="psi",
    denominator_chars=_chars(Fraction(3, 5), (1, 3, 5, 7, 9)),
    poles=((Fraction(1, 5), Fraction(2, 5)),
           (Fraction(1, 5), Fraction(1, 5)),
           (Fraction(1, 5), Fraction(0)),
           (Fraction(1, 5), Fraction(-1, 5)),
           (Fraction(1, 5), Fraction(-2, 5))),
    numerator_chars=_chars(Fraction(3, 5), (1, 3, 5, 7, 9)),
    signs=(-1, 1, -1, 1, -1),
)

RESIDUE_WITNESSES = (PHI_WITNESS, PSI_WITNESS)


@dataclass
class ResidueReport:
    name: str
    tau: complex
    numeric: list = field(default_factory=list)
    closed_form: list = field(default_factory=list)
    max_rel_error: float = 0.0
    sum_abs: float = 0.0

    @property
    def passed(self):
        return self.max_rel_error < 1e-8 and self.sum_abs < 1e-8


def residue_report(witness, tau, cfg=None, samples=4096, radius=None):
    """Numeric residues at every pole vs. the closed forms, plus the
    sum-to-zero check (relative to the largest residue)."""
    cfg = cfg or EvalConfig()
    f = witness.function(tau, cfg)
    r = radius if radius is not None else witness.default_radius(tau)
    numeric = [numeric_residue(f, p, r, samples)
               for p in witness.pole_points(tau)]
    closed = witness.closed_form_residues(tau, cfg)
    scale = max(abs(c) for c in closed)
    rel = max(abs(n - c) for n, c in zip(numeric, closed)) / scale
    return ResidueReport(name=witness.name, tau=tau, numeric=numeric,
                         closed_form=closed, max_rel_error=rel,
                         sum_abs=abs(sum(numeric)) / scale)
