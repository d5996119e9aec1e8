"""Exact identity verification and numeric relation discovery.

verify_exact proves an identity by expanding every term as a truncated series
over Q(zeta_N) and checking that the sum cancels coefficient-by-coefficient.
discover_relations rediscovers linear relations among products of theta
functions numerically: sample the functions in zeta at a fixed tau, and read
the relation off the nullspace of the sample matrix (the dimension count
dim F_N = N guarantees such relations exist).
"""

from __future__ import annotations

import functools
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .catalog import Argument, ExpectedStatus
from .numeric import EvalConfig, theta_eval
from .theta import ThetaMode, theta_series


@dataclass
class VerificationReport:
    id: str
    mode: str                 # "exact" | "numeric"
    cutoff: Fraction | None
    status: str               # "pass" | "fail"
    residuals: list = field(default_factory=list)  # [(ExponentPair, Cyclotomic)]
    elapsed_ms: float = 0.0

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        # elapsed_ms is serialized as null so identical runs produce
        # byte-identical reports; wall-clock timing is a text-output affair
        return {
            "id": self.id,
            "mode": self.mode,
            "cutoff": None if self.cutoff is None else
                      f"{self.cutoff.numerator}/{self.cutoff.denominator}",
            "status": self.status,
            "residuals": [
                {"x": f"{e.xExp.numerator}/{e.xExp.denominator}",
                 "z": f"{e.zExp.numerator}/{e.zExp.denominator}",
                 "coeff": c.to_string()}
                for e, c in self.residuals
            ],
            "elapsed_ms": None,
        }


@dataclass
class DiscoveredRelation:
    monomials: list
    coefficients: list
    nullity: int
    tau: complex
    singular_values: list = field(default_factory=list)


@functools.lru_cache(maxsize=None)
def _power_series(char, mode, power, cutoff):
    s = theta_series(char, mode, cutoff)
    if not s.terms and not s.is_zero():  # pragma: no cover
        raise ValueError(f"cutoff {cutoff} excludes every term of {char}")
    return s if power == 1 else s ** power


def _monomial_series(factors, cutoff):
    key = tuple(sorted(((f.char, f.argument, f.power) for f in factors)))
    return _monomial_series_cached(key, Fraction(cutoff))


@functools.lru_cache(maxsize=None)
def _monomial_series_cached(key, cutoff):
    parts = []
    for char, arg, power in key:
        mode = (ThetaMode.FUNCTION if arg is Argument.SYMBOLIC_ZETA
                else ThetaMode.CONSTANT)
        base = theta_series(char, mode, cutoff)
        if not base.terms:
            raise ValueError(
                f"cutoff {cutoff} is too small to include any term of "
                f"theta{char}")
        parts.append(_power_series(char, mode, power, cutoff))
    parts.sort(key=lambda s: len(s.terms))
    acc = parts[0]
    for p in parts[1:]:
        acc = acc * p
    return acc


def verify_exact(ident, cutoff):
    """Exact cancellation proof of one identity at the given x-cutoff."""
    cutoff = Fraction(cutoff)
    if cutoff <= 0:
        raise ValueError("cutoff must be > 0")
    t0 = time.perf_counter()
    total = None
    for term in ident.terms:
        s = _monomial_series(term.factors, cutoff).scale(term.scalar)
        total = s if total is None else total + s
    total = total.scrubbed()
    residuals = total.items()[:10]
    elapsed = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(
        id=ident.id, mode="exact", cutoff=cutoff,
        status="pass" if not residuals else "fail",
        residuals=residuals, elapsed_ms=elapsed)


def verify_all(catalog, cutoff, jobs=1):
    """One exact report per identity, in deterministic id order.

    Entries flagged as suspected misprints are reported but never fail a
    batch; batch_passed() implements that policy.
    """
    catalog = sorted(catalog, key=lambda i: i.id)
    if jobs and jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(lambda i: verify_exact(i, cutoff), catalog))
    else:
        reports = [verify_exact(i, cutoff) for i in catalog]
    return reports


def batch_passed(catalog, reports):
    expected = {i.id: i.expected for i in catalog}
    return all(r.passed or expected.get(r.id) is ExpectedStatus.SUSPECT_TYPO
               for r in reports)


def zeta_grid(z_samples):
    """Deterministic zeta sampling grid, documented for reproducibility."""
    return [complex((j + 0.37) / (z_samples + 1), 0.21)
            for j in range(z_samples)]


def _monomial_value(factors, zeta, tau, cfg):
    v = complex(1.0)
    for f in factors:
        arg = zeta if f.argument is Argument.SYMBOLIC_ZETA else 0.0
        v *= theta_eval(f.char, arg, tau, cfg) ** f.power
    return v


def discover_relations(monomials, tau, z_samples, threshold=1e-8, cfg=None):
    """Numeric nullspace of the (z_samples x k) sample matrix of the given
    theta-product monomials at fixed tau.  Returns nullity and, if >= 1, one
    nullspace vector normalized so its first significant entry is 1."""
    k = len(monomials)
    if z_samples < k:
        raise ValueError("need at least as many zeta samples as monomials")
    if tau.imag <= 0:
        raise ValueError("tau must lie in the upper half-plane")
    cfg = cfg or EvalConfig()
    grid = zeta_grid(z_samples)
    M = np.zeros((z_samples, k), dtype=complex)
    for j, zeta in enumerate(grid):
        for i, mono in enumerate(monomials):
            M[j, i] = _monomial_value(mono, zeta, tau, cfg)
    _, sv, vh = np.linalg.svd(M)
    if not sv[0]:
        raise ValueError("degenerate sampling: all monomials vanish")
    nullity = int(np.sum(sv <= threshold * sv[0]))
    coeffs = []
    if nullity >= 1:
        vec = vh[-1].conj()
        lead = next(x for x in vec if abs(x) > 1e-12)
        coeffs = list(vec / lead)
    return DiscoveredRelation(monomials=list(monomials), coefficients=coeffs,
                              nullity=nullity, tau=tau,
                              singular_values=[float(s) for s in sv])


def reports_to_json(reports):
    payload = {"schema": 1, "reports": [r.to_dict() for r in reports]}
    return json.dumps(payload, indent=1, sort_keys=True)
