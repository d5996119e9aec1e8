"""Divisor sums and the convolution identity they satisfy.

delta(n) counts divisors congruent to 1 mod 3 minus those congruent to
2 mod 3.  The arithmetic consequence of the cubic theta relations is

    sigma(3n + 2) = 3 * sum_{k=0}^{n} delta(3k + 1) * delta(3(n-k) + 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field


def sigma(n):
    """Sum of the positive divisors of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d
            if d != n // d:
                total += n // d
        d += 1
    return total


def delta(n):
    """(# divisors of n that are 1 mod 3) - (# that are 2 mod 3)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    count = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            for e in {d, n // d}:
                r = e % 3
                if r == 1:
                    count += 1
                elif r == 2:
                    count -= 1
        d += 1
    return count


@dataclass
class ArithReport:
    n_max: int
    checked: int
    failures: list = field(default_factory=list)  # [(n, lhs, rhs)]

    @property
    def passed(self):
        return not self.failures


def verify_sigma_convolution(n_max):
    """Checks sigma(3n+2) = 3 * sum_k delta(3k+1) delta(3(n-k)+1) for
    0 <= n <= n_max.  The delta values are tabulated once, so the check is
    quadratic in n_max with a tiny constant."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    d = [delta(3 * k + 1) for k in range(n_max + 1)]
    failures = []
    for n in range(n_max + 1):
        lhs = sigma(3 * n + 2)
        rhs = 3 * sum(d[k] * d[n - k] for k in range(n + 1))
        if lhs != rhs:
            failures.append((n, lhs, rhs))
    return ArithReport(n_max=n_max, checked=n_max + 1, failures=failures)
