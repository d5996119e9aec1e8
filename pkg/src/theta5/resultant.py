"""Exact resultants of polynomials with cyclotomic coefficients.

Polynomials are plain lists of Cyclotomic coefficients, degree-0 first.
The resultant is computed as the determinant of the Sylvester matrix via
fraction-free Bareiss elimination (exact divisions use field inverses in
Q(zeta_N)).  A closed 2x2-quadratic formula and the numeric theta quadratics
that share the root theta[1;1/5]/theta[1;3/5] round the module out.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyclotomic, cyclo_root
from .numeric import EvalConfig, theta_eval
from .theta import Characteristic


def _as_cyclo(c):
    return c if isinstance(c, Cyclotomic) else Cyclotomic.from_rational(Fraction(c))


def poly_degree(p):
    """Degree after dropping trailing (leading-coefficient) zeros."""
    d = len(p) - 1
    while d > 0 and _as_cyclo(p[d]).is_zero():
        d -= 1
    return d if not (d == 0 and _as_cyclo(p[0]).is_zero()) else -1


def sylvester_matrix(f, g):
    """The (m+n) x (m+n) Sylvester matrix of f (degree m) and g (degree n).

    Row i < n holds the coefficients of x^(n-1-i) * f, highest degree first;
    the remaining m rows do the same with g."""
    m, n = poly_degree(f), poly_degree(g)
    if m < 0 or n < 0:
        raise ValueError("resultant of the zero polynomial is undefined")
    if m == 0 and n == 0:
        return []
    size = m + n
    fa = [_as_cyclo(c) for c in reversed(f[:m + 1])]
    ga = [_as_cyclo(c) for c in reversed(g[:n + 1])]
    zero = Cyclotomic.zero()
    rows = []
    for i in range(n):
        rows.append([zero] * i + fa + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + ga + [zero] * (size - n - 1 - i))
    return rows


def _bareiss_det(rows):
    """Exact determinant by Bareiss fraction-free elimination with row
    pivoting; every division is exact in the field."""
    n = len(rows)
    if n == 0:
        return Cyclotomic.one()
    m = [list(r) for r in rows]
    sign = 1
    prev = Cyclotomic.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Cyclotomic.zero()
        inv_prev = prev.inverse()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) * inv_prev
            m[i][k] = Cyclotomic.zero()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(f, g):
    """Res(f, g) = det of the Sylvester matrix, exactly."""
    m, n = poly_degree(f), poly_degree(g)
    if m == 0 and n == 0:
        return Cyclotomic.one()
    if m == 0:
        return _as_cyclo(f[0]) ** n
    if n == 0:
        return _as_cyclo(g[0]) ** m
    return _bareiss_det(sylvester_matrix(f, g))


def resultant_2x2(a, b):
    """Closed form for two quadratics a0 x^2 + a1 x + a2, b0 x^2 + b1 x + b2
    (a = (a0, a1, a2) leading-first):

        (a0 b2 - a2 b0)^2 - (a0 b1 - a1 b0)(a1 b2 - a2 b1)

    Exact when given Cyclotomic/rational coefficients; also accepts complex
    doubles for numeric work.
    """
    exact = all(isinstance(c, (Cyclotomic, int, Fraction)) for c in (*a, *b))
    if exact:
        a0, a1, a2 = (_as_cyclo(c) for c in a)
        b0, b1, b2 = (_as_cyclo(c) for c in b)
    else:
        a0, a1, a2 = (complex(c) for c in a)
        b0, b1, b2 = (complex(c) for c in b)
    return ((a0 * b2 - a2 * b0) ** 2
            - (a0 * b1 - a1 * b0) * (a1 * b2 - a2 * b1))


def theta_quadratics(tau, z, w, cfg=None):
    """Numeric coefficient triples (leading-first) of the two quadratics that
    the ratio theta[1;1/5]/theta[1;3/5] satisfies:

        f(X) = X^2 A3(z) A7(z) - X A5(z)^2       - A1(z) A9(z)
        g(X) = X^2 w5 A5(w) A9(w) - X w5 A7(w)^2 + A1(w) A3(w)

    where Ak = theta[1/5; k/5] (A5 meaning theta[1/5; 1]) and w5 = zeta5^2.
    Their shared root forces the resultant to vanish identically in (z, w)."""
    cfg = cfg or EvalConfig()

    def A(k, arg):
        return theta_eval(Characteristic.of(Fraction(1, 5), Fraction(k, 5)),
                          arg, tau, cfg)

    w5 = cyclo_root(2, 5).embed()
    fq = (A(3, z) * A(7, z), -A(5, z) ** 2, -A(1, z) * A(9, z))
    gq = (w5 * A(5, w) * A(9, w), -w5 * A(7, w) ** 2, A(1, w) * A(3, w))
    return fq, gq


def shared_root_ratio(tau, cfg=None):
    """The common root itself: theta[1;1/5] / theta[1;3/5] at zeta = 0."""
    cfg = cfg or EvalConfig()
    return (theta_eval(Characteristic.of(1, Fraction(1, 5)), 0.0, tau, cfg)
            / theta_eval(Characteristic.of(1, Fraction(3, 5)), 0.0, tau, cfg))
