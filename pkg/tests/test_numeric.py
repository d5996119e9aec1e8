import cmath
import math
from fractions import Fraction

import pytest

from theta5.catalog import IdentityKind
from theta5.catalog_data import builtin_catalog
from theta5.numeric import (EvalConfig, PHI_WITNESS, PSI_WITNESS,
                            identity_residual, numeric_residue, residue_report,
                            sample_tau, sample_zeta, theta_eval,
                            zero_location_check)
from theta5.theta import Characteristic

C = Characteristic.of


def test_eval_config_validation():
    with pytest.raises(ValueError):
        EvalConfig(max_terms=4)


def test_sample_tau_deterministic_and_in_range():
    a = sample_tau(42, 20)
    b = sample_tau(42, 20)
    assert a == b
    assert sample_tau(43, 20) != a
    for t in a:
        assert -0.5 <= t.real <= 0.5 and 0.8 <= t.imag <= 2.0


def test_sample_zeta_deterministic():
    assert sample_zeta(7, 5) == sample_zeta(7, 5)


def test_eval_rejects_lower_half_plane():
    with pytest.raises(ValueError):
        theta_eval(C(0, 0), 0.0, -1j)


def test_max_terms_cap_raises():
    cfg = EvalConfig(tol=1e-12, max_terms=8)
    with pytest.raises(ValueError):
        theta_eval(C(0, 0), 0.0, 0.001j, cfg)  # slow decay: needs many terms


def test_identity_residual_zero_over_zero_guard():
    # theta[1;1] at zeta=0 vanishes: every term of any identity built purely
    # from it is 0, and the residual must be 0 rather than NaN
    ident = next(i for i in builtin_catalog() if i.id == "jacobi-quartic")
    assert identity_residual(ident, 0.1 + 1.0j) < 1e-12


def test_residuals_small_for_holds_and_large_for_corrupt():
    from theta5.catalog import corrupt_identity
    cat = {i.id: i for i in builtin_catalog()}
    tau = 0.17 + 1.21j
    zeta = 0.11 + 0.08j
    for ident_id in ("quintic-eps35", "three-theta-35-9", "mixed-product-del1"):
        ident = cat[ident_id]
        z = zeta if ident.kind is IdentityKind.FUNCTION else None
        assert identity_residual(ident, tau, z) < 1e-9
        assert identity_residual(corrupt_identity(ident, 2), tau, z) > 1e-3


def test_numeric_residue_on_simple_pole():
    # f(z) = 3/(z - 0.5) + cos(z): residue 3 at 0.5
    f = lambda z: 3.0 / (z - 0.5) + cmath.cos(z)
    r = numeric_residue(f, 0.5, 0.05)
    assert abs(r - 3.0) < 1e-12
    with pytest.raises(ValueError):
        numeric_residue(f, 0.5, 0.0)


@pytest.mark.parametrize("witness", [PHI_WITNESS, PSI_WITNESS])
def test_residue_closed_forms(witness):
    for tau in sample_tau(3, 2):
        rep = residue_report(witness, tau)
        assert rep.max_rel_error < 1e-8, (witness.name, tau)
        assert rep.sum_abs < 1e-8


def test_witness_pole_count_and_radius():
    tau = 0.2 + 1.1j
    pts = PHI_WITNESS.pole_points(tau)
    assert len(pts) == 5
    r = PHI_WITNESS.default_radius(tau)
    dmin = min(abs(p - q) for i, p in enumerate(pts) for q in pts[i + 1:])
    assert math.isclose(r, 0.02 * dmin)


def test_zero_location_for_several_chars():
    for char in (C(1, 1), C(Fraction(1, 5), Fraction(7, 5)),
                 C(Fraction(3, 5), 1)):
        ok, z0, v, d = zero_location_check(char, 0.12 + 1.3j)
        assert ok, (char, abs(v))
