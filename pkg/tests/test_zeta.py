import math

import pytest

import oracle_values as O
from zetareg import DomainError, EvalContext, PoleError
from zetareg.zeta import (
    alt_zeta_deriv,
    barnes_log_g,
    barnes_log_g_product,
    dirichlet_beta_deriv,
    gamma1_prime,
    hurwitz_zeta_deriv,
    riemann_zeta_deriv,
    stieltjes,
    stieltjes_via_xderiv,
    zeta_prime_minus1,
)


@pytest.mark.parametrize("k, s, x, ref", [
    (0, 2.0, 0.3, O.HZ0_2_03),
    (1, -1.5, 0.7, O.HZ1_M15_07),
    (2, 0.0, 0.5, O.HZ2_0_05),
    (3, 2.0, 1.0, O.HZ3_2_1),
    (1, 0.5, 0.2, O.HZ1_05_02),
])
def test_hurwitz_derivatives(k, s, x, ref):
    r = hurwitz_zeta_deriv(k, s, x)
    assert abs(r.value - ref) <= 1e-13 * max(1, abs(ref))
    assert abs(r.value - ref) <= 4 * r.err_estimate + 1e-15 * abs(ref)


def test_hurwitz_at_zero_is_half_minus_x():
    for x in (0.1, 0.5, 0.9, 2.5):
        assert abs(hurwitz_zeta_deriv(0, 0.0, x).value - (0.5 - x)) <= 1e-14


def test_pole_and_domain():
    with pytest.raises(PoleError):
        hurwitz_zeta_deriv(0, 1.0, 0.5)
    with pytest.raises(PoleError):
        hurwitz_zeta_deriv(0, 1.0005, 0.5)
    with pytest.raises(DomainError):
        hurwitz_zeta_deriv(0, 2.0, 0.0)
    with pytest.raises(DomainError):
        hurwitz_zeta_deriv(4, 2.0, 0.5)


def test_small_budget_widens_error_bar_honestly():
    r = hurwitz_zeta_deriv(1, 0.5, 0.2, EvalContext(em_order=2, max_terms=100))
    assert r.err_estimate > 1e-12
    assert abs(r.value - O.HZ1_05_02) <= r.err_estimate


def test_riemann_values():
    assert riemann_zeta_deriv(1, 2.0).value == pytest.approx(O.RZ1_2, abs=1e-15)
    assert riemann_zeta_deriv(1, -3.0).value == pytest.approx(O.ZP_NEG3, abs=1e-16)
    assert zeta_prime_minus1().value == pytest.approx(O.RZ1_M1, abs=1e-15)
    assert riemann_zeta_deriv(0, 2.0).value == pytest.approx(math.pi**2 / 6, abs=1e-15)


@pytest.mark.parametrize("n, x, ref", [
    (1, 1.0, O.GAMMA1),
    (1, 0.3, O.G1_03),
    (2, 1.0, O.G2_1),
    (3, 0.7, O.G3_07),
    (0, 2.5, O.G0_25),
])
def test_stieltjes_against_oracle(n, x, ref):
    r = stieltjes(n, x)
    assert abs(r.value - ref) <= 1e-12
    assert r.method.value == "direct_series"


def test_gamma0_is_minus_digamma():
    assert stieltjes(0, 1.0).value == pytest.approx(-(-0.5772156649015329), abs=1e-15)


def test_stieltjes_xderiv_route_agrees():
    r = stieltjes_via_xderiv(1, 0.3)
    assert abs(r.value - O.G1_03) <= max(1e-8, r.err_estimate)
    assert r.method.value == "x_derivative"


def test_gamma1_prime():
    assert gamma1_prime(0.3).value == pytest.approx(O.G1P_03, abs=1e-12)


def test_alt_zeta():
    assert alt_zeta_deriv(0, 3.0).value == pytest.approx(O.ETA3, abs=1e-15)
    assert alt_zeta_deriv(1, 2.0).value == pytest.approx(O.ETA1_2, abs=1e-15)
    assert alt_zeta_deriv(2, 0.5).value == pytest.approx(O.ETA2_05, abs=1e-14)
    # regular at s = 1, where the Laurent expansion takes over
    assert alt_zeta_deriv(0, 1.0).value == pytest.approx(math.log(2), abs=1e-13)


def test_dirichlet_beta():
    assert dirichlet_beta_deriv(0, 2.0).value == pytest.approx(O.CATALAN, abs=1e-15)
    assert dirichlet_beta_deriv(0, 0.5).value == pytest.approx(O.BETA_05, abs=1e-14)
    assert dirichlet_beta_deriv(0, 1.0).value == pytest.approx(math.pi / 4, abs=1e-13)
    assert dirichlet_beta_deriv(1, 0.0).value == pytest.approx(O.BETA1_0, abs=1e-14)
    assert dirichlet_beta_deriv(1, 1.0).value == pytest.approx(O.BETA1_1, abs=1e-12)


@pytest.mark.parametrize("x, ref", [(0.5, O.LOGG_05), (2.7, O.LOGG_27)])
def test_barnes_log_g(x, ref):
    assert barnes_log_g(x).value == pytest.approx(ref, abs=1e-14)


def test_barnes_product_independent_route():
    assert barnes_log_g_product(0.3).value == pytest.approx(O.LOGG_13, abs=1e-14)
    assert barnes_log_g_product(-0.5).value == pytest.approx(O.LOGG_05, abs=1e-14)
    assert barnes_log_g(1.0).value == 0.0
    with pytest.raises(DomainError):
        barnes_log_g_product(-1.0)
