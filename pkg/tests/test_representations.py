import math

import pytest

import oracle_values as O
from zetareg import ConvergenceError, DomainError
from zetareg.regsum import TrigKind
from zetareg.representations import (
    ST_SERIES,
    RepresentationPath,
    STForm,
    alt_exp_log_closed,
    barnes_fourier,
    digamma_fourier,
    dilcher_alt_log_sum,
    gamma1_reflection_series,
    gamma1_rep,
    hansen_trig_closed,
    kummer_log_gamma,
    odd_zeta_prime_series,
    srivastava_tsumura,
    zeta2_fourier,
    zeta_odd_power_series,
    zeta_prime_neg1_fourier,
)


def test_hansen_closed_form_log_cosine():
    r = hansen_trig_closed(1, 0.3, 0.0, None, TrigKind.COS)
    assert abs(r.value - O.C1_03) <= 1e-12


def test_digamma_fourier_both_paths():
    for path in RepresentationPath.STIELTJES_EXPANSION, RepresentationPath.ABEL:
        r = digamma_fourier(0.3, None, path)
        assert abs(r.value - O.DIGAMMA_03) <= 1e-9
        assert r.path is path


def test_kummer():
    assert abs(kummer_log_gamma(0.3).value - O.LOGGAMMA_03) <= 1e-9


@pytest.mark.parametrize("path", [RepresentationPath.ABEL, RepresentationPath.STIELTJES_EXPANSION])
def test_gamma1_rep(path):
    r = gamma1_rep(0.3, None, path)
    assert abs(r.value - O.G1_03) <= 1e-8


@pytest.mark.parametrize("u, ref", [(0.3, O.Z2_03), (0.7, O.Z2_07), (0.5, O.HZ2_0_05)])
def test_zeta2_fourier(u, ref):
    assert abs(zeta2_fourier(u).value - ref) <= 1e-9


def test_zeta2_fourier_quarter_coefficient_is_off():
    # the zeta(2)/4 variant misses by exactly zeta(2)/(4 pi) times the sine sum
    off = zeta2_fourier(0.3, zeta2_coeff=0.25).value - O.Z2_03
    assert abs(off) > 1e-2


def test_barnes_and_zeta_prime_fourier():
    assert abs(barnes_fourier(0.3).value - O.LOGG_13) <= 1e-9
    assert abs(zeta_prime_neg1_fourier(0.3).value - O.ZPN1_03) <= 1e-12


@pytest.mark.parametrize("form", list(STForm))
def test_srivastava_tsumura_matches_direct(form):
    from zetareg.regsum import direct_trig_sum
    kind, x = ST_SERIES[form]
    lhs = direct_trig_sum(0, x, 2.0, kind).value
    assert abs(srivastava_tsumura(form, 2.0).value - lhs) <= 1e-13


def test_srivastava_tsumura_labels():
    assert srivastava_tsumura("1.6", 2.0).value == pytest.approx(O.ST16_2, abs=1e-14)


def test_odd_series_at_pi():
    v = odd_zeta_prime_series(math.pi)
    assert abs(v.value - (0.5772156649015329 + math.log(math.pi)) / math.pi) <= 1e-10


def test_reflection_series_range():
    from zetareg.zeta import stieltjes
    ref = stieltjes(1, 0.7).value - stieltjes(1, 1.3).value
    assert abs(gamma1_reflection_series(0.3).value - ref) <= 1e-10
    with pytest.raises(ConvergenceError):
        gamma1_reflection_series(0.6)


def test_zeta_odd_power_series():
    r = zeta_odd_power_series(0.5)
    assert r.agree
    with pytest.raises(ConvergenceError):
        zeta_odd_power_series(0.97)
    with pytest.raises(DomainError):
        zeta_odd_power_series(1.0)


def test_alt_exp_closed_at_zero():
    assert abs(alt_exp_log_closed(0.0).value - O.HALF_LOG_PI_2) <= 1e-12
    with pytest.raises(DomainError):
        alt_exp_log_closed(4.0)


def test_dilcher_k1():
    # sum (-1)^n log n / n = gamma log 2 - log^2(2)/2
    ref = 0.5772156649015329 * math.log(2) - math.log(2) ** 2 / 2
    assert abs(dilcher_alt_log_sum(1).value - ref) <= 1e-14
