import math
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from zetareg.regsum import TrigKind, TrigSeriesSpec, abel_trig_limit
from zetareg.special import bernoulli_poly, clausen_cl2, csum, digamma, log_gamma
from zetareg.zeta import hurwitz_zeta_deriv, stieltjes

unit = st.floats(min_value=0.02, max_value=0.98)
s_away = st.floats(min_value=-3.0, max_value=4.0).filter(lambda s: abs(s - 1) > 0.05)


@given(unit)
def test_zeta_at_zero(x):
    assert abs(hurwitz_zeta_deriv(0, 0.0, x).value - (0.5 - x)) <= 1e-13


@given(s_away, st.floats(min_value=0.1, max_value=5.0))
def test_hurwitz_shift(s, x):
    a = hurwitz_zeta_deriv(0, s, x).value
    b = hurwitz_zeta_deriv(0, s, x + 1).value
    assert math.isclose(a - b, x**-s, rel_tol=1e-11, abs_tol=1e-12)


@given(st.floats(min_value=0.05, max_value=20.0))
def test_gamma_recurrences(x):
    assert math.isclose(digamma(x + 1).value, digamma(x).value + 1 / x, rel_tol=1e-13, abs_tol=1e-13)
    assert math.isclose(log_gamma(x + 1).value, log_gamma(x).value + math.log(x), abs_tol=1e-13)


@given(st.floats(min_value=0.1, max_value=3.0))
@settings(max_examples=30)
def test_stieltjes_shift(x):
    d = stieltjes(1, x).value - stieltjes(1, x + 1).value
    assert math.isclose(d, math.log(x) / x, abs_tol=1e-12)


@given(st.integers(min_value=0, max_value=12), st.fractions(min_value=0, max_value=1))
def test_bernoulli_reflection(n, t):
    assert bernoulli_poly(n, 1 - t) == (-1) ** n * bernoulli_poly(n, Fraction(t))


@given(st.floats(min_value=0.01, max_value=6.2))
def test_clausen_odd(theta):
    assert abs(clausen_cl2(theta).value + clausen_cl2(-theta).value) <= 1e-14


@given(st.lists(st.floats(min_value=-1e6, max_value=1e6), max_size=200))
def test_csum_matches_fsum(vals):
    assert csum(vals) == math.fsum(vals)


@given(st.floats(min_value=0.05, max_value=0.95))
@settings(max_examples=15, deadline=None)
def test_abel_cosine_limit(x):
    r = abel_trig_limit(TrigSeriesSpec(0, x, kind=TrigKind.COS))
    assert abs(r.value + 0.5) <= 1e-9
