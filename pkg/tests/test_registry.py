import pytest

from zetareg import DomainError, UnknownIdentityError
from zetareg.registry import SamplePlan, check, list_identities, lookup, run_suite, sample_points

REQUIRED = (
    "I-1.4 I-1.5 I-1.14 I-1.15 I-1.16 I-2.4 I-2.7 I-1.6 I-1.7 I-1.8 I-1.9 I-1.10 I-1.11 "
    "I-2.6 I-2.8 I-2.8.1 I-2.10 I-2.11 I-2.12 I-2.13 I-2.14 I-2.15 I-3.1 I-3.2 I-3.3 I-3.4 "
    "I-3.6 I-4.1 I-4.2 I-5.1 I-5.2 I-5.3 I-5.4 I-5.5 I-5.6 I-6.1 I-6.4 I-6.6 I-6.7 I-6.9 "
    "I-6.10 I-6.11 I-7.1 I-7.5 I-7.6 I-7.7 I-7.16 I-7.17 I-7.18 I-7.19 I-7.21 I-7.23 I-β0 "
    "I-β'0 I-β'1 I-8.1 I-8.4 I-8.5 I-8.6 I-8.7 I-8.8 I-8.10 I-8.11 I-Dilcher-1 I-Dilcher-2 "
    "I-9.4 I-9.9 I-9.12 I-9.15 I-9.16 I-9.18 I-9.20 I-9.23 I-9.24 I-9.26 I-9.27 I-9.28 "
    "I-9.30 I-zeta-odd"
).split()


def test_catalog_complete_and_unique():
    ids = [d.id for d in list_identities()]
    assert len(ids) == len(set(ids))
    assert len(ids) >= 55
    missing = [i for i in REQUIRED if i not in ids]
    assert not missing


def test_aliases_resolve():
    assert lookup("I-7.20") == lookup("I-7.19")
    assert lookup("I-8.14").id == "I-8.11"
    assert lookup("I-9.29").id == "I-9.12"
    assert "functional equation for the first stieltjes" in lookup("I-7.19").title.lower()


def test_unknown_and_domain_errors():
    with pytest.raises(UnknownIdentityError):
        lookup("I-99.9")
    with pytest.raises(DomainError):
        check("I-3.6", {"x": 0.7})
    with pytest.raises(DomainError):
        check("I-3.6", {})
    with pytest.raises(DomainError):
        check("I-3.6", {"x": 0.2, "y": 1.0})


def test_spec_examples():
    c = check("I-3.6", {"x": 0.2})
    assert c.passed and c.residual <= c.tol
    assert check("I-8.8").passed
    assert check("I-2.14").passed
    c = check("I-8.10")
    assert c.passed
    assert "log 3 form" in c.note and "log 2 form" in c.note


def test_tolerance_covers_error_bars():
    c = check("I-7.1", {"x": 0.4})
    assert c.tol >= 4 * (c.lhs_err + c.rhs_err)
    assert c.passed == (c.residual <= c.tol)


@pytest.mark.parametrize("id_, needle", [
    ("I-7.18", "squared series counted once"),
    ("I-8.1", "zeta(2)/4"),
    ("I-8.5", "zeta(2)/4"),
    ("I-9.24", "zeta'(0) - log 2"),
    ("I-9.28", "minus sign"),
    ("I-7.23", "pi^(1-s)"),
    ("I-β0", "-beta(0)"),
])
def test_printed_variants_reported_and_off(id_, needle):
    c = check(id_)
    assert c.passed
    assert needle in c.note
    printed = float(c.note.rsplit("residual ", 1)[1])
    assert printed > 1e-3


def test_smoke_run_filters():
    cases = run_suite("I-7", SamplePlan.SMOKE)
    assert cases and all(c.passed for c in cases)
    assert {c.id for c in cases} >= {"I-7.1", "I-7.19", "I-7.23"}
    assert run_suite("I-none") == []


def test_functional_equations_use_five_points_in_half_interval():
    for id_ in ("I-3.6", "I-4.2", "I-7.19", "I-8.11"):
        pts = [p["x"] for p in sample_points(id_)]
        assert len(pts) >= 5 and all(0 < x < 0.5 for x in pts)


def test_full_plan(full_suite):
    assert len(full_suite) >= 300
    assert {c.id for c in full_suite} == {d.id for d in list_identities()}
    failed = [(c.id, c.params, c.residual, c.tol, c.note) for c in full_suite if not c.passed]
    assert not failed
