import json

import pytest

from kostka import (
    InputError,
    build_context,
    frobenius_table,
    run_checks,
    to_cycle_type,
    triangular_solve,
    verify_compound_consistency,
    verify_cross_method,
    verify_frobenius_identity,
    verify_orthonormality,
)
from kostka.tables import make_table


def test_orthonormality_pass_and_fail(ctx3):
    result = triangular_solve(frobenius_table(ctx3), ctx3)
    assert verify_orthonormality(result.characters, ctx3).passed

    perturbed = [list(row) for row in result.characters.values]
    perturbed[1][1] += 1
    bad = make_table("characters", 3, ctx3.partitions, ctx3.partitions, perturbed)
    check = verify_orthonormality(bad, ctx3)
    assert not check.passed
    assert "2+1" in check.detail


@pytest.mark.parametrize("n", (2, 3, 4))
def test_frobenius_identity_all_classes(n):
    ctx = build_context(n)
    for p in ctx.partitions:
        assert verify_frobenius_identity(ctx, to_cycle_type(p)).passed


def test_frobenius_identity_cap():
    ctx = build_context(6)
    with pytest.raises(InputError):
        verify_frobenius_identity(ctx, to_cycle_type((6,)))


@pytest.mark.parametrize("n", (1, 3, 5))
def test_cross_method(n):
    assert verify_cross_method(n).passed
    with pytest.raises(InputError):
        verify_cross_method(7)


def test_compound_consistency(ctx5):
    assert verify_compound_consistency(ctx5).passed


@pytest.mark.parametrize("n", range(1, 6))
def test_full_report_passes(n):
    report = run_checks(n)
    assert report.all_passed
    assert report.checks


def test_report_serialization(ctx3):
    report = run_checks(3)
    data = json.loads(report.to_json())
    assert {c["name"] for c in data["checks"]} == {c.name for c in report.checks}
    assert all(c["passed"] for c in data["checks"])
    text = report.to_text()
    assert text.count("PASS") == len(report.checks)


def test_deep_flag_adds_raw_checks():
    shallow = run_checks(5, deep=False)
    deep = run_checks(5, deep=True)
    assert len(deep.checks) == len(shallow.checks) + 7
    assert deep.all_passed
