from math import factorial, prod

import pytest

from golden import S3_FROBENIUS, S5_FROBENIUS
from kostka import (
    InputError,
    build_context,
    class_size,
    enumerate_distributions,
    frobenius_character,
    frobenius_table,
    subgroup_class_count,
    to_cycle_type,
)
from oracles import frobenius_row_by_enumeration


def test_enumerate_distributions_worked_example():
    # lambda=(3,2), class=(2,1,1,1): the two distributions from the S_5 walkthrough
    sols = enumerate_distributions((3, 2), to_cycle_type((2, 1, 1, 1)))
    assert len(sols) == 2
    first, second = sols
    assert first[0][0] == 3 and first[1][1] == 1  # three 1-cycles | one 2-cycle
    assert second[0][0] == 1 and second[0][1] == 2 and second[1][0] == 1


def test_enumerate_distributions_infeasible_and_trivial():
    assert enumerate_distributions((3, 2), to_cycle_type((4, 1))) == []
    for cls in build_context(5).partitions:
        assert len(enumerate_distributions((5,), to_cycle_type(cls))) == 1


def test_enumerate_distributions_constraints_hold():
    lam = (3, 1, 1)
    l = to_cycle_type((2, 1, 1, 1))
    for grid in enumerate_distributions(lam, l):
        for j in range(1, 6):
            assert sum(grid[j - 1]) == l[j - 1]
        for i in range(5):
            size = lam[i] if i < len(lam) else 0
            assert sum(j * grid[j - 1][i] for j in range(1, 6)) == size


def test_weight_mismatch_rejected():
    with pytest.raises(InputError):
        enumerate_distributions((3, 2), to_cycle_type((2, 1)))
    with pytest.raises(InputError):
        frobenius_character((2, 2), to_cycle_type((5,)))


def test_subgroup_class_count():
    assert subgroup_class_count((3, 2), to_cycle_type((4, 1))) == 0
    assert subgroup_class_count((2, 2, 1), to_cycle_type((1, 1, 1, 1, 1))) == 1
    # the full group: reduces to the plain class size
    for cls in build_context(5).partitions:
        l = to_cycle_type(cls)
        assert subgroup_class_count((5,), l) == class_size(l)


def test_frobenius_character_worked_values():
    assert frobenius_character((3, 2), to_cycle_type((2, 1, 1, 1))) == 4
    assert frobenius_character((2, 2, 1), to_cycle_type((1, 1, 1, 1, 1))) == 30
    assert frobenius_character((3, 2), to_cycle_type((4, 1))) == 0


def test_frobenius_table_golden(ctx3, ctx5):
    assert frobenius_table(ctx3).values == S3_FROBENIUS
    assert frobenius_table(ctx5).values == S5_FROBENIUS
    assert frobenius_table(build_context(2)).values == ((1, 1), (0, 2))


@pytest.mark.parametrize("n", range(2, 9))
def test_top_row_all_ones(n):
    ctx = build_context(n)
    table = frobenius_table(ctx)
    assert table.values[0] == (1,) * ctx.k
    assert all(v >= 0 for row in table.values for v in row)


@pytest.mark.parametrize("n", range(2, 7))
def test_identity_class_column_is_multinomial(n):
    ctx = build_context(n)
    table = frobenius_table(ctx)
    for lam, row in zip(ctx.partitions, table.values):
        assert row[-1] == factorial(n) // prod(factorial(p) for p in lam)


@pytest.mark.parametrize("n", range(2, 7))
def test_two_expressions_agree(n):
    ctx = build_context(n)
    for lam in ctx.partitions:
        h_order = prod(factorial(p) for p in lam)
        for cls in ctx.partitions:
            l = to_cycle_type(cls)
            lhs = frobenius_character(lam, l) * class_size(l) * h_order
            rhs = factorial(n) * subgroup_class_count(lam, l)
            assert lhs == rhs


@pytest.mark.parametrize("n", range(1, 6))
def test_brute_force_subgroup_oracle(n):
    ctx = build_context(n)
    table = frobenius_table(ctx)
    for lam, row in zip(ctx.partitions, table.values):
        assert row == frobenius_row_by_enumeration(lam, ctx)
