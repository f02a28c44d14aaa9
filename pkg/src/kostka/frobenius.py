"""Frobenius compound characters from cycle-distribution enumeration.

The compound character attached to a partition (lambda) is the character of
S_n induced from the trivial character of the Young subgroup
H = S_{lambda_1} x S_{lambda_2} x ...  Its value on a class with cycle
multiplicities (m_1, m_2, ...) is computed purely combinatorially: sum,
over all ways of distributing the m_j j-cycles among the subgroup factors
so that factor i receives total size lambda_i, of the product over j of the
multinomial m_j! / prod_i m_{j,i}!.
"""

from __future__ import annotations

from math import factorial, prod

from .errors import InputError
from .partitions import (
    CycleType,
    Partition,
    SymmetricGroupContext,
    class_size,
    cycle_type_weight,
    to_cycle_type,
)
from .tables import IntegerTable, make_table

#: A distribution is an n x n grid m[j-1][i-1] = number of j-cycles placed
#: in subgroup factor i; rows are cycle lengths, columns are factors.
DistributionMatrix = tuple[tuple[int, ...], ...]


def _check_weights(lam: Partition, l: CycleType) -> int:
    n = cycle_type_weight(l)
    if sum(lam) != n:
        raise InputError(
            f"partition {lam} and cycle type of weight {n} do not match"
        )
    return n


def _factor_fills(size: int, lengths, remaining):
    """Yield assignments {j: count} filling one factor of the given size.

    lengths is the list of still-relevant cycle lengths; counts are chosen
    largest-first for the smallest length, giving a fixed deterministic
    order of solutions.
    """
    if not lengths:
        if size == 0:
            yield {}
        return
    j = lengths[0]
    top = min(remaining[j], size // j)
    for c in range(top, -1, -1):
        remaining[j] -= c
        for rest in _factor_fills(size - c * j, lengths[1:], remaining):
            fill = {j: c} if c else {}
            fill.update(rest)
            yield fill
        remaining[j] += c


def enumerate_distributions(lam: Partition, l: CycleType) -> list[DistributionMatrix]:
    """Every solution of the distribution constraints, in deterministic order."""
    n = _check_weights(lam, l)
    lengths = [j for j, m in enumerate(l, start=1) if m > 0]
    remaining = {j: l[j - 1] for j in lengths}
    solutions: list[DistributionMatrix] = []

    def backtrack(i: int, fills: list[dict]):
        if i == len(lam):
            grid = [[0] * n for _ in range(n)]
            for col, fill in enumerate(fills):
                for j, c in fill.items():
                    grid[j - 1][col] = c
            solutions.append(tuple(tuple(row) for row in grid))
            return
        # materialize before recursing: the generator borrows `remaining`
        # internally and must be fully unwound before we mutate it here
        for fill in list(_factor_fills(lam[i], lengths, remaining)):
            for j, c in fill.items():
                remaining[j] -= c
            backtrack(i + 1, fills + [fill])
            for j, c in fill.items():
                remaining[j] += c

    backtrack(0, [])
    return solutions


def subgroup_class_count(lam: Partition, l: CycleType) -> int:
    """Number of elements of the Young subgroup lying in the given S_n class."""
    _check_weights(lam, l)
    total = 0
    for grid in enumerate_distributions(lam, l):
        term = 1
        for i, lam_i in enumerate(lam):
            num = factorial(lam_i)
            den = prod(
                j ** grid[j - 1][i] * factorial(grid[j - 1][i])
                for j in range(1, len(grid) + 1)
                if grid[j - 1][i]
            )
            assert num % den == 0, "factor class count must divide exactly"
            term *= num // den
        total += term
    return total


def frobenius_character(lam: Partition, l: CycleType) -> int:
    """Compound character value: sum over distributions of row multinomials."""
    _check_weights(lam, l)
    total = 0
    for grid in enumerate_distributions(lam, l):
        term = 1
        for j, m_j in enumerate(l, start=1):
            if m_j == 0:
                continue
            den = prod(factorial(c) for c in grid[j - 1] if c)
            num = factorial(m_j)
            assert num % den == 0, "row multinomial must divide exactly"
            term *= num // den
        total += term
    return total


def frobenius_table(ctx: SymmetricGroupContext) -> IntegerTable:
    """Full k x k compound-character table in canonical order."""
    cycle_types = [to_cycle_type(p) for p in ctx.partitions]
    values = [
        [frobenius_character(lam, l) for l in cycle_types] for lam in ctx.partitions
    ]
    return make_table("frobenius", ctx.n, ctx.partitions, ctx.partitions, values)


def check_compound_class_identity(lam: Partition, l: CycleType) -> bool:
    """Exact identity tying the two compound-character expressions together:
    phi * g_(l) * |H| = n! * h_(l)."""
    n = _check_weights(lam, l)
    h_order = prod(factorial(p) for p in lam)
    lhs = frobenius_character(lam, l) * class_size(l) * h_order
    rhs = factorial(n) * subgroup_class_count(lam, l)
    return lhs == rhs
