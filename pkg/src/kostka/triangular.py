"""Row-by-row inversion of the unitriangular compound/irreducible coupling.

Processing the compound-character rows from (n) down to (1^n), each new
irreducible character is the residual of the compound row after projecting
out the characters already found.  The projection coefficients form the
Kostka matrix; tracking each residual as an integer combination of the
compound rows yields the inverse Kostka matrix at no extra cost.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, VerificationError
from .partitions import SymmetricGroupContext, build_context
from .tables import IntegerTable, invert_unitriangular, make_table


def bracket(f, g, ctx: SymmetricGroupContext) -> Fraction:
    """Class-function inner product: (1/n!) sum over classes of size*f*g."""
    if len(f) != ctx.k or len(g) != ctx.k:
        raise InputError(
            f"rows must have one entry per class ({ctx.k}), got {len(f)} and {len(g)}"
        )
    total = sum(m * fi * gi for m, fi, gi in zip(ctx.class_sizes, f, g))
    return Fraction(total, ctx.group_order)


def _integral(value: Fraction) -> int:
    if value.denominator != 1:
        raise VerificationError(f"expected an integer bracket, got {value}")
    return int(value)


@dataclass
class TriangularSolveResult:
    kostka: IntegerTable
    inverse_kostka: IntegerTable
    characters: IntegerTable


def triangular_solve(
    phi: IntegerTable, ctx: SymmetricGroupContext | None = None
) -> TriangularSolveResult:
    """Invert a compound-character table into Kostka, inverse Kostka and
    irreducible characters simultaneously.

    Any non-unit diagonal bracket or non-integer projection means the input
    table is not a genuine compound-character table and raises
    VerificationError.
    """
    if ctx is None:
        ctx = build_context(phi.n)
    k = ctx.k
    if len(phi.values) != k:
        raise InputError(f"expected a {k}x{k} table for n={ctx.n}")

    chi_rows: list[list[int]] = []
    inv_rows: list[list[int]] = []
    kostka = [[0] * k for _ in range(k)]

    for r in range(k):
        coeffs = [
            _integral(bracket(phi.values[r], chi_rows[s], ctx)) for s in range(r)
        ]
        residual = list(phi.values[r])
        expansion = [0] * k
        expansion[r] = 1
        for s, a in enumerate(coeffs):
            if a == 0:
                continue
            for c in range(k):
                residual[c] -= a * chi_rows[s][c]
                expansion[c] -= a * inv_rows[s][c]
        if bracket(phi.values[r], residual, ctx) != 1:
            raise VerificationError(
                f"diagonal bracket is not 1 at row {r}; input table is corrupt"
            )
        kostka[r][:r] = coeffs
        kostka[r][r] = 1
        chi_rows.append(residual)
        inv_rows.append(expansion)

    # Redundant route: direct inversion of the Kostka matrix must agree
    # with the tracked compound-row expansions.
    if invert_unitriangular(kostka) != tuple(tuple(row) for row in inv_rows):
        raise VerificationError("tracked expansion disagrees with matrix inversion")

    labels = ctx.partitions
    return TriangularSolveResult(
        kostka=make_table("kostka", ctx.n, labels, labels, kostka),
        inverse_kostka=make_table("inverse-kostka", ctx.n, labels, labels, inv_rows),
        characters=make_table("characters", ctx.n, labels, labels, chi_rows),
    )
