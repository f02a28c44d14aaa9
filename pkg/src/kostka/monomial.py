"""Kostka matrices from determinants of complete homogeneous forms.

For a partition mu of n (padded with zeros to length n), build the n x n
grid of subscripts p[r][c] = mu_c + (n-1-c) - r.  The determinant of the
matrix of complete homogeneous polynomials h_p, times the global sign
(-1)^(n(n-1)/2), expands on the monomial-symmetric basis with the Kostka
numbers as coefficients.  No characters are involved anywhere.

The determinant is expanded symbolically first: entries with p < 0 vanish
and p = 0 entries are the constant 1, so the cofactor recursion touches
far fewer than n! products.  Only the surviving products of h's are then
evaluated with exact polynomial arithmetic.
"""

from __future__ import annotations

from .errors import InputError, VerificationError
from .partitions import SymmetricGroupContext
from .symfunc import (
    SymmetricPolynomial,
    complete_homogeneous,
    sym_add,
    sym_mul,
    sym_scale,
    sym_zero,
)
from .tables import IntegerTable, invert_unitriangular, make_table, matmul


def _det_terms(subscripts) -> dict[tuple[int, ...], int]:
    """Symbolic determinant of a matrix of h_p entries.

    Returns a map from sorted tuples of positive subscripts to integer
    coefficients; h_0 = 1 factors are dropped from the key and h_{p<0} = 0
    entries prune the recursion.
    """
    n = len(subscripts)
    memo: dict[frozenset, dict[tuple[int, ...], int]] = {}

    def expand(cols: frozenset) -> dict[tuple[int, ...], int]:
        if not cols:
            return {(): 1}
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = n - len(cols)
        result: dict[tuple[int, ...], int] = {}
        for pos, col in enumerate(sorted(cols)):
            p = subscripts[row][col]
            if p < 0:
                continue
            sign = -1 if pos % 2 else 1
            for key, coeff in expand(cols - {col}).items():
                full = tuple(sorted(key + (p,))) if p > 0 else key
                total = result.get(full, 0) + sign * coeff
                if total:
                    result[full] = total
                else:
                    result.pop(full, None)
        memo[cols] = result
        return result

    return expand(frozenset(range(n)))


def q_determinant(ctx: SymmetricGroupContext, mu) -> SymmetricPolynomial:
    """Signed determinant of complete homogeneous forms for the class mu."""
    mu = tuple(mu)
    n = ctx.n
    if sum(mu) != n:
        raise InputError(f"partition {mu} does not have weight {n}")
    padded = mu + (0,) * (n - len(mu))
    subscripts = [
        [padded[c] + (n - 1 - c) - r for c in range(n)] for r in range(n)
    ]

    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    h_cache: dict[int, SymmetricPolynomial] = {}
    product_cache: dict[tuple[int, ...], SymmetricPolynomial] = {}

    def h(p: int) -> SymmetricPolynomial:
        if p not in h_cache:
            h_cache[p] = complete_homogeneous(n, p)
        return h_cache[p]

    def product(key: tuple[int, ...]) -> SymmetricPolynomial:
        if not key:
            return h(0)
        if key not in product_cache:
            # build from the prefix product so shared factors are reused
            product_cache[key] = sym_mul(product(key[:-1]), h(key[-1]))
        return product_cache[key]

    result = sym_zero(n, n)
    for key, coeff in _det_terms(subscripts).items():
        result = sym_add(result, sym_scale(sign * coeff, product(key)))
    return result


def kostka_from_monomials(ctx: SymmetricGroupContext) -> IntegerTable:
    """Kostka matrix read off the monomial-basis expansions of the
    determinants: entry (row lambda, col mu) is the coefficient of
    m_lambda in the mu determinant."""
    labels = ctx.partitions
    columns = {mu: q_determinant(ctx, mu) for mu in labels}
    values = [
        [columns[mu].coeffs.get(lam, 0) for mu in labels] for lam in labels
    ]
    return make_table("kostka", ctx.n, labels, labels, values)


def inverse_kostka_from_monomials(ctx: SymmetricGroupContext) -> IntegerTable:
    """Exact integer inverse of the monomial-method Kostka matrix.

    Solved by substitution on the unitriangular matrix; a non-unit diagonal
    raises VerificationError.
    """
    kostka = kostka_from_monomials(ctx)
    inverse = invert_unitriangular(kostka.values)
    return make_table("inverse-kostka", ctx.n, ctx.partitions, ctx.partitions, inverse)


def characters_from_monomials(
    ctx: SymmetricGroupContext, phi: IntegerTable
) -> IntegerTable:
    """Irreducible characters as inverse Kostka times the compound table."""
    inverse = inverse_kostka_from_monomials(ctx)
    table = matmul(inverse, phi, "characters")
    if table.values[0] != tuple([1] * ctx.k):
        raise VerificationError("top character row is not all ones")
    return table
