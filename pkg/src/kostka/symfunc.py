"""Exact sparse polynomial arithmetic in n variables.

Two layers:

* RawPolynomial -- arbitrary integer polynomials keyed by exponent vectors,
  used for Vandermonde products, alternants and brute-force checks.
* SymmetricPolynomial -- homogeneous symmetric polynomials stored compactly
  on the monomial-symmetric basis: one integer coefficient per partition,
  where the partition stands for the sum of all distinct permutations of
  the corresponding monomial.

All coefficients are exact Python ints; zero coefficients are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import comb, factorial, prod

from .errors import InputError
from .partitions import Partition, iter_partitions


@dataclass
class RawPolynomial:
    num_vars: int
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def is_zero(self) -> bool:
        return not self.terms


@dataclass
class SymmetricPolynomial:
    num_vars: int
    degree: int
    coeffs: dict[Partition, int] = field(default_factory=dict)

    def is_zero(self) -> bool:
        return not self.coeffs


def sym_zero(n: int, degree: int = 0) -> SymmetricPolynomial:
    return SymmetricPolynomial(num_vars=n, degree=degree)


def distinct_permutations(values):
    """Yield every distinct ordering of values exactly once (lexicographic).

    Multiset-aware: repeated values never produce duplicate orderings, so
    orbit term counts are exact.
    """
    a = sorted(values)
    n = len(a)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1 :] = reversed(a[i + 1 :])


def orbit_size(lam: Partition, n: int) -> int:
    """Number of distinct permutations of lam padded with zeros to length n."""
    padded = list(lam) + [0] * (n - len(lam))
    counts = {}
    for e in padded:
        counts[e] = counts.get(e, 0) + 1
    return factorial(n) // prod(factorial(c) for c in counts.values())


def _as_partition(exponents) -> Partition:
    """Sort an exponent vector descending and trim trailing zeros."""
    key = sorted(exponents, reverse=True)
    while key and key[-1] == 0:
        key.pop()
    return tuple(key)


def monomial_symmetric(n: int, lam: Partition) -> SymmetricPolynomial:
    """The basis element m_lam in n variables; zero if lam has > n parts."""
    if n < 1:
        raise InputError(f"need at least one variable, got {n}")
    lam = tuple(lam)
    if len(lam) > n:
        return sym_zero(n, sum(lam))
    return SymmetricPolynomial(num_vars=n, degree=sum(lam), coeffs={lam: 1})


def complete_homogeneous(n: int, p: int) -> SymmetricPolynomial:
    """Sum of every degree-p monomial in n variables.

    Conventions: identically zero for p < 0 and the constant 1 for p = 0.
    """
    if n < 1:
        raise InputError(f"need at least one variable, got {n}")
    if p < 0:
        return sym_zero(n)
    if p == 0:
        return SymmetricPolynomial(num_vars=n, degree=0, coeffs={(): 1})
    coeffs = {lam: 1 for lam in iter_partitions(p) if len(lam) <= n}
    return SymmetricPolynomial(num_vars=n, degree=p, coeffs=coeffs)


def sym_add(a: SymmetricPolynomial, b: SymmetricPolynomial) -> SymmetricPolynomial:
    if a.num_vars != b.num_vars:
        raise InputError("operands have different variable counts")
    if a.is_zero():
        return SymmetricPolynomial(b.num_vars, b.degree, dict(b.coeffs))
    if b.is_zero():
        return SymmetricPolynomial(a.num_vars, a.degree, dict(a.coeffs))
    if a.degree != b.degree:
        raise InputError(
            f"cannot add homogeneous polynomials of degrees {a.degree} and {b.degree}"
        )
    coeffs = dict(a.coeffs)
    for key, c in b.coeffs.items():
        total = coeffs.get(key, 0) + c
        if total:
            coeffs[key] = total
        else:
            coeffs.pop(key, None)
    return SymmetricPolynomial(a.num_vars, a.degree, coeffs)


def sym_scale(c: int, a: SymmetricPolynomial) -> SymmetricPolynomial:
    if c == 0:
        return sym_zero(a.num_vars, a.degree)
    return SymmetricPolynomial(
        a.num_vars, a.degree, {key: c * v for key, v in a.coeffs.items()}
    )


def expand_to_raw(a: SymmetricPolynomial) -> RawPolynomial:
    """Replace each basis key by its full orbit of distinct monomials."""
    n = a.num_vars
    terms: dict[tuple[int, ...], int] = {}
    for lam, c in a.coeffs.items():
        padded = tuple(lam) + (0,) * (n - len(lam))
        for exps in distinct_permutations(padded):
            terms[exps] = terms.get(exps, 0) + c
    return RawPolynomial(num_vars=n, terms={e: c for e, c in terms.items() if c})


def raw_mul(a: RawPolynomial, b: RawPolynomial) -> RawPolynomial:
    if a.num_vars != b.num_vars:
        raise InputError("operands have different variable counts")
    terms: dict[tuple[int, ...], int] = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            total = terms.get(key, 0) + ca * cb
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
    return RawPolynomial(num_vars=a.num_vars, terms=terms)


def raw_add(a: RawPolynomial, b: RawPolynomial) -> RawPolynomial:
    if a.num_vars != b.num_vars:
        raise InputError("operands have different variable counts")
    terms = dict(a.terms)
    for e, c in b.terms.items():
        total = terms.get(e, 0) + c
        if total:
            terms[e] = total
        else:
            terms.pop(e, None)
    return RawPolynomial(num_vars=a.num_vars, terms=terms)


def raw_scale(c: int, a: RawPolynomial) -> RawPolynomial:
    if c == 0:
        return RawPolynomial(num_vars=a.num_vars)
    return RawPolynomial(a.num_vars, {e: c * v for e, v in a.terms.items()})


def sym_mul(a: SymmetricPolynomial, b: SymmetricPolynomial) -> SymmetricPolynomial:
    """Exact product of two symmetric polynomials.

    The factor with the smaller raw orbit is expanded to raw form; the
    product's coefficient at each target partition is then read off by
    convolving against the other factor's basis keys.  This is valid
    because the product is symmetric, so its coefficient on m_lam equals
    the raw coefficient of any single monomial in lam's orbit.
    """
    if a.num_vars != b.num_vars:
        raise InputError("operands have different variable counts")
    n = a.num_vars
    degree = a.degree + b.degree
    if a.is_zero() or b.is_zero():
        return sym_zero(n, degree)

    size_a = sum(orbit_size(lam, n) for lam in a.coeffs)
    size_b = sum(orbit_size(lam, n) for lam in b.coeffs)
    small, big = (a, b) if size_a <= size_b else (b, a)
    raw_small = expand_to_raw(small)

    coeffs: dict[Partition, int] = {}
    for lam in iter_partitions(degree):
        if len(lam) > n:
            continue
        target = tuple(lam) + (0,) * (n - len(lam))
        total = 0
        for exps, c in raw_small.terms.items():
            rest = tuple(t - e for t, e in zip(target, exps))
            if min(rest) < 0:
                continue
            total += c * big.coeffs.get(_as_partition(rest), 0)
        if total:
            coeffs[lam] = total
    return SymmetricPolynomial(num_vars=n, degree=degree, coeffs=coeffs)


def vandermonde(n: int) -> RawPolynomial:
    """The expanded product over i < j of (x_i - x_j); constant 1 for n = 1."""
    if n < 1:
        raise InputError(f"need at least one variable, got {n}")
    zero = (0,) * n
    result = RawPolynomial(num_vars=n, terms={zero: 1})
    for i in range(n):
        for j in range(i + 1, n):
            ei = tuple(1 if t == i else 0 for t in range(n))
            ej = tuple(1 if t == j else 0 for t in range(n))
            factor = RawPolynomial(num_vars=n, terms={ei: 1, ej: -1})
            result = raw_mul(result, factor)
    return result


def _parity_sign(perm) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def alternant(n: int, exponents) -> RawPolynomial:
    """Signed sum over all n! permutations of the exponent vector.

    Antisymmetric by construction: repeated exponents cancel to zero.
    """
    exponents = tuple(exponents)
    if len(exponents) != n:
        raise InputError(f"expected {n} exponents, got {len(exponents)}")
    if any(e < 0 for e in exponents):
        raise InputError("exponents must be nonnegative")
    terms: dict[tuple[int, ...], int] = {}
    for perm in permutations(range(n)):
        sign = _parity_sign(perm)
        key = tuple(exponents[p] for p in perm)
        total = terms.get(key, 0) + sign
        if total:
            terms[key] = total
        else:
            terms.pop(key, None)
    return RawPolynomial(num_vars=n, terms=terms)


def monomial_count(n: int, r: int) -> int:
    """Number of distinct degree-r monomials in n variables."""
    if n < 1 or r < 0:
        raise InputError(f"need n >= 1 and r >= 0, got n={n}, r={r}")
    return comb(n + r - 1, r)


def _format_monomial(exps) -> str:
    pieces = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            pieces.append(f"x{i}")
        elif e > 1:
            pieces.append(f"x{i}^{e}")
    return "*".join(pieces) if pieces else "1"


def format_raw(a: RawPolynomial) -> str:
    """Debug form: terms sorted by descending exponent vector."""
    if a.is_zero():
        return "0"
    pieces = []
    for exps in sorted(a.terms, reverse=True):
        c = a.terms[exps]
        mono = _format_monomial(exps)
        if mono == "1":
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


def raw_to_json(a: RawPolynomial) -> list[dict]:
    """JSON form: exponent vectors with decimal-string coefficients."""
    return [
        {"exponents": list(exps), "coeff": str(a.terms[exps])}
        for exps in sorted(a.terms, reverse=True)
    ]


def sym_to_json(a: SymmetricPolynomial) -> list[dict]:
    n = a.num_vars
    return [
        {"exponents": list(lam) + [0] * (n - len(lam)), "coeff": str(a.coeffs[lam])}
        for lam in sorted(a.coeffs, reverse=True)
    ]
