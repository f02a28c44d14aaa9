"""Executable cross-checks tying the major identities together.

Each check is pure and returns a CheckResult; a failed check names the
first offending cell so failures are debuggable.  The CLI `verify`
subcommand and the test suite both run these.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import factorial, prod

from .errors import InputError
from .frobenius import frobenius_character, frobenius_table, subgroup_class_count
from .partitions import (
    CycleType,
    SymmetricGroupContext,
    build_context,
    class_size,
    format_partition,
    to_cycle_type,
)
from .symfunc import (
    RawPolynomial,
    SymmetricPolynomial,
    alternant,
    expand_to_raw,
    raw_add,
    raw_mul,
    raw_scale,
    vandermonde,
)
from .tables import IntegerTable, matmul
from .triangular import TriangularSolveResult, bracket, triangular_solve

RAW_EXPANSION_CAP = 5
MONOMIAL_METHOD_CAP = 6


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        return json.dumps(
            {
                "checks": [
                    {"name": c.name, "passed": c.passed, "detail": c.detail}
                    for c in self.checks
                ]
            },
            indent=2,
        )

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            suffix = f"  ({c.detail})" if c.detail and not c.passed else ""
            lines.append(f"{status}  {c.name}{suffix}")
        return "\n".join(lines)


def verify_orthonormality(
    characters: IntegerTable, ctx: SymmetricGroupContext
) -> CheckResult:
    """Exact delta_ij inner products between all pairs of character rows."""
    name = f"orthonormality n={ctx.n}"
    for i in range(ctx.k):
        for j in range(ctx.k):
            value = bracket(characters.values[i], characters.values[j], ctx)
            expected = 1 if i == j else 0
            if value != expected:
                return CheckResult(
                    name,
                    False,
                    f"rows {format_partition(ctx.partitions[i])} and "
                    f"{format_partition(ctx.partitions[j])}: expected {expected}, "
                    f"got {value}",
                )
    return CheckResult(name, True)


def verify_frobenius_identity(
    ctx: SymmetricGroupContext,
    l: CycleType,
    phi: IntegerTable | None = None,
    characters: IntegerTable | None = None,
    cap: int = RAW_EXPANSION_CAP,
) -> CheckResult:
    """Raw-polynomial form of the compound/irreducible monomial identity for
    one class: (sum of phi * m_lambda) * Vandermonde equals the signed
    alternant combination weighted by the irreducible characters."""
    n = ctx.n
    if n > cap:
        raise InputError(f"raw-polynomial check capped at n={cap}, got n={n}")
    if phi is None:
        phi = frobenius_table(ctx)
    if characters is None:
        characters = triangular_solve(phi, ctx).characters
    col = [to_cycle_type(p) for p in ctx.partitions].index(tuple(l))
    name = f"frobenius-identity n={n} class={format_partition(ctx.partitions[col])}"

    lhs_sym = SymmetricPolynomial(
        num_vars=n,
        degree=n,
        coeffs={
            lam: phi.values[i][col]
            for i, lam in enumerate(ctx.partitions)
            if phi.values[i][col]
        },
    )
    lhs = raw_mul(expand_to_raw(lhs_sym), vandermonde(n))

    delta = tuple(range(n - 1, -1, -1))
    rhs = RawPolynomial(num_vars=n)
    for i, lam in enumerate(ctx.partitions):
        c = characters.values[i][col]
        if c == 0:
            continue
        padded = lam + (0,) * (n - len(lam))
        exps = tuple(p + d for p, d in zip(padded, delta))
        rhs = raw_add(rhs, raw_scale(c, alternant(n, exps)))

    if lhs.terms != rhs.terms:
        diff = raw_add(lhs, raw_scale(-1, rhs))
        exps = sorted(diff.terms)[0]
        return CheckResult(
            name, False, f"first differing monomial exponents {exps}"
        )
    return CheckResult(name, True)


def verify_cross_method(n: int, cap: int = MONOMIAL_METHOD_CAP) -> CheckResult:
    """Both computation routes must produce identical Kostka, inverse Kostka
    and character tables."""
    from .monomial import characters_from_monomials, inverse_kostka_from_monomials
    from .monomial import kostka_from_monomials

    if n > cap:
        raise InputError(f"monomial method capped at n={cap}, got n={n}")
    name = f"cross-method n={n}"
    ctx = build_context(n)
    phi = frobenius_table(ctx)
    tri = triangular_solve(phi, ctx)

    pairs = [
        ("kostka", tri.kostka, kostka_from_monomials(ctx)),
        ("inverse-kostka", tri.inverse_kostka, inverse_kostka_from_monomials(ctx)),
        ("characters", tri.characters, characters_from_monomials(ctx, phi)),
    ]
    for kind, a, b in pairs:
        if a.values != b.values:
            for i in range(ctx.k):
                for j in range(ctx.k):
                    if a.values[i][j] != b.values[i][j]:
                        return CheckResult(
                            name,
                            False,
                            f"{kind} at row {format_partition(ctx.partitions[i])} "
                            f"col {format_partition(ctx.partitions[j])}: "
                            f"{a.values[i][j]} vs {b.values[i][j]}",
                        )
    reconstructed = matmul(tri.inverse_kostka, phi, "characters")
    if reconstructed.values != tri.characters.values:
        return CheckResult(name, False, "inverse-kostka x frobenius != characters")
    return CheckResult(name, True)


def verify_compound_consistency(ctx: SymmetricGroupContext) -> CheckResult:
    """For every (lambda, class): phi * class size * |Young subgroup| equals
    n! times the subgroup class count, exactly."""
    name = f"compound-consistency n={ctx.n}"
    g = factorial(ctx.n)
    for lam in ctx.partitions:
        h_order = prod(factorial(p) for p in lam)
        for cls in ctx.partitions:
            l = to_cycle_type(cls)
            lhs = frobenius_character(lam, l) * class_size(l) * h_order
            rhs = g * subgroup_class_count(lam, l)
            if lhs != rhs:
                return CheckResult(
                    name,
                    False,
                    f"lambda={format_partition(lam)} class={format_partition(cls)}: "
                    f"{lhs} != {rhs}",
                )
    return CheckResult(name, True)


def run_checks(n: int, deep: bool = False) -> VerificationReport:
    """The standard battery for one n, as exposed by the CLI."""
    ctx = build_context(n)
    phi = frobenius_table(ctx)
    result: TriangularSolveResult = triangular_solve(phi, ctx)
    report = VerificationReport()
    report.checks.append(verify_orthonormality(result.characters, ctx))
    report.checks.append(verify_compound_consistency(ctx))
    if n <= MONOMIAL_METHOD_CAP:
        report.checks.append(verify_cross_method(n))
    raw_limit = RAW_EXPANSION_CAP if deep else RAW_EXPANSION_CAP - 1
    if n <= raw_limit:
        for p in ctx.partitions:
            report.checks.append(
                verify_frobenius_identity(
                    ctx, to_cycle_type(p), phi=phi, characters=result.characters
                )
            )
    report.checks.sort(key=lambda c: c.name)
    return report
