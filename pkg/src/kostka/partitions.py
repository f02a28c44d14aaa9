"""Integer partitions, cycle types, and conjugacy-class data for S_n.

A partition is a plain tuple of weakly decreasing positive integers.  The
same tuple labels both a conjugacy class (cycle structure) and a character
of S_n.  A cycle type is the multiplicity form: a tuple of length n whose
entry at index j-1 counts the j-cycles.

The canonical total order on partitions of n is descending lexicographic
order on part lists, which for tuples is just the reversed builtin order:
(n) is the maximum and (1^n) is the minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

from .errors import InputError

Partition = tuple[int, ...]
CycleType = tuple[int, ...]

#: S_12 already has 77 classes and is impractical for the monomial method;
#: larger n must be requested explicitly (KOSTKA_MAX_N or the cap argument).
DEFAULT_MAX_N = 12


def iter_partitions(n: int, max_part: int | None = None):
    """Yield all partitions of n in descending lexicographic order.

    No size cap is applied here; callers wanting validation use
    partitions_of.  n = 0 yields the empty partition.
    """
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in iter_partitions(n - first, first):
            yield (first,) + rest


def partitions_of(n: int, cap: int | None = DEFAULT_MAX_N) -> list[Partition]:
    """All partitions of n, descending lexicographic, (n) first, (1^n) last."""
    if n < 1:
        raise InputError(f"n must be a positive integer, got {n}")
    if cap is not None and n > cap:
        raise InputError(f"n={n} exceeds the size cap {cap}")
    return list(iter_partitions(n))


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def compare(a: Partition, b: Partition) -> int:
    """Canonical order: -1, 0 or 1 as a <, =, > b.  Weights must agree."""
    if sum(a) != sum(b):
        raise InputError(f"cannot compare partitions of different weights: {a} vs {b}")
    return (a > b) - (a < b)


def to_cycle_type(parts: Partition) -> CycleType:
    """Multiplicity form of a partition: entry j-1 counts the parts equal to j."""
    if not is_partition(parts):
        raise InputError(f"not a valid partition: {parts}")
    n = sum(parts)
    mult = [0] * n
    for p in parts:
        mult[p - 1] += 1
    return tuple(mult)


def from_cycle_type(mult: CycleType) -> Partition:
    """Partition whose parts are the cycle lengths j repeated mult[j-1] times."""
    parts = []
    for j in range(len(mult), 0, -1):
        parts.extend([j] * mult[j - 1])
    return tuple(parts)


def cycle_type_weight(mult: CycleType) -> int:
    return sum(j * m for j, m in enumerate(mult, start=1))


def class_size(mult: CycleType) -> int:
    """Number of permutations of S_n with the given cycle type (n = weight)."""
    n = cycle_type_weight(mult)
    denom = prod(
        j**m * factorial(m) for j, m in enumerate(mult, start=1) if m
    )
    return factorial(n) // denom


@dataclass(frozen=True)
class SymmetricGroupContext:
    """Immutable per-n bundle: canonical partition order and class sizes."""

    n: int
    k: int
    partitions: tuple[Partition, ...]
    class_sizes: tuple[int, ...]
    group_order: int

    def index(self, parts: Partition) -> int:
        """Canonical index of a partition (0 is (n), k-1 is (1^n))."""
        return self.partitions.index(tuple(parts))


def build_context(n: int, cap: int | None = DEFAULT_MAX_N) -> SymmetricGroupContext:
    parts = tuple(partitions_of(n, cap))
    sizes = tuple(class_size(to_cycle_type(p)) for p in parts)
    return SymmetricGroupContext(
        n=n,
        k=len(parts),
        partitions=parts,
        class_sizes=sizes,
        group_order=factorial(n),
    )


def format_partition(parts: Partition) -> str:
    """Text form used in CLI arguments and CSV labels, e.g. "3+1+1"."""
    return "+".join(str(p) for p in parts)


def parse_partition(text: str) -> Partition:
    try:
        parts = tuple(int(piece) for piece in text.split("+"))
    except ValueError:
        raise InputError(f"cannot parse partition {text!r}") from None
    if not is_partition(parts):
        raise InputError(f"not a valid partition: {text!r}")
    return parts
