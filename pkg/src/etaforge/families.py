"""Exhaustive, duplicate-free enumeration of partition families.

Families are enumerated in a deterministic order (weight, then parts,
lexicographically) so that CLI output and reports are reproducible byte for
byte.  Core membership uses the boundary-word characterization (every
descent of the profile must recur t steps below), which is cross-checked
against the hook-based definition in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition

FAMILY_NAMES = (
    "ALL",
    "SC",
    "DD",
    "DISTINCT",
    "T_CORE",
    "SC_T_CORE",
    "DD_T_CORE",
    "SC_x_DD_PAIRS",
)

_FAMILIES_NEEDING_T = {"T_CORE", "SC_T_CORE", "DD_T_CORE"}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    max_weight: int
    t: int | None = None

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILY_NAMES}")
        if self.max_weight < 0:
            raise ValueError("max_weight must be >= 0")
        if self.family in _FAMILIES_NEEDING_T and self.t is None:
            raise ValueError(f"family {self.family} needs a modulus t")


def partitions_of(n: int, largest: int | None = None):
    """All partitions of n as non-increasing tuples, lexicographically descending."""
    if n == 0:
        yield ()
        return
    if largest is None:
        largest = n
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def distinct_partitions_of(n: int, largest: int | None = None):
    if n == 0:
        yield ()
        return
    if largest is None:
        largest = n
    for first in range(min(n, largest), 0, -1):
        for rest in distinct_partitions_of(n - first, first - 1):
            yield (first,) + rest


def _distinct_odd_sets(n: int, largest: int | None = None):
    """Sets of distinct odd integers summing to n, as descending tuples."""
    if n == 0:
        yield ()
        return
    if largest is None:
        largest = n
    top = min(n, largest)
    if top % 2 == 0:
        top -= 1
    for first in range(top, 0, -2):
        for rest in _distinct_odd_sets(n - first, first - 2):
            yield (first,) + rest


def is_t_core_fast(parts: tuple[int, ...], t: int) -> bool:
    """Word-model core test: every boundary zero re-occurs t steps lower."""
    ell = len(parts)
    betas = {parts[i] - (i + 1) for i in range(ell)}
    # every position <= -ell - 1 is a zero of the boundary word
    return all(b - t in betas or b - t <= -ell - 1 for b in betas)


@lru_cache(maxsize=None)
def _all_partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in sorted(partitions_of(n)))


def enumerate_family(spec: FamilySpec) -> list:
    """Members of the family with weight at most max_weight, sorted."""
    family, w, t = spec.family, spec.max_weight, spec.t
    if family == "ALL":
        return [lam for n in range(w + 1) for lam in _all_partitions_cached(n)]
    if family == "DISTINCT":
        return [
            Partition(p)
            for n in range(w + 1)
            for p in sorted(distinct_partitions_of(n))
        ]
    if family == "SC":
        out = []
        for n in range(w + 1):
            row = [Partition.sc_from_principal_hooks(d) for d in _distinct_odd_sets(n)]
            out.extend(sorted(row, key=lambda p: p.parts))
        return out
    if family == "DD":
        out = []
        for n in range(0, w + 1, 2):
            row = [
                Partition.dd_from_principal_hooks(tuple(2 * x for x in d))
                for d in distinct_partitions_of(n // 2)
            ]
            for lam in row:
                if lam.weight % 2:
                    raise AssertionError("doubled-distinct weights must be even")
            out.extend(sorted(row, key=lambda p: p.parts))
        return out
    if family == "T_CORE":
        return [
            lam
            for n in range(w + 1)
            for lam in _all_partitions_cached(n)
            if is_t_core_fast(lam.parts, t)
        ]
    if family == "SC_T_CORE":
        return [
            lam
            for lam in enumerate_family(FamilySpec("SC", w))
            if is_t_core_fast(lam.parts, t)
        ]
    if family == "DD_T_CORE":
        return [
            lam
            for lam in enumerate_family(FamilySpec("DD", w))
            if is_t_core_fast(lam.parts, t)
        ]
    if family == "SC_x_DD_PAIRS":
        if t is None:
            sc = enumerate_family(FamilySpec("SC", w))
            dd = enumerate_family(FamilySpec("DD", w))
        else:
            sc = enumerate_family(FamilySpec("SC_T_CORE", w, t))
            dd = enumerate_family(FamilySpec("DD_T_CORE", w, t))
        return [
            (lam, mu)
            for lam in sc
            for mu in dd
            if lam.weight + mu.weight <= w
        ]
    raise AssertionError(f"unhandled family {family}")


def dd_core_count(t: int, m: int) -> int:
    """Number of doubled-distinct t-cores of weight exactly m."""
    if m < 0:
        raise ValueError("weight must be >= 0")
    return sum(
        1
        for lam in enumerate_family(FamilySpec("DD_T_CORE", m, t))
        if lam.weight == m
    )
