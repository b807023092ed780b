"""Numerical-semigroup utilities for the non-vanishing bookkeeping.

Positive multiples with sections are closed under addition (the
superadditivity h^0(D_1 + D_2) >= h^0(D_1) + h^0(D_2) - 1 for effective
divisors), so "which multiples are known to have sections" is a
numerical-semigroup question.  This module provides the additive closure
up to a cutoff, the coprime-pair coin solver with its classical
(p-1)(q-1) threshold, the guaranteed all-members-beyond threshold of a
generating set, and the empirical minimum over a list of polarized
entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable

from .errors import AbstainError, InputError
from .hrr import h0_certified
from .variety import DivisorClass, VarietyData


@dataclass(frozen=True)
class SemigroupSet:
    """A finite, additively closed set of positive integers up to a bound."""

    members: tuple[int, ...]
    bound: int

    def __contains__(self, value: int) -> bool:
        return value in set(self.members)

    def min(self) -> int:
        return self.members[0]


def coin_solve(p: int, q: int, l: int) -> tuple[int, int]:
    """Non-negative (i, j) with p*i + q*j = l, choosing minimal i.

    Requires gcd(p, q) = 1 and l >= (p-1)(q-1); below that threshold
    existence is not guaranteed and the call is rejected.
    """
    if p <= 0 or q <= 0:
        raise InputError("p and q must be positive")
    if gcd(p, q) != 1:
        raise InputError(f"p = {p} and q = {q} are not coprime")
    threshold = (p - 1) * (q - 1)
    if l < threshold:
        raise InputError(f"l = {l} is below the threshold (p-1)(q-1) = {threshold}")
    i = 0
    while p * i <= l:
        remainder = l - p * i
        if remainder % q == 0:
            return (i, remainder // q)
        i += 1
    raise AssertionError("unreachable: representation guaranteed above the threshold")


def closure(generators: Iterable[int], bound: int) -> SemigroupSet:
    """Smallest additively closed superset of the generators within [1, bound]."""
    gens = sorted(set(generators))
    if not gens:
        raise InputError("generator set must be nonempty")
    if gens[0] <= 0:
        raise InputError("generators must be positive")
    if bound < 1:
        raise InputError("bound must be at least 1")
    reachable = [False] * (bound + 1)
    for g in gens:
        if g <= bound:
            reachable[g] = True
    for value in range(1, bound + 1):
        if not reachable[value]:
            continue
        for g in gens:
            if value + g <= bound:
                reachable[value + g] = True
    members = tuple(v for v in range(1, bound + 1) if reachable[v])
    return SemigroupSet(members=members, bound=bound)


def guaranteed_threshold(generators: Iterable[int]) -> int | None:
    """Least r such that every m >= r lies in the additive closure.

    Derived from the best coprime pair in the set: beyond (p-1)(q-1) the
    pair alone covers everything, and enumeration below refines the
    start.  Returns None when the set contains no coprime pair (then no
    such r is certified by this method).
    """
    gens = sorted(set(generators))
    if not gens:
        raise InputError("generator set must be nonempty")
    if gens[0] <= 0:
        raise InputError("generators must be positive")
    best = None
    for idx, p in enumerate(gens):
        for q in gens[idx:]:
            if gcd(p, q) == 1:
                frontier = (p - 1) * (q - 1)
                if best is None or frontier < best:
                    best = frontier
    if best is None:
        return None
    start = max(best, 1)
    bound = start + max(gens)
    members = set(closure(gens, bound).members)
    # Everything in [start, bound] is covered by the coprime pair; walk the
    # run of consecutive members downward to the true threshold.
    if any(v not in members for v in range(start, bound + 1)):
        raise AssertionError("closure disagrees with the coin threshold")
    r = start
    while r - 1 >= 1 and (r - 1) in members:
        r -= 1
    return r


def empirical_min_r(
    entries: list[tuple[VarietyData, DivisorClass]],
    r_max: int,
    h0: Callable[[VarietyData, DivisorClass], int] | None = None,
) -> int | None:
    """Least r <= r_max with h^0(r(K+L)) > 0 for every entry; None if absent.

    Counts come from the certified route unless an explicit ``h0``
    callable is supplied (used for synthetic oracles in tests).  An entry
    whose count cannot be certified raises an abstention.
    """
    if not entries:
        raise InputError("entry list must be nonempty")
    for v, ell in entries:
        if not v.is_nef(v.canonical + ell):
            raise InputError(f"K + L not nef on {v.name} for L = {v.divisor_string(ell)}")

    def count(v: VarietyData, d: DivisorClass) -> int:
        if h0 is not None:
            return h0(v, d)
        try:
            value, _ = h0_certified(v, d)
        except AbstainError as exc:
            raise AbstainError(f"{v.name}: {exc}") from exc
        return value

    for r in range(1, r_max + 1):
        if all(count(v, r * (v.canonical + ell)) > 0 for v, ell in entries):
            return r
    return None
