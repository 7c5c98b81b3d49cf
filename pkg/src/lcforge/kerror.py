"""Exact k-error linear complexity by exhaustive pattern search.

The k-error linear complexity of s is the smallest complexity reachable
by flipping at most k positions within one period; flips repeat in every
period.  The search is exact: it enumerates candidate flip patterns in
(weight, lexicographic-positions) order and keeps the first pattern that
achieves the minimum, so the reported witness is canonical.

One pruning rule keeps the enumeration honest but much smaller: a period
of odd weight has full complexity 2^n, so flip patterns that change the
weight parity of s can never beat patterns that keep it even (or the
unflipped s itself when s already sits at 2^n).  Only pattern weights
matching the weight parity of s are enumerated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import core
from .core import PeriodicSequence
from .errors import (
    InvalidParams,
    InvalidSupport,
    NotFoundWithinCap,
    SearchTooLarge,
    UndefinedForZeroSequence,
)

# Hard ceiling on how many flip patterns one call may enumerate.
SEARCH_BUDGET = 10**8

# Pattern mask lists are memoised only below this size.
_CACHE_LIMIT = 100_000


@dataclass(frozen=True)
class ErrorPattern:
    """Positions to flip within one period, strictly increasing."""

    positions: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))
        if any(p < 0 for p in self.positions):
            raise InvalidSupport("positions must be non-negative")
        if any(b <= a for a, b in zip(self.positions, self.positions[1:])):
            raise InvalidSupport("positions must be strictly increasing")

    @property
    def weight(self) -> int:
        return len(self.positions)

    def as_mask(self) -> int:
        """The pattern as a packed period value (bit i = flip position i)."""
        mask = 0
        for p in self.positions:
            mask |= 1 << p
        return mask

    def as_sequence(self, exponent: int) -> PeriodicSequence:
        """The pattern as the sequence that is 1 exactly at the flip positions."""
        period = 1 << exponent
        if self.positions and self.positions[-1] >= period:
            raise InvalidSupport(
                f"position {self.positions[-1]} outside period {period}"
            )
        return PeriodicSequence(exponent, self.as_mask())


@dataclass(frozen=True)
class KErrorResult:
    """Outcome of a k-error search: the minimum and its first witness."""

    k: int
    value: int
    witness: ErrorPattern


@lru_cache(maxsize=None)
def _cached_masks(period: int, weight: int) -> tuple[int, ...]:
    return tuple(_generate_masks(period, weight))


def _generate_masks(period, weight):
    for combo in itertools.combinations(range(period), weight):
        mask = 0
        for p in combo:
            mask |= 1 << p
        yield mask


def _iter_masks(period, weight):
    """Flip masks of the given weight in lexicographic position order."""
    if comb(period, weight) <= _CACHE_LIMIT:
        return _cached_masks(period, weight)
    return _generate_masks(period, weight)


def _mask_positions(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _search_weights(s: PeriodicSequence, k: int) -> list[int]:
    """Pattern weights worth enumerating, with the budget check applied."""
    period = 1 << s.exponent
    if not 0 <= k <= period:
        raise InvalidParams(f"k must be in [0, {period}], got {k}")
    parity = s.value.bit_count() & 1
    weights = [w for w in range(1, k + 1) if (w & 1) == parity]
    estimated = sum(comb(period, w) for w in weights)
    if estimated > SEARCH_BUDGET:
        raise SearchTooLarge(estimated, SEARCH_BUDGET)
    return weights


def k_error_lc(s: PeriodicSequence, k: int) -> KErrorResult:
    """Exact k-error linear complexity of s with a canonical witness.

    Returns the smallest complexity over all patterns of at most k flips,
    together with the first achieving pattern in (weight, lexicographic
    positions) order; zero flips count, so the witness for an already
    minimal s is the empty pattern.

    Raises SearchTooLarge if the enumeration would exceed SEARCH_BUDGET
    patterns (counted after parity pruning).
    """
    weights = _search_weights(s, k)
    best = core._lc_value(s.value, s.exponent)
    best_mask = 0
    if best > 0:
        period = 1 << s.exponent
        value = s.value
        if s.exponent <= core.TABLE_MAX_EXPONENT:
            table = core.lc_table(s.exponent)
            for w in weights:
                for mask in _iter_masks(period, w):
                    lc = table[value ^ mask]
                    if lc < best:
                        best = lc
                        best_mask = mask
                        if lc == 0:
                            return _result(k, best, best_mask)
        else:
            exponent = s.exponent
            for w in weights:
                for mask in _iter_masks(period, w):
                    lc = core._lc_value(value ^ mask, exponent)
                    if lc < best:
                        best = lc
                        best_mask = mask
                        if lc == 0:
                            return _result(k, best, best_mask)
    return _result(k, best, best_mask)


def _result(k: int, value: int, mask: int) -> KErrorResult:
    return KErrorResult(k, value, ErrorPattern(_mask_positions(mask)))


def k_error_profile(s: PeriodicSequence, k_max: int) -> list[tuple[int, int]]:
    """The non-increasing profile [(k, k-error complexity)] for k = 0..k_max."""
    profile: list[tuple[int, int]] = []
    value = None
    for k in range(k_max + 1):
        if value != 0:
            value = k_error_lc(s, k).value
        profile.append((k, value))
    return profile


def k_min_formula(s: PeriodicSequence) -> int:
    """Fewest flips that strictly lower the complexity, in closed form.

    Kurosawa et al.: the minimum is 2 raised to the number of ones in the
    binary expansion of 2^n - L(s).  Undefined for the all-zero sequence,
    whose complexity 0 cannot drop.
    """
    if s.value == 0:
        raise UndefinedForZeroSequence("complexity 0 cannot decrease")
    gap = (1 << s.exponent) - core._lc_value(s.value, s.exponent)
    return 1 << gap.bit_count()


def k_min_search(s: PeriodicSequence, k_cap: int) -> int:
    """Brute-force companion of k_min_formula: try k = 1, 2, ... up to k_cap."""
    if s.value == 0:
        raise UndefinedForZeroSequence("complexity 0 cannot decrease")
    base = core._lc_value(s.value, s.exponent)
    for k in range(1, k_cap + 1):
        if k_error_lc(s, k).value < base:
            return k
    raise NotFoundWithinCap(f"no pattern of weight <= {k_cap} lowers {base}")
