"""Exact and log-space counting primitives plus colex subset ordering.

Everything downstream (verification, constructions, bound formulas) goes
through this module, so the conventions here are global: vertices are
0-based contiguous integers, subsets are strictly increasing tuples, and
colexicographic order is the single canonical order for ranking,
enumeration and serialization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator

# Formulas are evaluated with exact integers as long as every intermediate
# binomial coefficient has ambient size at most this; beyond it they switch
# to natural-log floats.
EXACT_N_BUDGET = 512


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial arguments must be nonnegative, got ({n}, {k})")
    if k > n:
        return 0
    return math.comb(n, k)


def log_binomial(n: int, k: int) -> float:
    """ln C(n, k), exact-path log for small n, lgamma summation for huge n."""
    if n < 0 or k < 0:
        raise ValueError(f"log_binomial arguments must be nonnegative, got ({n}, {k})")
    if k > n:
        raise ValueError(f"log_binomial requires k <= n, got ({n}, {k})")
    if k == 0 or k == n:
        return 0.0
    if n <= 4096:
        # math.log accepts arbitrarily large ints, so this path is exact
        # up to one floating rounding.
        return math.log(math.comb(n, k))
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


@total_ordering
@dataclass(frozen=True)
class LogValue:
    """A nonnegative real carried on natural-log scale.

    Used for quantities like C(s,R)^2 * C(N-s,R) whose magnitudes dwarf
    floating range at the full construction-scale parameters.
    """

    log_magnitude: float
    is_zero: bool = False

    @staticmethod
    def zero() -> "LogValue":
        return LogValue(float("-inf"), True)

    @staticmethod
    def one() -> "LogValue":
        return LogValue(0.0)

    @staticmethod
    def from_log(x: float) -> "LogValue":
        return LogValue(x)

    @staticmethod
    def from_int(value: int) -> "LogValue":
        if value < 0:
            raise ValueError("LogValue represents nonnegative reals only")
        if value == 0:
            return LogValue.zero()
        return LogValue(float(math.log(value)))

    @staticmethod
    def from_float(value: float) -> "LogValue":
        if value < 0:
            raise ValueError("LogValue represents nonnegative reals only")
        if value == 0:
            return LogValue.zero()
        return LogValue(math.log(value))

    def __mul__(self, other: "LogValue") -> "LogValue":
        if self.is_zero or other.is_zero:
            return LogValue.zero()
        return LogValue(self.log_magnitude + other.log_magnitude)

    def __truediv__(self, other: "LogValue") -> "LogValue":
        if other.is_zero:
            raise ZeroDivisionError("division by LogValue zero")
        if self.is_zero:
            return LogValue.zero()
        return LogValue(self.log_magnitude - other.log_magnitude)

    def __pow__(self, exponent: float) -> "LogValue":
        if self.is_zero:
            if exponent <= 0:
                raise ZeroDivisionError("0 ** nonpositive exponent")
            return LogValue.zero()
        return LogValue(self.log_magnitude * exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LogValue):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.log_magnitude == other.log_magnitude

    def __lt__(self, other: "LogValue") -> bool:
        if self.is_zero:
            return not other.is_zero
        if other.is_zero:
            return False
        return self.log_magnitude < other.log_magnitude

    def __hash__(self) -> int:
        return hash((self.is_zero, None if self.is_zero else self.log_magnitude))

    def to_float(self) -> float:
        """Plain float value; inf when out of floating range."""
        if self.is_zero:
            return 0.0
        return math.exp(self.log_magnitude) if self.log_magnitude < 709 else float("inf")


def check_subset(elements: tuple[int, ...], n: int, k: int | None = None) -> None:
    """Validate a strictly increasing 0-based k-subset of [n]."""
    if k is not None and len(elements) != k:
        raise ValueError(f"expected a {k}-subset, got {elements}")
    prev = -1
    for v in elements:
        if v <= prev:
            raise ValueError(f"subset must be strictly increasing, got {elements}")
        prev = v
    if elements and (elements[0] < 0 or elements[-1] >= n):
        raise ValueError(f"subset {elements} not within ground set of size {n}")


def rank_colex(elements: tuple[int, ...]) -> int:
    """Colex rank of a strictly increasing subset: sum of C(e_i, i+1)."""
    rank = 0
    for i, v in enumerate(elements):
        rank += binomial(v, i + 1)
    return rank


def unrank_colex(index: int, k: int, n: int) -> tuple[int, ...]:
    """Inverse of rank_colex on [0, C(n,k))."""
    if index < 0 or index >= binomial(n, k):
        raise ValueError(f"rank {index} out of range for C({n},{k})")
    result: list[int] = []
    remaining = index
    for i in range(k, 0, -1):
        # Largest v with C(v, i) <= remaining.
        v = i - 1
        c = 0  # C(v, i) at v = i-1
        while True:
            nxt = binomial(v + 1, i)
            if nxt > remaining:
                break
            v += 1
            c = nxt
        result.append(v)
        remaining -= c
    result.reverse()
    return tuple(result)


def enumerate_subsets(
    n: int, k: int, start: int = 0, stop: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield k-subsets of [n] in colex order, optionally a rank slice.

    The slice form lets callers split the full range [0, C(n,k)) into
    contiguous chunks for parallel consumption.
    """
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    total = binomial(n, k)
    if stop is None:
        stop = total
    if start < 0 or stop > total or start > stop:
        raise ValueError(f"bad rank slice [{start}, {stop}) for C({n},{k})={total}")
    if start == stop:
        return
    current = list(unrank_colex(start, k, n))
    for _ in range(stop - start):
        yield tuple(current)
        # Colex successor: bump the first position that has headroom.
        for i in range(k):
            limit = current[i + 1] if i + 1 < k else n
            if current[i] + 1 < limit:
                current[i] += 1
                for j in range(i):
                    current[j] = j
                break
