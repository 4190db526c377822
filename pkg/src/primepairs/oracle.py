"""Ground-truth primality: sieve of Eratosthenes, prime pairs, decompositions."""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (no table needed)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class SieveOracle:
    """Primality table for 0..limit, used as ground truth by scans and tests.

    Built once by build_sieve() and then immutable; any number of readers
    may query it concurrently.
    """

    __slots__ = ("limit", "_table")

    def __init__(self, limit: int, table: bytearray) -> None:
        self.limit = limit
        self._table = table

    def is_prime(self, n: int) -> bool:
        if not 0 <= n <= self.limit:
            raise ValueError(f"{n} outside sieve range [0, {self.limit}]")
        return bool(self._table[n])

    def primes(self, limit: int | None = None) -> list[int]:
        """Ascending list of primes <= limit (default: the whole table)."""
        hi = self.limit if limit is None else limit
        if hi > self.limit:
            raise ValueError(f"limit {hi} exceeds sieve limit {self.limit}")
        table = self._table
        return [n for n in range(2, hi + 1) if table[n]]

    def count_primes(self, limit: int | None = None) -> int:
        hi = self.limit if limit is None else limit
        if hi > self.limit:
            raise ValueError(f"limit {hi} exceeds sieve limit {self.limit}")
        return sum(self._table[: hi + 1])

    def pairs(self, k: int, limit: int) -> list[int]:
        """All p <= limit with p and p+2k both prime, ascending.

        The table must cover limit + 2k so the upper member is decidable.
        """
        if k < 1:
            raise ValueError(f"pair offset k must be >= 1, got {k}")
        if limit + 2 * k > self.limit:
            raise ValueError(
                f"pairs up to {limit} with offset 2k={2 * k} need a sieve of at "
                f"least {limit + 2 * k}, have {self.limit}"
            )
        table = self._table
        gap = 2 * k
        return [p for p in range(2, limit + 1) if table[p] and table[p + gap]]

    def goldbach_decompose(self, m: int) -> tuple[int, int] | None:
        """Smallest-p1 pair of distinct odd primes with p1 + p2 = m.

        Returns None when no such decomposition exists (a legal outcome).
        """
        if m % 2 != 0:
            raise ValueError(f"can only decompose even numbers, got {m}")
        if m > self.limit:
            raise ValueError(f"{m} exceeds sieve limit {self.limit}")
        table = self._table
        for p1 in range(3, (m - 1) // 2 + 1, 2):
            if table[p1] and table[m - p1]:
                return p1, m - p1
        return None


def build_sieve(limit: int) -> SieveOracle:
    """Sieve of Eratosthenes up to limit (inclusive)."""
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    table = bytearray([1]) * (limit + 1)
    table[0] = table[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if table[i]:
            table[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return SieveOracle(limit, table)


def pnt_estimate(n: int) -> float:
    """Prime-counting estimate n / ln(n)."""
    if n < 2:
        raise ValueError(f"estimate needs n >= 2, got {n}")
    return n / math.log(n)
