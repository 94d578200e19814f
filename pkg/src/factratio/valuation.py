"""Exact p-adic valuations of factorials and factorial ratios.

The whole module is floor-sum arithmetic on machine integers; no
factorial is ever formed here.  The classical formula

    ord_p(n!) = sum_{i>=1} floor(n / p^i)

drives everything: the order of a factorial ratio is the signed sum of
the orders of its factorial blocks (and may be negative for ratios whose
value is a non-integer rational).  A p-adic profile aggregates the order
over every prime up to the largest factorial argument; the product
``prod p^order`` then reconstructs the exact ratio value, which is the
cross-check invariant the test suite leans on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .forms import FactorialRatioSpec

# Growable prime table; rebuilt at most O(log) times per process.
_SIEVE_LIMIT = 0
_PRIMES: list[int] = []


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, from a cached sieve of Eratosthenes."""
    global _SIEVE_LIMIT, _PRIMES
    if limit > _SIEVE_LIMIT:
        new_limit = max(limit, 2 * _SIEVE_LIMIT, 1 << 10)
        sieve = bytearray([1]) * (new_limit + 1)
        sieve[:2] = b"\x00\x00"
        for p in range(2, isqrt(new_limit) + 1):
            if sieve[p]:
                sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
        _PRIMES = [i for i, flag in enumerate(sieve) if flag]
        _SIEVE_LIMIT = new_limit
    if limit >= _SIEVE_LIMIT:
        return list(_PRIMES)
    # bisect by value; the table is sorted
    lo, hi = 0, len(_PRIMES)
    while lo < hi:
        mid = (lo + hi) // 2
        if _PRIMES[mid] <= limit:
            lo = mid + 1
        else:
            hi = mid
    return _PRIMES[:lo]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in primes_up_to(isqrt(p)):
        if q * q > p:
            break
        if p % q == 0:
            return False
    return True


def legendre_ord(p: int, n: int) -> int:
    """ord_p(n!) via the floor-sum formula; rejects composite p."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    total = 0
    m = n
    while m:
        m //= p
        total += m
    return total


def binary_digit_sum(n: int) -> int:
    """Number of 1 bits in the binary expansion of n >= 0."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return n.bit_count()


def digit_sum(n: int, base: int) -> int:
    """Digit sum of n >= 0 in the given base >= 2."""
    if n < 0 or base < 2:
        raise ValueError(f"need n >= 0 and base >= 2, got n={n}, base={base}")
    total = 0
    while n:
        n, r = divmod(n, base)
        total += r
    return total


def ratio_ord(p: int, spec: FactorialRatioSpec, n: int) -> int:
    """Signed order of a factorial ratio at n; negative values allowed."""
    num, den = spec.arguments(n)
    return sum(legendre_ord(p, v) for v in num) - sum(legendre_ord(p, v) for v in den)


@dataclass(frozen=True)
class PadicProfile:
    """Per-prime orders of a factorial ratio at a fixed n.

    ``orders`` lists every prime up to the largest factorial argument,
    including zero entries; unlisted primes all have order 0.
    """

    n: int
    orders: dict[int, int]

    def value(self) -> Fraction:
        """Reconstruct the exact ratio value as ``prod p^order``."""
        out = Fraction(1)
        for p, e in self.orders.items():
            if e > 0:
                out *= p**e
            elif e < 0:
                out /= p ** (-e)
        return out

    def nonzero(self) -> dict[int, int]:
        return {p: e for p, e in self.orders.items() if e}


def padic_profile(spec: FactorialRatioSpec, n: int) -> PadicProfile:
    limit = spec.max_argument(n)
    orders = {p: ratio_ord(p, spec, n) for p in primes_up_to(limit)}
    return PadicProfile(n=n, orders=orders)
