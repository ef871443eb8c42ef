"""Exact integer arithmetic: primality, factorization, divisors, primitive roots.

Everything here works on plain Python ints, so there is no upper bound on
the size of a modulus.  Primality is decided exactly; there is no
probabilistic accept anywhere in this module.
"""

from __future__ import annotations

import bisect
import heapq
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterable, Iterator

TRIAL_DIVISION_LIMIT = 10**6

# Deterministic Miller-Rabin: the first 13 primes as bases are exact for all
# n below this bound (Sorenson & Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXACT_BOUND = 3317044064679887385961981

_SMALL_LIMIT = 1000


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES = _sieve(_SMALL_LIMIT)
_SMALL_PRIME_SET = frozenset(_SMALL_PRIMES)


@lru_cache(maxsize=1)
def _trial_primes() -> list[int]:
    return _sieve(TRIAL_DIVISION_LIMIT)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer.

    ``factors`` holds ``(prime, exponent)`` pairs with strictly increasing
    primes.  The empty tuple stands for 1.

    >>> Factorization.of(338)
    Factorization(factors=((2, 1), (13, 2)))
    >>> Factorization.of(338).value
    338
    """

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization {self.factors!r}")
            last = p

    @classmethod
    def of(cls, n: int) -> "Factorization":
        return factorize(n)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], check: bool = True) -> "Factorization":
        """Build from arbitrary (prime, exponent) pairs, merging repeats."""
        merged: dict[int, int] = {}
        for p, e in pairs:
            p, e = int(p), int(e)
            if e < 0:
                raise ValueError(f"negative exponent for {p}")
            if e == 0:
                continue
            if check and not is_prime(p):
                raise ValueError(f"{p} is not prime")
            merged[p] = merged.get(p, 0) + e
        return cls(tuple(sorted(merged.items())))

    @property
    def value(self) -> int:
        n = 1
        for p, e in self.factors:
            n *= p**e
        return n

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __mul__(self, other: "Factorization") -> "Factorization":
        return Factorization.from_pairs(self.factors + other.factors, check=False)

    def to_json(self) -> list[list[int]]:
        return [[p, e] for p, e in self.factors]

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def _miller_rabin(n: int, bases: Iterable[int]) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _lucas_proof(n: int) -> bool:
    # n passed strong-probable-prime tests beyond the exact MR range; prove it
    # by finding an element of order n - 1.  The prime factors of n - 1 are
    # themselves proven through is_prime, recursively.
    qs = factorize(n - 1).primes
    for g in range(2, n):
        if pow(g, n - 1, n) != 1:
            return False
        if all(pow(g, (n - 1) // q, n) != 1 for q in qs):
            return True
    return False


def is_prime(n: int) -> bool:
    """Exact primality test.

    >>> [is_prime(n) for n in (0, 1, 2, 268, 269)]
    [False, False, True, False, True]
    """
    if n < 2:
        return False
    if n <= _SMALL_LIMIT:
        return n in _SMALL_PRIME_SET
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return False
    if n < _SMALL_LIMIT * _SMALL_LIMIT:
        return True
    if not _miller_rabin(n, _MR_BASES):
        return False
    if n < _MR_EXACT_BOUND:
        return True
    return _lucas_proof(n)


def _pollard_brent(n: int, c: int) -> int:
    """One Brent-variant rho run with polynomial x^2 + c; returns a divisor
    of n, possibly n itself on failure."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def _split(n: int) -> int:
    """A nontrivial divisor of the odd composite n."""
    r = math.isqrt(n)
    if r * r == n:
        return r
    # deterministic restart schedule: c = 1, 2, 3, ...
    c = 1
    while True:
        d = _pollard_brent(n, c)
        if 1 < d < n:
            return d
        c += 1


def _factor_large(n: int, out: dict[int, int]) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _split(m)
        stack.append(d)
        stack.append(m // d)


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> Factorization:
    """Canonical prime factorization of ``n >= 1``.

    Trial division by primes below 10**6, then Pollard-Brent rho on whatever
    composite cofactor remains.

    >>> factorize(131040)
    Factorization(factors=((2, 5), (3, 2), (5, 1), (7, 1), (13, 1)))
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    m = n
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    if m > 1 and _SMALL_LIMIT * _SMALL_LIMIT <= m and not is_prime(m):
        for p in _trial_primes():
            if p <= _SMALL_LIMIT:
                continue
            if p * p > m:
                break
            while m % p == 0:
                out[p] = out.get(p, 0) + 1
                m //= p
    if m > 1:
        _factor_large(m, out)
    return Factorization(tuple(sorted(out.items())))


def pow_mod(base: int, exp: int, modulus: int) -> int:
    """``base**exp % modulus`` for a positive modulus."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if exp < 0:
        raise ValueError("negative exponent")
    result = 1 % modulus
    base %= modulus
    while exp:
        if exp & 1:
            result = result * base % modulus
        base = base * base % modulus
        exp >>= 1
    return result


def divisors(f: Factorization) -> list[int]:
    """All positive divisors in ascending order."""
    ranges = [[p**i for i in range(e + 1)] for p, e in f]
    out = []
    for combo in _cartesian(*ranges):
        d = 1
        for x in combo:
            d *= x
        out.append(d)
    out.sort()
    return out


def divisor_count(f: Factorization) -> int:
    c = 1
    for _, e in f:
        c *= e + 1
    return c


def iter_divisors(f: Factorization) -> Iterator[int]:
    """Divisors in ascending order, generated lazily.

    Usable on factorizations with far too many divisors to list, e.g. to
    take the smallest few hundred.
    """
    primes = [p for p, _ in f]
    caps = [e for _, e in f]
    heap = [(1, 0, (0,) * len(primes))]
    while heap:
        d, i, exps = heapq.heappop(heap)
        yield d
        # extend only with primes at index >= i so each divisor has one path
        for j in range(i, len(primes)):
            if exps[j] < caps[j]:
                bumped = exps[:j] + (exps[j] + 1,) + exps[j + 1 :]
                heapq.heappush(heap, (d * primes[j], j, bumped))


def find_primitive_root(p: int, factored_p_minus_1: Factorization | None = None) -> int:
    """Smallest generator of the multiplicative group mod the prime ``p``."""
    if p < 2:
        raise ValueError(f"{p} has no primitive root")
    if factored_p_minus_1 is None:
        factored_p_minus_1 = factorize(p - 1)
    if factored_p_minus_1.value != p - 1:
        raise ValueError(f"factorization {factored_p_minus_1} does not multiply to {p - 1}")
    if p == 2:
        return 1
    exps = [(p - 1) // q for q in factored_p_minus_1.primes]
    for g in range(2, p):
        if pow(g, p - 1, p) != 1:
            raise ValueError(f"{p} is not prime (Fermat witness {g})")
        if all(pow(g, e, p) != 1 for e in exps):
            return g
    raise ValueError(f"{p} is not prime (no element of order {p - 1})")


def primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    if limit <= TRIAL_DIVISION_LIMIT:
        ps = _trial_primes()
        return ps[: bisect.bisect_right(ps, limit)]
    return _sieve(limit)


def prime_powers_up_to(limit: int) -> list[tuple[int, int]]:
    """``(p, a)`` with ``p**a <= limit``, ordered by prime then exponent."""
    out = []
    for p in primes_up_to(limit):
        q, a = p, 1
        while q <= limit:
            out.append((p, a))
            q *= p
            a += 1
    return out
