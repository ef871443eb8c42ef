"""Brute-force unit group structure, by enumeration only.

Nothing here imports the formula engine or the factorization code: the group
structure of (Z/n)^* is recovered purely by counting, for each prime q of the
group order, how many units satisfy x^(q^j) = 1.  If the q-part is
Z_{q^e1} x ... x Z_{q^er}, that count is q^(sum_i min(j, e_i)), and the
successive differences of the exponents give the number of e_i >= j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .abelian import GroupShape, product

ENUMERATION_LIMIT = 10**6


class EnumerationLimitError(ValueError):
    pass


def _trial_factor(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def _exact_log(count: int, q: int) -> int:
    e = 0
    while count % q == 0:
        count //= q
        e += 1
    if count != 1:
        raise AssertionError(f"count is not a power of {q}")
    return e


@dataclass(frozen=True)
class EnumeratedGroup:
    modulus: int
    elements: tuple[int, ...]

    @classmethod
    def units(cls, n: int, limit: int | None = None) -> "EnumeratedGroup":
        limit = ENUMERATION_LIMIT if limit is None else limit
        if n < 1:
            raise ValueError("modulus must be positive")
        if n > limit:
            raise EnumerationLimitError(f"modulus {n} exceeds enumeration limit {limit}")
        if n == 1:
            return cls(1, (0,))
        return cls(n, tuple(x for x in range(1, n) if math.gcd(x, n) == 1))

    def __len__(self) -> int:
        return len(self.elements)

    def count_solutions(self, exponent: int) -> int:
        """Number of elements with x**exponent == 1."""
        n = self.modulus
        one = 1 % n
        return sum(1 for x in self.elements if pow(x, exponent, n) == one)

    def q_counts(self, q: int) -> list[int]:
        """``[c_0, c_1, ...]`` with ``c_j = #{x : x^(q^j) = 1}``, stopping once
        the whole q-part is reached."""
        full = q ** _valuation(len(self), q)
        counts = [1]
        j = 0
        while counts[-1] != full:
            j += 1
            c = self.count_solutions(q**j)
            if c < counts[-1] or c > full:
                raise AssertionError(f"inconsistent count {c} at {q}^{j}")
            counts.append(c)
        return counts


def _valuation(m: int, q: int) -> int:
    e = 0
    while m % q == 0:
        m //= q
        e += 1
    return e


def _exponents_from_counts(counts: list[int], q: int) -> list[int]:
    logs = [_exact_log(c, q) for c in counts]
    # at_least[j] = #{i : e_i >= j} for j >= 1
    at_least = [logs[j] - logs[j - 1] for j in range(1, len(logs))] + [0]
    exps = []
    for j in range(1, len(at_least)):
        exps.extend([j] * (at_least[j - 1] - at_least[j]))
    return exps


@lru_cache(maxsize=None)
def _brute_unit_shape(n: int, limit: int) -> GroupShape:
    g = EnumeratedGroup.units(n, limit)
    pairs = []
    for q, _ in _trial_factor(len(g)):
        for e in _exponents_from_counts(g.q_counts(q), q):
            pairs.append((q, e))
    shape = GroupShape.of(pairs)
    assert shape.order == len(g)
    return shape


def brute_unit_shape(n: int, limit: int | None = None) -> GroupShape:
    """Shape of (Z/n)^* by enumeration.

    >>> brute_unit_shape(8).orders()
    [2, 2]
    """
    return _brute_unit_shape(n, ENUMERATION_LIMIT if limit is None else limit)


def brute_uk(n: int, k: int, limit: int | None = None) -> GroupShape:
    """``U^k(Z_n)`` by repeated enumeration over the prime-power parts."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if n < 1:
        raise ValueError("modulus must be positive")
    limit = ENUMERATION_LIMIT if limit is None else limit
    if n > limit:
        raise EnumerationLimitError(f"modulus {n} exceeds enumeration limit {limit}")
    shape = GroupShape.of(_trial_factor(n))
    for _ in range(k):
        if not shape:
            break
        shape = product(*(brute_unit_shape(q**e, limit) for q, e in shape))
    return shape
