import math

import pytest
from hypothesis import given, strategies as st

from gku.arith import (
    Factorization,
    divisor_count,
    divisors,
    factorize,
    find_primitive_root,
    is_prime,
    iter_divisors,
    pow_mod,
    prime_powers_up_to,
    primes_up_to,
)


def naive_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


@pytest.mark.parametrize("n, want", [(0, False), (1, False), (2, True), (269, True), (268, False)])
def test_is_prime_examples(n, want):
    assert is_prime(n) is want


def test_is_prime_matches_trial_division():
    assert all(is_prime(n) == naive_is_prime(n) for n in range(0, 10**4 + 1))


@pytest.mark.parametrize(
    "n, want",
    [
        (2**61 - 1, True),  # Mersenne prime
        (2**89 - 1, True),  # beyond the deterministic Miller-Rabin range
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3317044064679887385961981, False),  # fools the first 12 prime bases
        (561, False),
        ((2**61 - 1) * (2**31 - 1), False),
    ],
)
def test_is_prime_hard_cases(n, want):
    assert is_prime(n) is want


@pytest.mark.parametrize(
    "n, want",
    [
        (1, ()),
        (338, ((2, 1), (13, 2))),
        (131040, ((2, 5), (3, 2), (5, 1), (7, 1), (13, 1))),
    ],
)
def test_factorize_examples(n, want):
    assert factorize(n).factors == want


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_reconstructs_up_to_1e5():
    for n in range(1, 10**5 + 1):
        f = factorize(n)
        assert f.value == n


@given(st.integers(min_value=1, max_value=10**30))
def test_factorize_canonical(n):
    f = factorize(n)
    assert f.value == n
    assert list(f.primes) == sorted(set(f.primes))
    assert all(is_prime(p) and e >= 1 for p, e in f)


def test_factorize_needs_rho():
    # both factors lie above the trial-division limit
    p, q = 1000003, 998244353
    assert factorize(p * q * 4).factors == ((2, 2), (p, 1), (q, 1))


def test_factorization_validation():
    with pytest.raises(ValueError):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(ValueError):
        Factorization(((2, 0),))
    with pytest.raises(ValueError):
        Factorization.from_pairs([(4, 1)])
    assert Factorization.from_pairs([(3, 1), (2, 2), (3, 1)]).factors == ((2, 2), (3, 2))
    assert str(Factorization.of(338)) == "2*13^2"
    assert str(Factorization()) == "1"
    assert (Factorization.of(12) * Factorization.of(18)).value == 216


@pytest.mark.parametrize("b, e, m, want", [(2, 268, 269, 1), (5, 0, 7, 1), (5, 0, 1, 0), (0, 5, 7, 0)])
def test_pow_mod_examples(b, e, m, want):
    assert pow_mod(b, e, m) == want


def test_pow_mod_rejects_zero_modulus():
    with pytest.raises(ValueError):
        pow_mod(2, 3, 0)


@given(st.integers(0, 10**20), st.integers(0, 10**6), st.integers(1, 10**20))
def test_pow_mod_matches_builtin(b, e, m):
    assert pow_mod(b, e, m) == pow(b, e, m)


@pytest.mark.parametrize("n, want", [(1, [1]), (24, [1, 2, 3, 4, 6, 8, 12, 24])])
def test_divisors_examples(n, want):
    assert divisors(factorize(n)) == want


def test_divisors_of_12_count():
    assert len(divisors(factorize(12))) == 6 == divisor_count(factorize(12))


@given(st.integers(1, 10**6))
def test_divisors_properties(n):
    f = factorize(n)
    ds = divisors(f)
    assert ds == sorted(set(ds))
    assert len(ds) == divisor_count(f)
    assert all(n % d == 0 for d in ds)
    assert list(iter_divisors(f)) == ds


def test_iter_divisors_is_lazy():
    huge = Factorization.from_pairs([(p, 3) for p in primes_up_to(200)])
    from itertools import islice

    first = list(islice(iter_divisors(huge), 10))
    assert first == [1, 2, 3, 4, 5, 6, 7, 8, 9, 10]


@pytest.mark.parametrize("p, g", [(2, 1), (3, 2), (5, 2), (7, 3), (269, 2)])
def test_primitive_root_examples(p, g):
    assert find_primitive_root(p, factorize(p - 1)) == g


def test_primitive_root_269_is_smallest():
    p = 269
    def is_gen(g):
        return len({pow(g, i, p) for i in range(p - 1)}) == p - 1
    assert find_primitive_root(p) == min(g for g in range(2, p) if is_gen(g))


def test_primitive_root_self_verifies():
    for p in primes_up_to(5000)[1:]:
        f = factorize(p - 1)
        g = find_primitive_root(p, f)
        assert pow(g, p - 1, p) == 1
        assert all(pow(g, (p - 1) // q, p) != 1 for q in f.primes)
        assert all(any(pow(h, (p - 1) // q, p) == 1 for q in f.primes) for h in range(2, g))


def test_primitive_root_errors():
    with pytest.raises(ValueError):
        find_primitive_root(1)
    with pytest.raises(ValueError):
        find_primitive_root(13, factorize(10))
    with pytest.raises(ValueError):
        find_primitive_root(91, factorize(90))


def test_prime_lists():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_up_to(1) == []
    assert prime_powers_up_to(10) == [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)]
