"""Acceptance criteria 1-8, each printed as one PASS/FAIL line.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
"""

import sys
import time
from collections import defaultdict

import pytest

from gku import units
from gku.abelian import GroupShape, is_boolean
from gku.arith import divisors, factorize, prime_powers_up_to, primes_up_to
from gku.classify import (
    BOOLEAN,
    NEITHER,
    TRIVIAL,
    check_bound,
    classify,
    trivializing_bound,
    verdict_of,
)
from gku.oracle import brute_uk
from gku.pratt import build_cert, build_tree, correspondence_check, verify_cert
from gku.units import uk_shape

S = GroupShape.from_orders


def criterion_1():
    units.clear_caches()
    cases = [
        (338, 1, [12, 13]),
        (338, 2, [2, 2, 12]),
        (338, 3, [2, 2]),
        (338, 4, []),
        (47**6, 8, [2, 4, 2, 5]),
        (23**6, 9, [2]),
        (23, 1, [2, 11]),
        (23, 2, [2, 5]),
        (23, 3, [4]),
        (23, 4, [2]),
    ]
    bad = [(n, k) for n, k, want in cases if uk_shape(n, k) != S(want)]
    return not bad, f"{len(cases)} worked examples, mismatches {bad}", 1.0


def criterion_2():
    values = {k: trivializing_bound(k).value for k in (1, 2, 3)}
    if values != {1: 2, 2: 24, 3: 131040}:
        return False, f"bounds {values}", 60.0
    for k in (1, 2, 3):
        report = check_bound(trivializing_bound(k), 100, exhaustive_limit=10**5)
        if not report.ok or report.checked.get("exhaustive") != 10**5:
            return False, f"k={k}: {report.counterexample}", 60.0
    return True, "N_1=2, N_2=24, N_3=131040; exhaustive over n <= 10^5 for k <= 3", 60.0


def criterion_3():
    bad = []
    for n in range(1, 3001):
        for k in range(0, 7):
            if uk_shape(n, k) != brute_uk(n, k):
                bad.append((n, k))
    return not bad, f"21000 queries, mismatches {bad[:5]}", 600.0


def criterion_4():
    hit = defaultdict(set)
    bad = []
    closed = {
        2: (units.uk_two_power_closed, units.two_power_case),
        3: (units.uk_three_power_closed, units.three_power_case),
        5: (units.uk_five_power_closed, units.five_power_case),
        7: (units.uk_seven_power_closed, units.seven_power_case),
    }
    for p, (fn, case) in closed.items():
        for alpha in range(1, 13):
            for k in range(1, 11):
                want = uk_shape(p**alpha, k)
                label = case(alpha, k)
                if p == 2 and alpha == 2 * k + 1:
                    label = "alpha=2k+1"  # the theorem's Z_2 x Z_2 note
                hit[p].add(label)
                if fn(alpha, k) != want:
                    bad.append((fn.__name__, alpha, k))
                if p != 2:
                    hit["expand"].add(units.odd_expand_case(alpha, k))
                    if units.uk_odd_prime_power_expand(p, alpha, k) != want:
                        bad.append(("expand", p, alpha, k))
    expected = {
        2: {"alpha>2k", "alpha=2k+1", "alpha=2k", "alpha<2k"},
        3: {"alpha>k", "alpha=k", "alpha<k"},
        5: {"k=1", "alpha>k", "alpha=k", "alpha=k-1", "alpha<k-1"},
        7: {"k=1", "alpha>k", "alpha=k", "alpha=k-1", "alpha<k-1"},
        "expand": {"alpha>k", "alpha=k", "alpha<k"},
    }
    missed = {key: sorted(v - hit[key]) for key, v in expected.items() if v - hit[key]}
    ok = not bad and not missed
    return ok, f"mismatches {bad[:5]}, unhit branches {missed}", 60.0


def criterion_5():
    bad = []
    for p, alpha in prime_powers_up_to(10**5):
        for k in range(1, 9):
            shape = uk_shape(p**alpha, k)
            v = verdict_of(shape)
            if classify(p**alpha, k).verdict != v:
                bad.append(("fast path", p, alpha, k))
            if p == 2:
                if (v == BOOLEAN) != (alpha in (2 * k, 2 * k + 1)) or (v == TRIVIAL) != (alpha < 2 * k):
                    bad.append(("2-power", alpha, k))
                shifted = [uk_shape(2 ** (alpha + 2 * t), k + t) for t in range(1, 5)] if v == BOOLEAN else []
                if any(s != shape for s in shifted):
                    bad.append(("2-power shift", alpha, k))
                continue
            lower = verdict_of(uk_shape(p, k - alpha + 1)) if alpha < k else None
            if (v == TRIVIAL) != (alpha < k and lower == TRIVIAL):
                bad.append(("trivial", p, alpha, k))
            if p == 3:
                want_boolean = alpha == k
            else:
                want_boolean = alpha < k and lower == BOOLEAN
            if (v == BOOLEAN) != want_boolean:
                bad.append(("boolean", p, alpha, k))
            if v == BOOLEAN:
                for t in range(1, 5):
                    if uk_shape(p ** (alpha + t), k + t) != shape:
                        bad.append(("shift", p, alpha, k, t))
    return not bad, f"violations {bad[:5]}", 600.0


def criterion_6():
    bad = []
    for n in range(1, 2001):
        ds = divisors(factorize(n))
        for k in range(1, 6):
            v = classify(n, k).verdict
            if v == TRIVIAL and any(classify(m, k).verdict != TRIVIAL for m in ds):
                bad.append(("trivial", n, k))
            if v == BOOLEAN and any(classify(m, k).verdict == NEITHER for m in ds):
                bad.append(("boolean", n, k))
    return not bad, f"violations {bad[:5]}", 600.0


def criterion_7():
    bad_certs = [p for p in primes_up_to(10**5) if not verify_cert(build_cert(p))]
    levels = build_tree(269).levels
    bad_corr = [p for p in primes_up_to(10**4)[1:] if not correspondence_check(p)]
    ok = not bad_certs and levels == [[2, 67], [2, 3, 11], [2, 2, 5], [2]] and not bad_corr
    return ok, f"bad certs {bad_certs[:5]}, 269 levels {levels}, bad correspondence {bad_corr[:5]}", 120.0


def criterion_8():
    b4 = trivializing_bound(4)
    report = check_bound(b4, 200)
    n3, n4 = trivializing_bound(3).value, b4.value
    if not report.ok or n4 % n3:
        return False, f"check_bound: {report.counterexample}, N_3 | N_4: {n4 % n3 == 0}", 600.0
    if classify(b4.bound, 4).verdict != TRIVIAL:
        return False, "U^4(Z_{N_4}) is not trivial", 600.0
    coprime = [q for q in primes_up_to(10**4) if b4.exponent(q) == 0][:10]
    first = primes_up_to(29)  # these bump an exponent already at its maximum
    bad = [q for q in coprime + first if classify(b4.bound * factorize(q), 4).verdict == TRIVIAL]
    detail = f"N_4 has {len(str(n4))} digits; trivial at N_4, nontrivial at N_4*q for q in {coprime} and {first}"
    return not bad, detail if not bad else f"trivial at N_4*q for q in {bad}", 600.0


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


def evaluate(fn):
    start = time.perf_counter()
    ok, detail, limit = fn()
    elapsed = time.perf_counter() - start
    if elapsed > limit:
        ok, detail = False, f"{detail}; took {elapsed:.1f} s, limit {limit:.0f} s"
    number = fn.__name__.split("_")[1]
    line = f"CRITERION {number}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f} s) {detail}"
    return ok, line


@pytest.mark.parametrize("fn", CRITERIA, ids=[f.__name__ for f in CRITERIA])
def test_criterion(fn, capsys):
    ok, line = evaluate(fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(fn) for fn in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
