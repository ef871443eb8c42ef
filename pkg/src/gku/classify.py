"""Boolean / trivial verdicts for U^k(Z_n) and the trivializing moduli N_k.

For prime-power moduli the verdict is read off directly from the exponent
and level (2-powers and 3-powers), or reduced to the verdict for a single
level of ``Z_p`` (other odd primes).  Composite moduli combine their parts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice

from .abelian import GroupShape, is_boolean, is_trivial
from .arith import (
    Factorization,
    divisor_count,
    divisors,
    factorize,
    is_prime,
    iter_divisors,
    primes_up_to,
)
from .units import Modulus, uk_shape

# N_k is found by scanning the divisors d of N_{k-1} for primes d + 1; N_4
# already has about 2^62 divisors, so the scan stops being feasible at k = 5
MAX_CANDIDATE_DIVISORS = 10**7

TRIVIAL = "trivial"
BOOLEAN = "boolean"
NEITHER = "neither"


def verdict_of(shape: GroupShape) -> str:
    if is_trivial(shape):
        return TRIVIAL
    return BOOLEAN if is_boolean(shape) else NEITHER


@dataclass(frozen=True)
class Classification:
    verdict: str
    shape: GroupShape
    rule: str

    def __post_init__(self):
        if self.verdict != verdict_of(self.shape):
            raise AssertionError(f"verdict {self.verdict} contradicts shape {self.shape}")

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "rule": self.rule, "factors": self.shape.to_json()}


def prime_power_verdict(p: int, alpha: int, k: int) -> tuple[str, str]:
    """Verdict for ``U^k(Z_{p^alpha})`` from the exponent conditions alone.

    Returns ``(verdict, rule)``.  Apart from looking up one level of ``Z_p``
    for odd primes other than 3, nothing here iterates the unit groups.
    """
    if alpha < 1 or k < 1:
        raise ValueError("alpha and k must be positive")
    if p == 2:
        if alpha < 2 * k:
            return TRIVIAL, "2^a:alpha<2k"
        if alpha == 2 * k:
            return BOOLEAN, "2^a:alpha=2k"
        if alpha == 2 * k + 1:
            return BOOLEAN, "2^a:alpha=2k+1"
        return NEITHER, "2^a:alpha>2k+1"
    if p == 3:
        if alpha < k:
            return TRIVIAL, "3^a:alpha<k"
        if alpha == k:
            return BOOLEAN, "3^a:alpha=k"
        return NEITHER, "3^a:alpha>k"
    if alpha >= k:
        # neither trivial nor boolean is possible once alpha >= k
        return NEITHER, "p^a:alpha>=k"
    return verdict_of(uk_shape(p, k - alpha + 1)), "p^a:alpha<k"


def classify(n: Modulus, k: int) -> Classification:
    """Classify ``U^k(Z_n)``.

    >>> classify(64, 3).verdict, classify(64, 3).rule
    ('boolean', '2^a:alpha=2k')
    >>> classify(5**3, 2).verdict
    'neither'
    """
    if k < 1:
        raise ValueError("k must be positive")
    f = n if isinstance(n, Factorization) else factorize(n)
    shape = uk_shape(f, k)
    if not f.factors:
        return Classification(TRIVIAL, shape, "generic")
    verdicts = []
    rules = []
    for p, a in f:
        v, r = prime_power_verdict(p, a, k)
        verdicts.append(v)
        rules.append(r)
    if len(f) == 1:
        return Classification(verdicts[0], shape, rules[0])
    if all(v == TRIVIAL for v in verdicts):
        verdict = TRIVIAL
    elif NEITHER in verdicts:
        verdict = NEITHER
    else:
        verdict = BOOLEAN
    return Classification(verdict, shape, "crt[" + ",".join(rules) + "]")


def stabilization_index(n: Modulus) -> int:
    """Smallest ``k >= 0`` with ``U^k(Z_n)`` trivial."""
    f = n if isinstance(n, Factorization) else factorize(n)
    k = 0
    while uk_shape(f, k):
        k += 1
    return k


@dataclass(frozen=True)
class TrivializingBound:
    """``N_k``: ``U^k(Z_n)`` is trivial exactly when ``n`` divides it."""

    level: int
    bound: Factorization

    @property
    def value(self) -> int:
        return self.bound.value

    def exponent(self, p: int) -> int:
        return self.bound.exponent(p)

    def to_json(self) -> dict:
        return {"level": self.level, "factors": self.bound.to_json(), "value": str(self.value)}


@lru_cache(maxsize=None)
def _bound_factorization(k: int) -> Factorization:
    if k == 0:
        return Factorization()
    pairs = [(2, 2 * k - 1)]
    if k >= 2:
        prev = _bound_factorization(k - 1)
        if divisor_count(prev) > MAX_CANDIDATE_DIVISORS:
            raise ValueError(
                f"N_{k} needs a scan of {divisor_count(prev)} divisors of N_{k - 1}; "
                "only levels up to 4 are computable"
            )
        lower = [_bound_factorization(j).value for j in range(k)]
        for d in divisors(prev):
            p = d + 1
            if p % 2 == 0 or not is_prime(p):
                continue
            # U^k(Z_{p^a}) is trivial iff a < k and U^{k-a}(Z_{p-1}) is,
            # i.e. (p - 1) | N_{k-a}; that condition weakens as a shrinks
            e = max(a for a in range(1, k) if lower[k - a] % d == 0)
            pairs.append((p, e))
    return Factorization.from_pairs(pairs, check=False)


def trivializing_bound(k: int) -> TrivializingBound:
    """``N_k`` built up from ``N_1 = 2``.

    >>> trivializing_bound(2).value, trivializing_bound(3).value
    (24, 131040)
    """
    if k < 1:
        raise ValueError("k must be positive")
    return TrivializingBound(k, _bound_factorization(k))


@dataclass
class BoundReport:
    level: int
    bound: int
    checked: dict[str, int] = field(default_factory=dict)
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "bound": str(self.bound),
            "checked": dict(sorted(self.checked.items())),
            "ok": self.ok,
            "counterexample": self.counterexample,
        }


def check_bound(b: TrivializingBound, sample_limit: int, exhaustive_limit: int = 10**5) -> BoundReport:
    """Check the defining property of a claimed ``N_k``.

    (a) the first ``sample_limit`` divisors give trivial groups; (b) for each
    prime ``p <= sample_limit``, raising its exponent past the bound gives a
    nontrivial group; (c) for ``k <= 3``, every ``n <= exhaustive_limit`` is
    trivial exactly when it divides the bound.  Stops at the first failure.
    """
    k, N = b.level, b.value
    report = BoundReport(k, N)

    def fail(msg: str) -> BoundReport:
        report.counterexample = msg
        return report

    ds = list(islice(iter_divisors(b.bound), sample_limit))
    for d in ds:
        if classify(d, k).verdict != TRIVIAL:
            return fail(f"U^{k}(Z_{d}) is nontrivial but {d} divides {N}")
    report.checked["divisors"] = len(ds)

    ps = primes_up_to(sample_limit)
    for p in ps:
        bumped = b.bound * Factorization(((p, 1),))
        if classify(bumped, k).verdict == TRIVIAL:
            return fail(f"U^{k}(Z_{{{N}*{p}}}) is trivial")
        e = b.exponent(p) + 1
        if classify(Factorization(((p, e),)), k).verdict == TRIVIAL:
            return fail(f"U^{k}(Z_{{{p}^{e}}}) is trivial")
    report.checked["primes"] = len(ps)

    if k <= 3:
        for n in range(1, exhaustive_limit + 1):
            if (classify(n, k).verdict == TRIVIAL) != (N % n == 0):
                return fail(f"n={n}: triviality of U^{k}(Z_n) disagrees with n | {N}")
        report.checked["exhaustive"] = exhaustive_limit
    return report


def shift_equivalence(p: int, alpha: int, k: int, t: int) -> bool:
    """Does ``U^k(Z_{p^alpha}) = U^{k+t}(Z_{p^(alpha+t)})`` hold where it
    should?  Vacuously true when neither side is boolean or trivial."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if min(alpha, k, t) < 1:
        raise ValueError("alpha, k and t must be positive")
    left = uk_shape(Factorization(((p, alpha),)), k)
    right = uk_shape(Factorization(((p, alpha + t),)), k + t)
    if verdict_of(left) == NEITHER and verdict_of(right) == NEITHER:
        return True
    return left == right
