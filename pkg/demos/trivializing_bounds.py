"""The moduli N_k: U^k(Z_n) is trivial exactly when n divides N_k.

    python demos/trivializing_bounds.py
"""

from collections import Counter

from gku.classify import check_bound, stabilization_index, trivializing_bound

for k in range(1, 5):
    b = trivializing_bound(k)
    digits = len(str(b.value))
    shown = b.value if digits < 20 else f"<{digits} digits>"
    print(f"N_{k} = {shown}")
    print(f"      = {b.bound}")

# N_5 would need a divisor scan of N_4, which has about 2^62 divisors.
try:
    trivializing_bound(5)
except ValueError as exc:
    print("N_5:", exc)

# Spot check the biconditional on N_3 (exhaustive up to 10^4 here; the test
# suite goes to 10^5).
report = check_bound(trivializing_bound(3), 100, exhaustive_limit=10**4)
print("check_bound(N_3):", "pass" if report.ok else report.counterexample, report.checked)

# How many levels does it take to kill U(Z_n)?  Stabilization index histogram.
hist = Counter(stabilization_index(n) for n in range(1, 100001))
for k in sorted(hist):
    print(f"  index {k}: {hist[k]:6d} moduli <= 10^5")
