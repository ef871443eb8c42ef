"""Watch U^k(Z_n) shrink level by level until it hits the zero ring.

    python demos/unit_group_chains.py [n ...]
"""

import sys

from gku.abelian import render
from gku.classify import classify, stabilization_index
from gku.oracle import brute_uk
from gku.units import uk_shape

moduli = [int(a) for a in sys.argv[1:]] or [338, 47**6, 23**6, 1000]

for n in moduli:
    print(f"n = {n}")
    for k in range(stabilization_index(n) + 1):
        shape = uk_shape(n, k)
        line = f"  U^{k}: {render(shape)}"
        if k:
            line += f"   [{classify(n, k).verdict}]"
        print(line)

# For small moduli the enumeration oracle recomputes every level from scratch,
# without the unit-group formulas.
n = 338
same = all(uk_shape(n, k) == brute_uk(n, k) for k in range(6))
print(f"\noracle agrees on n = {n}, k = 0..5: {same}")

# The whole chain of a huge 2-power is immediate because only the
# (prime power, level) pairs that actually occur are ever computed.
print("U^2000(Z_{2^5001}) =", render(uk_shape(2**5001, 2000))[:40], "...")
