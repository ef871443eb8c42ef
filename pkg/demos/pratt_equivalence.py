"""Pratt tree of a prime next to the recursion that decomposes U^k(Z_p).

    python demos/pratt_equivalence.py [p] > equivalence.dot
    dot -Tsvg equivalence.dot -o equivalence.svg

Text goes to stderr so stdout stays a clean DOT file.
"""

import sys

from gku.pratt import build_cert, build_tree, correspondence_check, equivalence_dot, verify_cert
from gku.units import decomposition_trace

p = int(sys.argv[1]) if len(sys.argv) > 1 else 269

tree = build_tree(p)
trace = decomposition_trace(p, tree.depth)
log = sys.stderr

print(f"Pratt tree levels of {p}:      {tree.levels}", file=log)
print(f"decomposition levels (k={tree.depth}): {trace.depth_levels()}", file=log)
print(f"same primes level by level:  {correspondence_check(p)}", file=log)
print(f"certificate verifies:        {verify_cert(build_cert(p))}", file=log)
for chain in tree.chains():
    print("  chain", " < ".join(map(str, chain)), file=log)

# The trace repeats 2 once per parent just like the tree does.
sys.stdout.write(equivalence_dot(p))
