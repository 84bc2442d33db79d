"""Compare normal-form operations with brute-force set evaluation."""

import sys
import time

from graphactors.crosscheck import cross_check

cases = int(sys.argv[1]) if len(sys.argv) > 1 else 500
t0 = time.perf_counter()
bad = cross_check(seed=1, cases=cases)
print(f"{cases} random acyclic cases, {len(bad)} discrepancies, {time.perf_counter() - t0:.2f} s")
for line in bad[:10]:
    print(" ", line)
