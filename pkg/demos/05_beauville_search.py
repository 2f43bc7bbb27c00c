"""Search for four-fiber factorizations of the identity with Euler number 12.

Complete only up to the entry bound; more workers split the outer loop.

Run: python demos/05_beauville_search.py [bound] [workers]
"""

import sys
import time

from lagsphere.monodromy import beauville_search

bound = int(sys.argv[1]) if len(sys.argv) > 1 else 100
workers = int(sys.argv[2]) if len(sys.argv) > 2 else 1

t0 = time.perf_counter()
res = beauville_search(bound, workers=workers)
print(f"entry bound {res.entry_bound}, {workers} worker(s), {time.perf_counter() - t0:.2f} s")
for m in res.sorted():
    print("  I_" + ", I_".join(map(str, m)))
