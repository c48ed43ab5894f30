"""
Eulerian and Narayana triangles at increasing truncation
========================================================

Both are believed to be TP.  Exhaustive scans only certify finite
truncations, so this walks up the ladder of orders and records the minor
counts.  Pass a worker count on the command line to scan in parallel.
"""

import sys
import time

from tptri import build_general, get_spec, is_tp_r

workers = int(sys.argv[1]) if len(sys.argv) > 1 else None
top = int(sys.argv[2]) if len(sys.argv) > 2 else 10

for name in ("eulerian", "narayana"):
    for N in range(2, top + 1):
        start = time.perf_counter()
        report = is_tp_r(build_general(get_spec(name), N).to_array(), "all", workers=workers)
        print(f"{name:9s} order {N:2d}: verified={report.verified} "
              f"minors={report.minors_evaluated:7d} ({time.perf_counter() - start:.2f}s)")
        if not report.verified:
            print("   witness:", report.witness)
            break
