#!/usr/bin/env python3
"""Run the full invariant suite and print per-rank timings.

Usage: python scripts/verify_sweep.py [n_max]
"""

import sys
import time

from spinchains.scattered import count, generate
from spinchains.spin import spin_lowest_k_type, verify_spin_identity
from spinchains.verify import run_verification


def main() -> int:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 12

    print("rank sweep:")
    for n in range(2, n_max + 1):
        t0 = time.perf_counter()
        sets = generate(n)
        identities = sum(verify_spin_identity(spin_lowest_k_type(cs)) for cs in sets)
        dt = time.perf_counter() - t0
        print(f"  n={n:2d}  parameters={count(n):5d}  identities={identities:5d}  {dt * 1e3:8.1f} ms")

    print("\ninvariant suite:")
    t0 = time.perf_counter()
    lines, ok = run_verification(min(n_max, 12))
    for line in lines:
        print(f"  {line}")
    print(f"\nRESULT: {'PASS' if ok else 'FAIL'} in {time.perf_counter() - t0:.1f} s")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
