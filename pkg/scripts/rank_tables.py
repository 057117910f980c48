#!/usr/bin/env python3
"""Print the scattered-representation table for a range of ranks.

Usage: python scripts/rank_tables.py [n_min] [n_max]

Multiplicities are included up to rank 8.
"""

import sys

from spinchains.scattered import build_record, display_order, generate


def main() -> int:
    n_min = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    n_max = int(sys.argv[2]) if len(sys.argv) > 2 else 6
    for n in range(n_min, n_max + 1):
        print(f"SL({n}): {2 ** (n - 2)} scattered representations")
        sets = sorted((display_order(cs) for cs in generate(n)), key=lambda cs: cs.to_lists())
        for cs in sets:
            rec = build_record(cs, with_multiplicity=n <= 8)
            chains = " ".join("{" + ",".join(map(str, c.entries())) + "}" for c in rec.chains.chains)
            mult = "" if rec.multiplicity is None else f"  mult={rec.multiplicity}"
            print(
                f"  {chains:34s} 2lambda'={list(rec.lambda2_fund)}  s={list(rec.s)}  "
                f"tau={list(rec.tau_fund)}  u-small={rec.u_small}{mult}"
            )
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
