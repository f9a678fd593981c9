"""Fuzz the two polynomial identities over random integer algebras and report timing."""

import argparse
import random
import time

from comalg import generators
from comalg import invariants as inv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=10_000)
    ap.add_argument("--bound", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    algebras = [generators.random_int_algebra(rng, args.bound) for _ in range(args.count)]
    start = time.perf_counter()
    eis = sum(inv.check_eisenstein(m) for m in algebras)
    dd = sum(inv.check_discd_identity(m) for m in algebras)
    routes = sum(not inv.dual_path_mismatches(m) for m in algebras)
    elapsed = time.perf_counter() - start
    print(f"algebras:            {args.count} (constants in [-{args.bound}, {args.bound}])")
    print(f"twisted Eisenstein:  {eis}/{args.count}")
    print(f"Disc(D) identity:    {dd}/{args.count}")
    print(f"routes agree:        {routes}/{args.count}")
    print(f"elapsed:             {elapsed:.2f}s")


if __name__ == "__main__":
    main()
