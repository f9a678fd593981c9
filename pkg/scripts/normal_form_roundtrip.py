"""Move every degenerate normal form by random GL changes of basis and classify it back."""

import argparse
import random
from collections import Counter

from comalg import classify, construct, generators
from comalg.algebra import gl_act
from comalg.serialize import to_json

ROWS = {
    "table1_row1": lambda rng: construct.table1_row1(generators.random_nu(rng)),
    "table1_row2": lambda rng: construct.table1_row2(),
    "table2": lambda rng: construct.table2(generators.small_rat(rng, nonzero=True)),
    "table3_row1": lambda rng: construct.table3_row1(generators.random_nu(rng)),
    "table3_row2": lambda rng: construct.table3_row2(),
    "table3_row3": lambda rng: construct.table3_row3(rng.randint(0, 1)),
    "table3_row4": lambda rng: construct.table3_row4(),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = Counter()
    for name, make in ROWS.items():
        for _ in range(args.trials):
            m = make(rng)
            moved = gl_act(generators.random_gl(rng), m)
            same = classify.classify_gl(moved) == classify.classify_gl(m)
            tally[name, same] += 1
            if not same:
                print("mismatch:", name, to_json(m), to_json(moved))
        print(f"{name:12s} {tally[name, True]}/{args.trials}  e.g. {to_json(classify.classify_gl(m))}")


if __name__ == "__main__":
    main()
