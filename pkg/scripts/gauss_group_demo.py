"""Compose SLxSL classes of algebras with a fixed Disc(D) and print the class table."""

import argparse
from fractions import Fraction

from comalg import gauss
from comalg.cubics import BinaryQuadratic
from comalg import invariants as inv


def algebra_for(delta, alpha):
    """An algebra whose determinant form represents alpha with discriminant delta."""
    q = BinaryQuadratic(alpha, 2, (4 - Fraction(delta)) / (4 * alpha))
    return gauss.quadratic_to_algebra(q.compose(gauss.shear(gauss.common_shear(q)).rows))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--delta", type=int, default=-4)
    ap.add_argument("--reps", type=int, nargs="+", default=[1, 2, 3, 5, 7])
    args = ap.parse_args()

    ms = {r: algebra_for(args.delta, r) for r in args.reps}
    classes = {r: gauss.algebra_class(m) for r, m in ms.items()}
    print(f"Disc(D) values: {sorted({str(inv.disc_d(m).value) for m in ms.values()})}")
    width = max(len(str(r)) for r in args.reps) + 4
    print(" " * width + "".join(f"{r:>{width}}" for r in args.reps))
    for r1, m1 in ms.items():
        row = []
        for m2 in ms.values():
            c = gauss.algebra_class(gauss.compose_algebra_classes(m1, m2))
            same = [r for r, k in classes.items() if k == c]
            row.append(f"[{same[0]}]" if same else f"({c.rep_value.rep})")
        print(f"{r1:>{width}}" + "".join(f"{x:>{width}}" for x in row))
    print("[r]: product equals the class of r; (r): a class outside the list")


if __name__ == "__main__":
    main()
