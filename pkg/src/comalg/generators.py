"""Seeded random inputs: algebras across all strata, cubics, linear maps."""

from __future__ import annotations

import random
from fractions import Fraction

from . import construct
from .algebra import Algebra, LinMap
from .cubics import BinaryCubic


def small_rat(rng: random.Random, bound: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
        if x or not nonzero:
            return x


def random_int_algebra(rng: random.Random, bound: int = 20) -> Algebra:
    return Algebra(*(rng.randint(-bound, bound) for _ in range(6)))


def random_gl(rng: random.Random, bound: int = 5) -> LinMap:
    while True:
        g = LinMap(*(small_rat(rng, bound) for _ in range(4)))
        if g.det():
            return g


def random_sl(rng: random.Random, bound: int = 4) -> LinMap:
    g = LinMap.identity()
    for _ in range(3):
        g = g @ LinMap(1, small_rat(rng, bound), 0, 1) @ LinMap(1, 0, small_rat(rng, bound), 1)
    return g


def random_cubic(rng: random.Random, bound: int = 20, weight: int = 0) -> BinaryCubic:
    return BinaryCubic(*(rng.randint(-bound, bound) for _ in range(4)), weight=weight)


def random_offcardano(rng: random.Random, bound: int = 9):
    while True:
        p3, p2 = small_rat(rng, bound), small_rat(rng, bound)
        if 27 * p3**2 + 4 * p2**3 != 0:
            return p3, p2


def random_cardano(rng: random.Random, bound: int = 6):
    # (p3, p2) = (-2 D^3, -3 D^2) for a nonzero double idemvalue D
    d = small_rat(rng, bound, nonzero=True)
    return -2 * d**3, -3 * d**2


def random_exceptional_cubic(rng: random.Random, bound: int = 9):
    while True:
        d2, d3 = small_rat(rng, bound), small_rat(rng, bound)
        if -27 * d3**2 - 4 * d2**3 != 0:
            return d2, d3


EXT_CLASSES = (1, -1, 2, -3, 5)

KINDS = (
    "int",
    "offcardano",
    "cardano",
    "exceptional",
    "table1_row1",
    "table1_row2",
    "table2",
    "table3_row1",
    "table3_row2",
    "table3_row3",
    "table3_row4",
    "zero",
)


def random_nu(rng: random.Random) -> Fraction:
    while True:
        nu = small_rat(rng)
        if nu != Fraction(1, 2):
            return nu


def algebra_of_kind(rng: random.Random, kind: str, bound: int = 20) -> Algebra:
    if kind == "int":
        return random_int_algebra(rng, bound)
    if kind == "offcardano":
        return construct.from_moduli_generic(*random_offcardano(rng))
    if kind == "cardano":
        return construct.from_moduli_cardano(*random_cardano(rng), rng.choice(EXT_CLASSES))
    if kind == "exceptional":
        return construct.from_cubic_exceptional(*random_exceptional_cubic(rng))
    if kind == "table1_row1":
        return construct.table1_row1(random_nu(rng))
    if kind == "table1_row2":
        return construct.table1_row2()
    if kind == "table2":
        return construct.table2(small_rat(rng, nonzero=True))
    if kind == "table3_row1":
        return construct.table3_row1(random_nu(rng))
    if kind == "table3_row2":
        return construct.table3_row2()
    if kind == "table3_row3":
        return construct.table3_row3(rng.randint(0, 1))
    if kind == "table3_row4":
        return construct.table3_row4()
    return Algebra()


def random_algebra_any_stratum(rng: random.Random, bound: int = 20) -> Algebra:
    return algebra_of_kind(rng, rng.choice(KINDS), bound)
