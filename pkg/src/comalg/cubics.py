"""Binary cubics and quadratics over Q: covariants, roots and splitting fields."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import SquareClass, is_square, rat, square_class
from .errors import DomainError


@dataclass(frozen=True)
class BinaryQuadratic:
    qa: Fraction
    qb: Fraction
    qc: Fraction

    def __post_init__(self):
        for k in ("qa", "qb", "qc"):
            object.__setattr__(self, k, rat(getattr(self, k)))

    @property
    def coeffs(self) -> tuple:
        return (self.qa, self.qb, self.qc)

    def __call__(self, x, y):
        return self.qa * x * x + self.qb * x * y + self.qc * y * y

    def discriminant(self) -> Fraction:
        return self.qb * self.qb - 4 * self.qa * self.qc

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def compose(self, g) -> BinaryQuadratic:
        """The form v -> q(g v)."""
        return BinaryQuadratic(*_substitute(self.coeffs, g))


@dataclass(frozen=True)
class BinaryCubic:
    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction
    weight: int = 0

    def __post_init__(self):
        for k in "ABCD":
            object.__setattr__(self, k, rat(getattr(self, k)))

    @property
    def coeffs(self) -> tuple:
        return (self.A, self.B, self.C, self.D)

    def __call__(self, x, y):
        return ((self.A * x + self.B * y) * x + self.C * y * y) * x + self.D * y * y * y

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def compose(self, g) -> BinaryCubic:
        """The cubic v -> q(g v), same weight."""
        return BinaryCubic(*_substitute(self.coeffs, g), weight=self.weight)


# homogeneous forms as coefficient tuples, x-degree descending


def form_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def form_dx(p):
    n = len(p) - 1
    return tuple((n - i) * p[i] for i in range(n))


def form_dy(p):
    return tuple(i * p[i] for i in range(1, len(p)))


def form_eval(p, x, y):
    n = len(p) - 1
    return sum(c * x ** (n - i) * y**i for i, c in enumerate(p) if c)


def _substitute(p, g):
    """Coefficients of v -> p(g v) for g = ((g11, g12), (g21, g22))."""
    (g11, g12), (g21, g22) = g
    lx, ly = (g11, g12), (g21, g22)  # x -> g11 x + g12 y, y -> g21 x + g22 y
    n = len(p) - 1
    out = (0,) * (n + 1)
    for i, c in enumerate(p):
        if not c:
            continue
        term = (c,)
        for _ in range(n - i):
            term = form_mul(term, lx)
        for _ in range(i):
            term = form_mul(term, ly)
        out = tuple(s + t for s, t in zip(out, term))
    return out


def act_cubic(g, q: BinaryCubic) -> BinaryCubic:
    """Twisted action: (g.q)(v) = det(g)^(-weight) q(g^-1 v)."""
    det = rat(g.det())
    coeffs = _substitute(q.coeffs, g.inverse().rows)
    scale = det ** (-q.weight)
    return BinaryCubic(*(scale * c for c in coeffs), weight=q.weight)


def cubic_discriminant_value(A, B, C, D):
    return 18 * A * B * C * D + B * B * C * C - 4 * A * C**3 - 4 * B**3 * D - 27 * A * A * D * D


def cubic_discriminant(q: BinaryCubic):
    from .invariants import TwistedScalar

    return TwistedScalar(rat(cubic_discriminant_value(*q.coeffs)), 6 + 4 * q.weight)


def hessian_coeffs(A, B, C, D):
    return (12 * A * C - 4 * B * B, 36 * A * D - 4 * B * C, 12 * B * D - 4 * C * C)


def hessian(q: BinaryCubic) -> BinaryQuadratic:
    return BinaryQuadratic(*hessian_coeffs(*q.coeffs))


def g_covariant_coeffs(A, B, C, D):
    p = (A, B, C, D)
    mu = hessian_coeffs(A, B, C, D)
    left = form_mul(form_dx(p), form_dy(mu))
    right = form_mul(form_dy(p), form_dx(mu))
    return tuple(s - t for s, t in zip(left, right))


def g_covariant(q: BinaryCubic) -> BinaryCubic:
    return BinaryCubic(*g_covariant_coeffs(*q.coeffs), weight=0)


def eisenstein_check(q: BinaryCubic, v) -> bool:
    x, y = map(rat, v)
    disc = cubic_discriminant_value(*q.coeffs)
    return 16 * 27 * disc * q(x, y) ** 2 + hessian(q)(x, y) ** 3 + g_covariant(q)(x, y) ** 2 == 0


# univariate polynomials over Q, coefficients ascending


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _primitive_ints(coeffs):
    coeffs = [rat(c) for c in coeffs]
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = math.gcd(*ints)
    return [i // g for i in ints] if g else ints


def rational_roots(coeffs) -> list[Fraction]:
    """Distinct rational roots of a univariate polynomial (ascending coefficients)."""
    from sympy import Poly, Symbol

    p = _trim(coeffs)
    if not p:
        raise DomainError("zero polynomial")
    if len(p) == 1:
        return []
    ints = _primitive_ints(p)
    _, factors = Poly(ints[::-1], Symbol("x")).factor_list()
    roots = []
    for fac, _mult in factors:
        if fac.degree() == 1:
            c1, c0 = fac.all_coeffs()
            roots.append(Fraction(-int(c0), int(c1)))
    return sorted(roots)


# projective roots of binary cubics

INF_ROOT = (Fraction(1), Fraction(0))


def projective_roots(q: BinaryCubic) -> list[tuple[Fraction, Fraction]]:
    """Distinct rational roots [x:y], normalized to (t, 1) or (1, 0)."""
    if q.is_zero():
        raise DomainError("zero cubic")
    out = []
    if q.A == 0:
        out.append(INF_ROOT)
    # q(t, 1) = A t^3 + B t^2 + C t + D
    uni = [q.D, q.C, q.B, q.A]
    if any(uni):
        out.extend((t, Fraction(1)) for t in rational_roots(uni))
    return sorted(set(out), key=_root_key)


def _root_key(r):
    return (r[1] == 0, r[0])


def _lin_factor(root):
    """Linear form vanishing at the projective root (x0, y0): y0 x - x0 y."""
    x0, y0 = root
    return (y0, -x0)


def divide_form(p, lin):
    """Exact division of binary form p by a linear form; raises if inexact."""
    l0, l1 = lin
    n = len(p) - 1
    out = []
    rem = list(p)
    if l0 != 0:
        for i in range(n):
            c = rem[i] / l0
            out.append(c)
            rem[i] -= c * l0
            rem[i + 1] -= c * l1
        if rem[n] != 0:
            raise DomainError("inexact division")
    else:
        # divide by a multiple of y
        if rem[0] != 0:
            raise DomainError("inexact division")
        out = [c / l1 for c in rem[1:]]
    return tuple(out)


def repeated_root(q: BinaryCubic):
    """(root, multiplicity) of the repeated linear factor, or None."""
    if q.is_zero():
        raise DomainError("zero cubic")
    if cubic_discriminant_value(*q.coeffs) != 0:
        return None
    for root in projective_roots(q):
        rest = divide_form(q.coeffs, _lin_factor(root))
        mult = 1
        while True:
            try:
                rest = divide_form(rest, _lin_factor(root))
            except DomainError:
                break
            mult += 1
            if len(rest) == 1:
                break
        if mult >= 2:
            return root, mult
    raise AssertionError("vanishing discriminant without a rational repeated root")


@dataclass(frozen=True)
class SplittingDescriptor:
    degree: int
    disc_class: SquareClass
    roots: tuple = field(compare=False)
    defining_cubic: BinaryCubic = field(compare=False)
    repeated: bool = field(default=False, compare=False)


def splitting_descriptor(q: BinaryCubic) -> SplittingDescriptor:
    roots = projective_roots(q)
    disc = cubic_discriminant_value(*q.coeffs)
    rep = repeated_root(q) is not None
    if rep or len(roots) == 3:
        degree = 1
    elif len(roots) == 1:
        degree = 2
    elif is_square(disc):
        degree = 3
    else:
        degree = 6
    dclass = square_class(disc) if disc else SquareClass(1)
    return SplittingDescriptor(degree, dclass, tuple(roots), q, rep)


# prime splitting heuristic for irreducible cubics


@lru_cache(maxsize=1)
def _primes_upto(n: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i, v in enumerate(sieve) if v)


def _pmod_mulmod(a, b, f, p):
    # product of a, b (ascending coeffs) modulo monic cubic f, mod p
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, 2, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for i in range(3):
                prod[k - 3 + i] = (prod[k - 3 + i] - c * f[i]) % p
    return prod[:3] + [0] * (3 - len(prod[:3]))


def _roots_mod_p(ints, p) -> int:
    """Number of distinct roots of the integer cubic (ascending) in F_p."""
    inv = pow(ints[3], -1, p)
    f = [(c * inv) % p for c in ints[:3]]
    # x^p mod f by square and multiply
    result, base, e = [1, 0, 0], [0, 1, 0], p
    while e:
        if e & 1:
            result = _pmod_mulmod(result, base, f, p)
        base = _pmod_mulmod(base, base, f, p)
        e >>= 1
    h = [(result[0]) % p, (result[1] - 1) % p, result[2] % p]
    g = _gcd_mod_p(f + [1], h, p)
    return len(g) - 1


def _gcd_mod_p(a, b, p):
    def trim(x):
        x = [c % p for c in x]
        while x and x[-1] == 0:
            x.pop()
        return x

    a, b = trim(a), trim(b)
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b) and a:
            c = (a[-1] * inv) % p
            k = len(a) - len(b)
            for i, y in enumerate(b):
                a[i + k] = (a[i + k] - c * y) % p
            a = trim(a)
        a, b = b, a
    return a


def splitting_pattern(q: BinaryCubic, bound: int = 10_000, exclude: int = 1) -> tuple[int, ...]:
    """Root counts mod p for primes p <= bound not dividing exclude*lead*disc."""
    ints = _primitive_ints([q.D, q.C, q.B, q.A])
    if ints[3] == 0:
        raise DomainError("pattern needs a cubic with nonzero leading coefficient")
    disc = int(cubic_discriminant_value(*reversed(ints)))
    bad = abs(disc * ints[3] * exclude)
    return tuple(-1 if bad % p == 0 else _roots_mod_p(ints, p) for p in _primes_upto(bound))


def same_splitting_heuristic(q1: BinaryCubic, q2: BinaryCubic, bound: int = 10_000) -> bool:
    """Compare root counts of two irreducible cubics modulo primes up to bound."""
    ints1 = _primitive_ints([q1.D, q1.C, q1.B, q1.A])
    ints2 = _primitive_ints([q2.D, q2.C, q2.B, q2.A])
    d1 = int(cubic_discriminant_value(*reversed(ints1))) * ints1[3]
    d2 = int(cubic_discriminant_value(*reversed(ints2))) * ints2[3]
    p1 = splitting_pattern(q1, bound, d2)
    p2 = splitting_pattern(q2, bound, d1)
    return p1 == p2
