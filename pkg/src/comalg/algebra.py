"""Two-dimensional commutative algebras given by structure constants.

Convention: e1*e1 = a e1 + b e2, e2*e2 = c e1 + d e2, e1*e2 = e e1 + f e2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import rat
from .cubics import BinaryCubic, BinaryQuadratic
from .errors import DomainError

NAMES = ("a", "b", "c", "d", "e", "f")


@dataclass(frozen=True)
class Algebra:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)
    e: Fraction = Fraction(0)
    f: Fraction = Fraction(0)

    def __post_init__(self):
        for k in NAMES:
            object.__setattr__(self, k, rat(getattr(self, k)))

    @property
    def constants(self) -> tuple:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    @classmethod
    def from_products(cls, e1e1, e2e2, e1e2) -> Algebra:
        return cls(e1e1[0], e1e1[1], e2e2[0], e2e2[1], e1e2[0], e1e2[1])

    def __add__(self, other: Algebra) -> Algebra:
        return Algebra(*(s + t for s, t in zip(self.constants, other.constants)))

    def __sub__(self, other: Algebra) -> Algebra:
        return Algebra(*(s - t for s, t in zip(self.constants, other.constants)))

    def scaled(self, k) -> Algebra:
        return Algebra(*(k * s for s in self.constants))

    def is_zero(self) -> bool:
        return not any(self.constants)


ZERO = Algebra()
SPLIT = Algebra(1, 0, 0, 1, 0, 0)


def field_algebra(a) -> Algebra:
    """Q(sqrt a) with basis (1, sqrt a): e1^2 = e1, e2^2 = a e1, e1 e2 = e2."""
    return Algebra(1, 0, a, 0, 0, 1)


@dataclass(frozen=True)
class LinMap:
    """2x2 matrix acting on column vectors."""

    m11: Fraction
    m12: Fraction
    m21: Fraction
    m22: Fraction

    def __post_init__(self):
        for k in ("m11", "m12", "m21", "m22"):
            object.__setattr__(self, k, rat(getattr(self, k)))

    @classmethod
    def identity(cls) -> LinMap:
        return cls(1, 0, 0, 1)

    @classmethod
    def scalar(cls, lam) -> LinMap:
        return cls(lam, 0, 0, lam)

    @property
    def rows(self):
        return ((self.m11, self.m12), (self.m21, self.m22))

    def det(self) -> Fraction:
        return self.m11 * self.m22 - self.m12 * self.m21

    def inverse(self) -> LinMap:
        det = self.det()
        if det == 0:
            raise DomainError("singular linear map")
        return LinMap(self.m22 / det, -self.m12 / det, -self.m21 / det, self.m11 / det)

    def __call__(self, v):
        x, y = v
        return (self.m11 * x + self.m12 * y, self.m21 * x + self.m22 * y)

    def __matmul__(self, other: LinMap) -> LinMap:
        return LinMap(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )


@dataclass(frozen=True)
class Covector:
    t1: Fraction
    t2: Fraction

    def __call__(self, v):
        return self.t1 * v[0] + self.t2 * v[1]

    def is_zero(self) -> bool:
        return self.t1 == 0 and self.t2 == 0


def multiply_table(consts, u, v):
    """Product for any scalars supporting ring arithmetic."""
    a, b, c, d, e, f = consts
    x1, y1 = u
    x2, y2 = v
    xx, yy, xy = x1 * x2, y1 * y2, x1 * y2 + y1 * x2
    return (a * xx + c * yy + e * xy, b * xx + d * yy + f * xy)


def multiply(m: Algebra, u, v):
    return multiply_table(m.constants, u, v)


def left_mult(m: Algebra, u) -> LinMap:
    c1 = multiply(m, u, (1, 0))
    c2 = multiply(m, u, (0, 1))
    return LinMap(c1[0], c2[0], c1[1], c2[1])


def trace_form(m: Algebra) -> Covector:
    return Covector(m.a + m.f, m.e + m.d)


def det_form(m: Algebra) -> BinaryQuadratic:
    a, b, c, d, e, f = m.constants
    return BinaryQuadratic(a * f - b * e, a * d - b * c, e * d - c * f)


def second_det_form(m: Algebra) -> BinaryQuadratic:
    a, b, c, d, e, f = m.constants
    return BinaryQuadratic(-f * f + b * d, 2 * e * f - a * d - b * c, -e * e + a * c)


def transport(consts, basis):
    """Constants, in the standard basis, of the algebra whose table in `basis` is consts.

    basis = (f1, f2) are the images of e1, e2; entries may live in any field.
    """
    (p, r), (q, s) = basis  # f1 = (p, r), f2 = (q, s)
    det = p * s - q * r
    if det == 0:
        raise DomainError("basis vectors are dependent")

    def to_std(w):
        return (p * w[0] + q * w[1], r * w[0] + s * w[1])

    def from_std(v):
        return ((s * v[0] - q * v[1]) / det, (-r * v[0] + p * v[1]) / det)

    def prod(u, v):
        return to_std(multiply_table(consts, from_std(u), from_std(v)))

    return prod((1, 0), (1, 0)) + prod((0, 1), (0, 1)) + prod((1, 0), (0, 1))


def gl_act(g: LinMap, m: Algebra) -> Algebra:
    """(g.m)(v, w) = g m(g^-1 v, g^-1 w)."""
    if g.det() == 0:
        raise DomainError("singular linear map")
    return Algebra(*transport(m.constants, ((g.m11, g.m21), (g.m12, g.m22))))


def associator(m: Algebra, u, v, w):
    left = multiply(m, multiply(m, u, v), w)
    right = multiply(m, u, multiply(m, v, w))
    return (left[0] - right[0], left[1] - right[1])


BASIS = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))


def associator_vanishes(m: Algebra) -> bool:
    return all(
        associator(m, u, v, w) == (0, 0) for u in BASIS for v in BASIS for w in BASIS
    )


def k_alpha(alpha: Covector) -> Algebra:
    """m(v, w) = alpha(v) w + alpha(w) v."""
    return Algebra(2 * alpha.t1, 0, 0, 2 * alpha.t2, alpha.t2, alpha.t1)


def decompose(m: Algebra) -> tuple[Algebra, Algebra]:
    """Split m = m' + m'' with m' = k_{T/3} and m'' of vanishing trace."""
    t = trace_form(m)
    mprime = k_alpha(Covector(t.t1 / 3, t.t2 / 3))
    return mprime, m - mprime


def exceptional_from_cubic(q: BinaryCubic) -> Algebra:
    """The trace-free algebra whose fundamental cubic is q."""
    if q.is_zero():
        raise DomainError("zero cubic")
    al, be, ga, de = q.coeffs
    return Algebra(be / 3, -al, de, -ga / 3, ga / 3, -be / 3)


def idempotents(m: Algebra) -> list[tuple[Fraction, Fraction]]:
    """Rational nonzero v with v*v = v."""
    from .cubics import projective_roots
    from .invariants import fundamental_cubic

    q = fundamental_cubic(m)
    if q.is_zero():
        raise DomainError("fundamental cubic vanishes: idempotents are not isolated")
    out = []
    for v in projective_roots(q):
        w = multiply(m, v, v)
        lam = w[0] / v[0] if v[0] else w[1] / v[1]
        if lam:
            out.append((v[0] / lam, v[1] / lam))
    return out
