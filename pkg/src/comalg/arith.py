"""Exact arithmetic over the rationals.

Square tests, square classes, factorization, Hilbert symbols, norm classes
for quadratic discriminants, and a small number type for Q(sqrt a).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError

Rat = Fraction
Number = Union[int, Fraction]

INFINITY = "inf"


def rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass ints, Fractions or strings")
    return Fraction(x)


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def is_square(x: Number) -> bool:
    x = rat(x)
    return _isqrt_exact(x.numerator) is not None and _isqrt_exact(x.denominator) is not None


def sqrt_rat(x: Number) -> Fraction:
    x = rat(x)
    n, d = _isqrt_exact(x.numerator), _isqrt_exact(x.denominator)
    if n is None or d is None:
        raise DomainError(f"{x} is not a rational square")
    return Fraction(n, d)


def factorize(n: int) -> tuple[int, list[tuple[int, int]]]:
    """Return (sign, [(p, e), ...]) with primes ascending."""
    if n == 0:
        raise DomainError("cannot factor 0")
    from sympy import factorint

    sign = -1 if n < 0 else 1
    return sign, sorted(factorint(abs(n)).items())


def squarefree_part(n: int) -> int:
    sign, fac = factorize(n)
    out = sign
    for p, e in fac:
        if e % 2:
            out *= p
    return out


@dataclass(frozen=True, order=True)
class SquareClass:
    rep: int

    def __post_init__(self):
        if self.rep == 0 or squarefree_part(self.rep) != self.rep:
            raise DomainError(f"{self.rep} is not a squarefree nonzero integer")

    def __str__(self):
        return f"[{self.rep}]"


def square_class(x: Number) -> SquareClass:
    x = rat(x)
    if x == 0:
        raise DomainError("0 has no square class")
    # n/d and n*d differ by the square d^2
    return SquareClass(squarefree_part(x.numerator * x.denominator))


# Hilbert symbols


def _valuation(n: int, p: int) -> tuple[int, int]:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k, n


def _legendre(u: int, p: int) -> int:
    r = pow(u % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _integral(x: Fraction) -> int:
    # same square class, integral
    return x.numerator * x.denominator


def hilbert_symbol(x: Number, y: Number, place) -> int:
    """Local Hilbert symbol (x, y) at a prime p or at INFINITY."""
    x, y = rat(x), rat(y)
    if x == 0 or y == 0:
        raise DomainError("Hilbert symbol needs nonzero arguments")
    if place == INFINITY:
        return -1 if (x < 0 and y < 0) else 1
    p = int(place)
    a, b = _integral(x), _integral(y)
    alpha, u = _valuation(a, p)
    beta, v = _valuation(b, p)
    if p == 2:
        eps = lambda t: ((t - 1) // 2) % 2
        omega = lambda t: ((t * t - 1) // 8) % 2
        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    s = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        s *= _legendre(u, p)
    if alpha % 2:
        s *= _legendre(v, p)
    return s


def relevant_places(*xs: Number) -> list:
    primes = {2}
    for x in xs:
        x = rat(x)
        for part in (x.numerator, x.denominator):
            if abs(part) > 1:
                primes.update(p for p, _ in factorize(part)[1])
    return sorted(primes) + [INFINITY]


def is_norm(x: Number, delta: Number) -> bool:
    """True iff x = a^2 - delta*b^2 for rationals a, b (delta non-square)."""
    return all(hilbert_symbol(x, delta, v) == 1 for v in relevant_places(x, delta))


@dataclass(frozen=True, eq=False)
class NormClass:
    """A class in Q*/N(Q(sqrt delta)*)."""

    delta: Fraction
    rep: Fraction

    def __post_init__(self):
        object.__setattr__(self, "delta", rat(self.delta))
        r = rat(self.rep)
        if r == 0:
            raise DomainError("norm class representative must be nonzero")
        if self.delta == 0 or is_square(self.delta):
            raise DomainError(f"delta={self.delta} must be a non-square")
        object.__setattr__(self, "rep", Fraction(squarefree_part(_integral(r))))

    def __eq__(self, other):
        if not isinstance(other, NormClass):
            return NotImplemented
        if other.delta != self.delta:
            return False
        return norm_class_equal(self, other)

    __hash__ = None

    def __mul__(self, other: NormClass) -> NormClass:
        if other.delta != self.delta:
            raise DomainError("norm classes for different discriminants")
        return NormClass(self.delta, self.rep * other.rep)


def norm_class_equal(p: NormClass, q: NormClass) -> bool:
    if p.delta != q.delta:
        raise DomainError(f"mismatched discriminants {p.delta} and {q.delta}")
    return is_norm(p.rep / q.rep, p.delta)


class QuadraticNumber:
    """r + s*sqrt(base) with rational r, s and squarefree base != 1."""

    __slots__ = ("r", "s", "base")

    def __init__(self, r: Number, s: Number, base: int):
        self.r, self.s, self.base = rat(r), rat(s), base

    def _lift(self, other):
        if isinstance(other, QuadraticNumber):
            if other.base != self.base:
                raise DomainError("mixing different quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self.base)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.r + o.r, self.s + o.s, self.base)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.r, -self.s, self.base)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(
            self.r * o.r + self.base * self.s * o.s, self.r * o.s + self.s * o.r, self.base
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.r, -self.s, self.base)

    def norm(self) -> Fraction:
        return self.r * self.r - self.base * self.s * self.s

    def trace(self) -> Fraction:
        return 2 * self.r

    def inverse(self) -> QuadraticNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadraticNumber(self.r / n, -self.s / n, self.base)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        out = QuadraticNumber(1, 0, self.base)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self.r == o.r and self.s == o.s

    def __bool__(self):
        return bool(self.r or self.s)

    def __hash__(self):
        return hash((self.r, self.s, self.base)) if self.s else hash(self.r)

    def is_rational(self) -> bool:
        return self.s == 0

    def to_rational(self) -> Fraction:
        if self.s:
            raise DomainError(f"{self} is irrational")
        return self.r

    def __repr__(self):
        return f"({self.r} + {self.s}*sqrt({self.base}))"


def sqrt_in_field(x: Number) -> Fraction | QuadraticNumber:
    """sqrt(x) as a rational, or as an element of Q(sqrt(squarefree part of x))."""
    x = rat(x)
    if is_square(x):
        return sqrt_rat(x)
    a = square_class(x).rep
    return QuadraticNumber(0, sqrt_rat(x / a), a)


def as_rational(z) -> Fraction:
    if isinstance(z, QuadraticNumber):
        return z.to_rational()
    return rat(z)


def fmt_rat(x: Number) -> str:
    x = rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
