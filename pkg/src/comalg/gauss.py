"""Determinant forms, SL x SL classes and Gauss composition for a fixed discriminant."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count

from .algebra import Algebra, LinMap, det_form, gl_act, multiply
from .arith import NormClass, is_square, rat
from .cubics import BinaryQuadratic
from .errors import DomainError, UnsupportedError


@dataclass(frozen=True)
class FormClass:
    delta: Fraction
    rep_value: NormClass
    form: BinaryQuadratic | None = field(default=None, compare=False)

    def __mul__(self, other: FormClass) -> FormClass:
        return FormClass(self.delta, self.rep_value * other.rep_value)


def form_discriminant(q: BinaryQuadratic) -> Fraction:
    return q.qb * q.qb - 4 * q.qa * q.qc


def _check_delta(delta: Fraction) -> None:
    if delta == 0:
        raise UnsupportedError("degenerate form: discriminant 0")
    if is_square(delta):
        raise UnsupportedError(f"discriminant {delta} is a square; only non-square discriminants are handled")


def form_class(q: BinaryQuadratic) -> FormClass:
    delta = form_discriminant(q)
    _check_delta(delta)
    # anisotropic, so q(e1) = qa is nonzero
    return FormClass(delta, NormClass(delta, q.qa), q)


def identity_form(delta) -> BinaryQuadratic:
    return BinaryQuadratic(1, 0, -rat(delta) / 4)


def quadratic_to_algebra(q: BinaryQuadratic) -> Algebra:
    """Algebra m0 with det_form(m0) = q; needs qb != 0."""
    alpha, beta, gamma = q.qa, q.qb / 2, q.qc
    if beta == 0:
        raise DomainError("mixed coefficient vanishes; shear the form first")
    return Algebra(2, 0, 0, beta, gamma / beta, alpha / 2)


def shear(k) -> LinMap:
    return LinMap(1, k, 0, 1)


def common_shear(*forms: BinaryQuadratic) -> int:
    """Smallest k >= 0 such that every q(x + k y, y) has nonzero qb and qc."""
    for k in count():
        sheared = [q.compose(shear(k).rows) for q in forms]
        if all(s.qb != 0 and s.qc != 0 for s in sheared):
            return k
    raise AssertionError("unreachable")


def sl2_equivalent_forms(q1: BinaryQuadratic, q2: BinaryQuadratic) -> bool:
    d1, d2 = form_discriminant(q1), form_discriminant(q2)
    _check_delta(d1)
    _check_delta(d2)
    if d1 != d2:
        return False
    return form_class(q1) == form_class(q2)


def gauss_compose(q1: BinaryQuadratic, q2: BinaryQuadratic, k: int | None = None) -> FormClass:
    delta = form_discriminant(q1)
    _check_delta(delta)
    if form_discriminant(q2) != delta:
        raise DomainError("forms have different discriminants")
    if k is None:
        k = common_shear(q1, q2)
    s1, s2 = q1.compose(shear(k).rows), q2.compose(shear(k).rows)
    if not all(s.qb and s.qc for s in (s1, s2)):
        raise DomainError(f"shear {k} leaves a vanishing coefficient")
    bb = (s1.qb / 2) * (s2.qb / 2)
    gg = s1.qc * s2.qc
    composed = BinaryQuadratic((bb * bb - delta / 4) / gg, 2 * bb, gg)
    return FormClass(delta, NormClass(delta, gg), composed)


def slxsl_act(g1: LinMap, g2: LinMap, m: Algebra) -> Algebra:
    """((g1, g2) m)(u, v) = g1 m(g2^-1 u, g2^-1 v)."""
    h = g2.inverse()

    def prod(u, v):
        return g1(multiply(m, h(u), h(v)))

    e1, e2 = (1, 0), (0, 1)
    return Algebra.from_products(prod(e1, e1), prod(e2, e2), prod(e1, e2))


def _det_disc(m: Algebra) -> Fraction:
    return form_discriminant(det_form(m))


def compose_algebra_classes(m1: Algebra, m2: Algebra, k: int | None = None) -> Algebra:
    delta = _det_disc(m1)
    if delta == 0:
        raise DomainError("degenerate determinant form")
    _check_delta(delta)
    if _det_disc(m2) != delta:
        raise DomainError("algebras have different Disc(D)")
    q1, q2 = det_form(m1), det_form(m2)
    if k is None:
        k = common_shear(q1, q2)
    # D of g.m is D o g^-1, so acting by shear(k)^-1 composes D with the shear
    g = shear(k).inverse()
    n1, n2 = gl_act(g, m1), gl_act(g, m2)
    a1, a2 = quadratic_to_algebra(det_form(n1)), quadratic_to_algebra(det_form(n2))
    if not (a1.e and a2.e):
        raise DomainError(f"shear {k} leaves a vanishing coefficient")
    dd = a1.d * a2.d
    return Algebra(
        a1.a * a2.a / 2,
        a1.b * a2.b,
        a1.c * a2.c,
        dd,
        a1.e * a2.e,
        (dd * dd - delta / 4) / (2 * a1.e * a1.d * a2.e * a2.d),
    )


def algebra_class(m: Algebra) -> FormClass:
    return form_class(det_form(m))


def slxsl_equivalent(m1: Algebra, m2: Algebra) -> bool:
    d1, d2 = _det_disc(m1), _det_disc(m2)
    if d1 == 0 or d2 == 0:
        raise UnsupportedError("Disc(D) = 0")
    return sl2_equivalent_forms(det_form(m1), det_form(m2))
