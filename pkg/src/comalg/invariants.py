"""Twisted polynomial invariants of a two-dimensional commutative algebra.

Every invariant has two independent routes: a covariant of the fundamental
cubic evaluated at the trace vector, and an expanded polynomial in the
structure constants. Both are homogeneous, so they are evaluated on the
integral multiple L*m and rescaled by L^degree, which keeps the hot loop in
plain integers.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra, Covector, det_form, trace_form
from .cubics import (
    BinaryCubic,
    BinaryQuadratic,
    cubic_discriminant_value,
    form_eval,
    g_covariant_coeffs,
    hessian_coeffs,
)
from .errors import ConsistencyError, NotGenericError

# when set, every public invariant also runs the covariant route and compares
CHECK_ROUTES = os.environ.get("COMALG_CHECK_ROUTES", "") not in ("", "0")

EISENSTEIN_CONSTANT = 2**4 * 3**6
assert EISENSTEIN_CONSTANT == (4 * 27) ** 2


@dataclass(frozen=True)
class TwistedScalar:
    value: Fraction
    weight: int

    def transformed(self, det) -> TwistedScalar:
        return TwistedScalar(self.value * Fraction(det) ** (-self.weight), self.weight)


@dataclass(frozen=True)
class ModuliPoint:
    p3: Fraction
    p2: Fraction

    def on_cardano(self) -> bool:
        return 27 * self.p3**2 + 4 * self.p2**3 == 0

    def is_origin(self) -> bool:
        return self.p3 == 0 and self.p2 == 0


@dataclass(frozen=True)
class InvariantBundle:
    q: BinaryCubic
    t: Covector
    disc_q: TwistedScalar
    p2t: TwistedScalar
    p3t: TwistedScalar
    disc_d: TwistedScalar
    inv: TwistedScalar


def _integral(m: Algebra):
    den = math.lcm(*(x.denominator for x in m.constants))
    return tuple(x.numerator * (den // x.denominator) for x in m.constants), den


def _homogeneous(poly, degree):
    def wrapped(m: Algebra) -> Fraction:
        ints, den = _integral(m)
        return Fraction(poly(*ints), den**degree)

    wrapped.__name__ = poly.__name__
    wrapped.__doc__ = poly.__doc__
    return wrapped


# expanded structure-constant polynomials


def _disc_q_poly(a, b, c, d, e, f):
    return (
        -36 * b * c * f * d + 72 * b * c * f * e + 18 * b * c * a * d - 36 * b * c * a * e
        + 4 * f**2 * d**2 - 16 * f**2 * d * e + 16 * f**2 * e**2 - 4 * f * a * d**2
        + 16 * f * a * d * e - 16 * f * a * e**2 + a**2 * d**2 - 4 * a**2 * d * e
        + 4 * a**2 * e**2 - 4 * b * d**3 + 24 * b * d**2 * e - 48 * b * d * e**2
        + 32 * b * e**3 + 32 * c * f**3 - 48 * c * f**2 * a + 24 * c * f * a**2
        - 4 * c * a**3 - 27 * b**2 * c**2
    )


def _p3t_poly(a, b, c, d, e, f):
    return (
        -32 * f * a * d * e + 24 * b * d * e**2 + 24 * b * d**2 * e + 24 * c * f * a**2
        + 24 * c * f**2 * a + 8 * a**2 * d * e - 40 * f * a * e**2 + 8 * f * a * d**2
        - 40 * f**2 * d * e - 8 * f**2 * d**2 - 32 * f**2 * e**2 + 16 * a**2 * d**2
        - 8 * a**2 * e**2 + 8 * b * d**3 + 8 * b * e**3 + 8 * c * f**3 + 8 * c * a**3
    )


def _p2t_poly(a, b, c, d, e, f):
    return (
        36 * b * c * f * d + 36 * b * c * f * e + 36 * b * c * a * d + 36 * b * c * a * e
        + 60 * f * a * d * e - 36 * b * d * e**2 - 36 * c * f**2 * a + 12 * a**2 * d * e
        - 24 * f * a * e**2 + 12 * f * a * d**2 - 24 * f**2 * d * e - 12 * f**2 * d**2
        - 48 * f**2 * e**2 - 12 * a**2 * d**2 - 12 * a**2 * e**2 + 12 * b * d**3
        - 24 * b * e**3 - 24 * c * f**3 + 12 * c * a**3
    )


def _inv_poly(a, b, c, d, e, f):
    return (
        -2 * a**3 * c * d * f - 4 * a**3 * c * e * f - 6 * a**2 * b * c**2 * f
        + 6 * b**2 * c * d * e**2 - 6 * a**2 * d * e**2 * f + 4 * b * d**3 * e * f
        - 12 * b * d * e**3 * f + 12 * a * c * e * f**3 - 8 * d * e**2 * f**3
        + 6 * a**2 * b * c * e**2 + 2 * a * c * d * f**3 + 4 * a**2 * e**3 * f
        - 2 * a * b * d**4 - 4 * a * b * e**4 + 2 * a * d**3 * f**2 + 8 * a * e**3 * f**2
        + 2 * b**2 * c * d**3 + 2 * b**2 * c * e**3 - 2 * b * c**2 * f**3
        - 8 * b * e**4 * f + 4 * c * d * f**4 + 8 * c * e * f**4 - 4 * d**2 * e * f**3
        - 2 * a * b * d * e**3 + 6 * a * b * d**2 * e**2 - 2 * a**2 * d**3 * f
        - 2 * a**3 * d * e**2 + 2 * a**4 * c * d - 2 * a**3 * b * c**2
        + 2 * a**3 * d**2 * e + 6 * b**2 * c * d**2 * e + 2 * a * b * d**3 * e
        - 6 * b * c * d**2 * f**2 + 6 * a * d**2 * e * f**2 - 6 * a * b * c**2 * f**2
        - 6 * b * c * d * e * f**2 + 6 * a * b * c * e**2 * f - 6 * a * b * c * d**2 * f
        + 6 * a**2 * b * c * d * e - 6 * a**2 * c * d * f**2
    )


def _disc_d_poly(a, b, c, d, e, f):
    return (
        a**2 * d**2 - 2 * b * c * a * d + b**2 * c**2 - 4 * f * a * d * e
        + 4 * c * f**2 * a + 4 * b * d * e**2 - 4 * b * c * f * e
    )


# covariant route


def _cubic_coeffs(a, b, c, d, e, f):
    return (-b, a - 2 * f, 2 * e - d, c)


def _trace_vector(a, b, c, d, e, f):
    return (e + d, -(a + f))


def _disc_q_cov(*m):
    return cubic_discriminant_value(*_cubic_coeffs(*m))


def _p3t_cov(*m):
    return -8 * form_eval(_cubic_coeffs(*m), *_trace_vector(*m))


def _p2t_cov(*m):
    return form_eval(hessian_coeffs(*_cubic_coeffs(*m)), *_trace_vector(*m))


def _g_at_trace(*m):
    # 54 * Inv
    return form_eval(g_covariant_coeffs(*_cubic_coeffs(*m)), *_trace_vector(*m))


disc_q_expanded = _homogeneous(_disc_q_poly, 4)
p3_tilde_expanded = _homogeneous(_p3t_poly, 4)
p2_tilde_expanded = _homogeneous(_p2t_poly, 4)
inv_expanded = _homogeneous(_inv_poly, 6)
disc_d_expanded = _homogeneous(_disc_d_poly, 4)

disc_q_covariant = _homogeneous(_disc_q_cov, 4)
p3_tilde_covariant = _homogeneous(_p3t_cov, 4)
p2_tilde_covariant = _homogeneous(_p2t_cov, 4)


def inv_covariant(m: Algebra) -> Fraction:
    ints, den = _integral(m)
    return Fraction(_g_at_trace(*ints), 54 * den**6)


def disc_d_from_form(m: Algebra) -> Fraction:
    return det_form(m).discriminant()


DUAL_ROUTES = {
    "disc_q": (disc_q_expanded, disc_q_covariant),
    "p3_tilde": (p3_tilde_expanded, p3_tilde_covariant),
    "p2_tilde": (p2_tilde_expanded, p2_tilde_covariant),
    "inv": (inv_expanded, inv_covariant),
    "disc_d": (disc_d_expanded, disc_d_from_form),
}


def dual_path_mismatches(m: Algebra) -> list[str]:
    return [name for name, (ex, cov) in DUAL_ROUTES.items() if ex(m) != cov(m)]


def check_dual_paths(m: Algebra) -> None:
    bad = dual_path_mismatches(m)
    if bad:
        raise ConsistencyError(f"routes disagree for {bad} on {m}")


# public API


def _value(name: str, m: Algebra) -> Fraction:
    expanded, covariant = DUAL_ROUTES[name]
    v = expanded(m)
    if CHECK_ROUTES and covariant(m) != v:
        raise ConsistencyError(f"{name}: routes disagree on {m}")
    return v


def fundamental_cubic(m: Algebra) -> BinaryCubic:
    return BinaryCubic(*_cubic_coeffs(*m.constants), weight=-1)


def eval_at_trace(P, t: Covector) -> TwistedScalar:
    x, y = t.t2, -t.t1
    if isinstance(P, BinaryQuadratic):
        return TwistedScalar(Fraction(P(x, y)), 2)
    return TwistedScalar(Fraction(P(x, y)), P.weight + 3)


def p3_tilde(m: Algebra) -> TwistedScalar:
    return TwistedScalar(_value("p3_tilde", m), 2)


def p2_tilde(m: Algebra) -> TwistedScalar:
    return TwistedScalar(_value("p2_tilde", m), 2)


def inv_m(m: Algebra) -> TwistedScalar:
    return TwistedScalar(_value("inv", m), 3)


def disc_q(m: Algebra) -> TwistedScalar:
    return TwistedScalar(_value("disc_q", m), 2)


def disc_d(m: Algebra) -> TwistedScalar:
    return TwistedScalar(_value("disc_d", m), 2)


def bundle(m: Algebra) -> InvariantBundle:
    return InvariantBundle(
        fundamental_cubic(m),
        trace_form(m),
        disc_q(m),
        p2_tilde(m),
        p3_tilde(m),
        disc_d(m),
        inv_m(m),
    )


def is_generic(m: Algebra) -> bool:
    return disc_q_expanded(m) != 0


def moduli(m: Algebra) -> ModuliPoint:
    disc = disc_q_expanded(m)
    if disc == 0:
        raise NotGenericError("Disc(Q_m) = 0; use classify.classify_gl for the degenerate strata")
    return ModuliPoint(p3_tilde_expanded(m) / disc, p2_tilde_expanded(m) / disc)


def check_eisenstein(m: Algebra) -> bool:
    """27 Disc(Q) p3~^2 + 4 p2~^3 = -11664 Inv^2, using the expanded Inv."""
    disc, p3, p2, inv = disc_q_expanded(m), p3_tilde_expanded(m), p2_tilde_expanded(m), inv_expanded(m)
    return 27 * disc * p3 * p3 + 4 * p2**3 == -EISENSTEIN_CONSTANT * inv * inv


def check_discd_identity(m: Algebra) -> bool:
    """27 Disc(D) = p3~ - p2~ - Disc(Q)."""
    return 27 * disc_d_expanded(m) == p3_tilde_expanded(m) - p2_tilde_expanded(m) - disc_q_expanded(m)
