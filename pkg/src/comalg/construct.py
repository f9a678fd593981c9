"""Algebras realizing prescribed moduli, Cardano points, cubics and Eisenstein points.

Every constructor recomputes the invariants of its output and raises
ConsistencyError if the prescription is not met exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra, LinMap, gl_act, transport
from .arith import SquareClass, as_rational, is_square, rat, sqrt_in_field, sqrt_rat, square_class
from .errors import ConsistencyError, DomainError
from .invariants import (
    EISENSTEIN_CONSTANT,
    ModuliPoint,
    disc_q_expanded,
    inv_expanded,
    moduli,
    p2_tilde_expanded,
    p3_tilde_expanded,
)


@dataclass(frozen=True)
class EisensteinPoint:
    A: Fraction
    B: Fraction
    D: Fraction
    C: Fraction

    def __post_init__(self):
        for k in "ABDC":
            object.__setattr__(self, k, rat(getattr(self, k)))

    def on_surface(self) -> bool:
        return 27 * self.D * self.A**2 + 4 * self.B**3 + EISENSTEIN_CONSTANT * self.C**2 == 0

    def scaled(self, lam) -> EisensteinPoint:
        """The point of the algebra transformed by lam * identity."""
        lam = rat(lam)
        return EisensteinPoint(self.A / lam**4, self.B / lam**4, self.D / lam**4, self.C / lam**6)


def eisenstein_point(m: Algebra) -> EisensteinPoint:
    return EisensteinPoint(p3_tilde_expanded(m), p2_tilde_expanded(m), disc_q_expanded(m), inv_expanded(m))


def _expect_moduli(m: Algebra, p3, p2) -> Algebra:
    if moduli(m) != ModuliPoint(p3, p2):
        raise ConsistencyError(f"constructed algebra has moduli {moduli(m)}, wanted ({p3}, {p2})")
    return m


def from_moduli_generic(p3, p2) -> Algebra:
    p3, p2 = rat(p3), rat(p2)
    d2 = -27 * p3**2 - 4 * p2**3
    if d2 == 0:
        raise DomainError(f"({p3}, {p2}) lies on the Cardano curve; use from_moduli_cardano")
    m = Algebra(
        (-4 * p2**3 - 27 * p3**2 - 9 * p2 * p3) / (3 * d2),
        (2 * p2**3 + 27 * p3**2) / (3 * d2),
        9 * p3 / d2,
        2 * p2**2 / d2,
        -2 * p2**2 / d2,
        3 * (-Fraction(2, 9) * p2**3 - Fraction(3, 2) * p3**2 + p2 * p3) / d2,
    )
    return _expect_moduli(m, p3, p2)


def _ext_rep(ext) -> int:
    return ext.rep if isinstance(ext, SquareClass) else SquareClass(int(ext)).rep


def from_moduli_cardano(p3, p2, ext) -> Algebra:
    p3, p2 = rat(p3), rat(p2)
    a = _ext_rep(ext)
    if 27 * p3**2 + 4 * p2**3 != 0:
        raise DomainError(f"({p3}, {p2}) is not on the Cardano curve")
    if p3 == 0 and p2 == 0:
        raise DomainError("the origin is the exceptional point; use from_cubic_exceptional")
    delta = 3 * p3 / (2 * p2)
    m = Algebra(0, Fraction(-1, 6), 0, (2 * delta + 1) / (2 * a), (delta - 1) / (2 * a), 0)
    _expect_moduli(m, p3, p2)
    if square_class(disc_q_expanded(m)).rep != a:
        raise ConsistencyError("Cardano constructor missed the requested extension class")
    return m


def from_cubic_exceptional(d2, d3) -> Algebra:
    """Exceptional algebra whose idempotent directions split like x^3 + d2 x - d3."""
    d2, d3 = rat(d2), rat(d3)
    dd = -27 * d3**2 - 4 * d2**3
    if dd == 0:
        raise DomainError("x^3 + d2 x - d3 has a repeated root")
    m = Algebra(
        -3 * d2 * d3 / dd,
        (27 * d3**2 + 2 * d2**3) / (3 * dd),
        9 * d3 / dd,
        2 * d2**2 / dd,
        -2 * d2**2 / dd,
        3 * d2 * d3 / dd,
    )
    return _expect_moduli(m, 0, 0)


def from_triple_data(d1, d2, d3=None) -> Algebra:
    """Algebra with reduced idemvalues d1, d2, d3 (summing to zero).

    Pass d2 as a (trace, norm) pair and omit d3 for a conjugate pair of
    irrational idemvalues.
    """
    d1 = rat(d1)
    if d3 is None:
        trace, norm = map(rat, d2)
        disc = trace * trace - 4 * norm
        if disc == 0:
            raise DomainError("repeated idemvalues; use from_moduli_cardano")
        root = sqrt_in_field(disc)
        d2, d3 = (trace + root) / 2, (trace - root) / 2
    else:
        d2, d3 = rat(d2), rat(d3)
    if d1 + d2 + d3 != 0:
        raise DomainError("reduced idemvalues must sum to zero")
    if d1 == d2 or d2 == d3 or d1 == d3:
        raise DomainError("repeated idemvalues; use from_moduli_cardano")
    p3 = as_rational(d1 * d2 * d3)
    p2 = as_rational(d1 * d2 + d2 * d3 + d3 * d1)
    f1 = (d1, d2 * d3 - p2 / 3)
    f2 = (d2, d1 * d3 - p2 / 3)
    table = (
        (d1 - 1) / 3,
        0,
        0,
        (d2 - 1) / 3,
        (2 + d2) / 6,
        (2 + d1) / 6,
    )
    m = Algebra(*(as_rational(z) for z in transport(table, (f1, f2))))
    return _expect_moduli(m, p3, p2)


def _rescale_disc(m: Algebra, target) -> Algebra:
    """Transform by diag(1/r, 1) where target / Disc(m) = r^2."""
    ratio = rat(target) / disc_q_expanded(m)
    if not is_square(ratio):
        raise ConsistencyError("discriminant classes do not match")
    return gl_act(LinMap(1 / sqrt_rat(ratio), 0, 0, 1), m)


def from_eisenstein(pt: EisensteinPoint) -> Algebra:
    A, B, D, C = pt.A, pt.B, pt.D, pt.C
    if not pt.on_surface():
        raise DomainError(f"{pt} is not on the Eisenstein surface")
    if A == B == C == D == 0:
        raise DomainError("the origin is not a stable point")
    if D != 0:
        p3, p2 = A / D, B / D
        if C != 0:
            m0 = from_moduli_generic(p3, p2)
            ratio = inv_expanded(m0) / disc_q_expanded(m0)
            # Inv/Disc has weight one, so diag(delta, 1) divides it by delta
            m = gl_act(LinMap(ratio * D / C, 0, 0, 1), m0)
        elif p3 != 0 or p2 != 0:
            m = _rescale_disc(from_moduli_cardano(p3, p2, square_class(D)), D)
        else:
            a = square_class(D).rep
            m = _rescale_disc(from_cubic_exceptional(-a, 0), D)
    elif B != 0:
        s = -9 * C / B  # a - 2f
        u = -A * B / (9 * 72 * C)  # a + f
        f = (u - s) / 3
        m = Algebra(u - f, 0, 0, 2, 1, f)
    else:
        m = Algebra(1, 0, A / 27, 0, 0, Fraction(1, 2))
    got = eisenstein_point(m)
    if got != pt:
        raise ConsistencyError(f"constructed algebra realizes {got}, wanted {pt}")
    return m


# normal forms of the degenerate strata


def table1_row1(nu) -> Algebra:
    """e1^2 = e1, e2^2 = e2, e1 e2 = e1/2 + nu e2 (nu != 1/2)."""
    nu = rat(nu)
    if nu == Fraction(1, 2):
        raise DomainError("nu = 1/2 is excluded")
    return Algebra(1, 0, 0, 1, Fraction(1, 2), nu)


def table1_row2() -> Algebra:
    return Algebra(0, 0, 0, 1, Fraction(1, 2), 1)


def table2(lam) -> Algebra:
    """e1^2 = e1, e2^2 = lam e1, e1 e2 = e2/2 (lam != 0)."""
    lam = rat(lam)
    if lam == 0:
        raise DomainError("lambda must be nonzero")
    return Algebra(1, 0, lam, 0, 0, Fraction(1, 2))


def table3_row1(nu) -> Algebra:
    """e1^2 = e1, e2^2 = 0, e1 e2 = nu e2 (nu != 1/2)."""
    nu = rat(nu)
    if nu == Fraction(1, 2):
        raise DomainError("nu = 1/2 is excluded")
    return Algebra(1, 0, 0, 0, 0, nu)


def table3_row2() -> Algebra:
    return Algebra(0, 0, 0, 0, 1, 0)


def table3_row3(delta: int) -> Algebra:
    """e1^2 = 0, e2^2 = e1 + delta e2, e1 e2 = delta e1 / 2 with delta in {0, 1}."""
    if delta not in (0, 1):
        raise DomainError("delta must be 0 or 1")
    return Algebra(0, 0, 1, delta, Fraction(delta, 2), 0)


def table3_row4() -> Algebra:
    return Algebra(1, 0, 0, 0, 0, Fraction(1, 2))
