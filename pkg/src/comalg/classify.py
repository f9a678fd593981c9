"""Strata, GL and SL classification, idemvalues, automorphisms, associativity, division."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Optional, Union

from .algebra import Algebra, LinMap, associator_vanishes, gl_act, multiply, trace_form
from .arith import (
    QuadraticNumber,
    SquareClass,
    as_rational,
    is_square,
    sqrt_in_field,
    square_class,
)
from .cubics import (
    SplittingDescriptor,
    divide_form,
    projective_roots,
    repeated_root,
    same_splitting_heuristic,
    splitting_descriptor,
)
from .errors import ConsistencyError, NotGenericError, UnsupportedError
from .invariants import (
    ModuliPoint,
    disc_d_expanded,
    disc_q_expanded,
    fundamental_cubic,
    inv_expanded,
    moduli,
    p2_tilde_expanded,
    p3_tilde_expanded,
)

ASSOCIATIVE_POINT = ModuliPoint(Fraction(16), Fraction(-12))


class Stratum(enum.Enum):
    GENERIC = "Generic"
    STABLE_RANK2 = "StableRank2"
    STABLE_RANK1 = "StableRank1"
    NON_STABLE = "NonStable"


class Equivalence(enum.Enum):
    YES = "yes"
    NO = "no"
    HEURISTIC_YES = "heuristic-yes"
    YES_UP_TO_Z2 = "yes-up-to-z2"


def stratum(m: Algebra) -> Stratum:
    if disc_q_expanded(m) != 0:
        return Stratum.GENERIC
    if p2_tilde_expanded(m) != 0:
        return Stratum.STABLE_RANK2
    if p3_tilde_expanded(m) != 0:
        return Stratum.STABLE_RANK1
    return Stratum.NON_STABLE


# GL descriptors


@dataclass(frozen=True)
class GenericOffCardano:
    tag: ClassVar[str] = "GenericOffCardano"
    p3: Fraction
    p2: Fraction


@dataclass(frozen=True)
class GenericCardano:
    tag: ClassVar[str] = "GenericCardano"
    p3: Fraction
    p2: Fraction
    ext: SquareClass


@dataclass(frozen=True)
class GenericExceptional:
    tag: ClassVar[str] = "GenericExceptional"
    split: SplittingDescriptor

    @property
    def heuristic(self) -> bool:
        return self.split.degree in (3, 6)


@dataclass(frozen=True)
class StableRank2:
    tag: ClassVar[str] = "StableRank2"
    nu: Fraction


@dataclass(frozen=True)
class StableRank2Degenerate:
    tag: ClassVar[str] = "StableRank2Degenerate"


@dataclass(frozen=True)
class StableRank1:
    tag: ClassVar[str] = "StableRank1"
    lambda_class: SquareClass


@dataclass(frozen=True)
class NonStable:
    tag: ClassVar[str] = "NonStable"
    row: int
    nu: Optional[Fraction] = None
    delta: Optional[int] = None


@dataclass(frozen=True)
class Zero:
    tag: ClassVar[str] = "Zero"


ClassDescriptor = Union[
    GenericOffCardano,
    GenericCardano,
    GenericExceptional,
    StableRank2,
    StableRank2Degenerate,
    StableRank1,
    NonStable,
    Zero,
]


def _ratio(w, v):
    # w = lam * v for parallel vectors
    lam = w[0] / v[0] if v[0] else w[1] / v[1]
    if (w[0] - lam * v[0], w[1] - lam * v[1]) != (0, 0):
        raise ConsistencyError(f"{w} is not parallel to {v}")
    return lam


def _classify_nonstable(m: Algebra) -> ClassDescriptor:
    q = fundamental_cubic(m)
    if q.is_zero():
        return Zero() if m.is_zero() else NonStable(row=4)
    root, mult = repeated_root(q)
    if mult == 3:
        return NonStable(row=3, delta=0 if trace_form(m).is_zero() else 1)
    (simple,) = [r for r in projective_roots(q) if r != root]
    c = _ratio(multiply(m, simple, simple), simple)
    if c == 0:
        return NonStable(row=2)
    v0 = (simple[0] / c, simple[1] / c)
    nu = _ratio(multiply(m, v0, root), root)
    return NonStable(row=1, nu=nu)


def classify_gl(m: Algebra) -> ClassDescriptor:
    s = stratum(m)
    if s is Stratum.GENERIC:
        nu = moduli(m)
        if not nu.on_cardano():
            return GenericOffCardano(nu.p3, nu.p2)
        if not nu.is_origin():
            return GenericCardano(nu.p3, nu.p2, square_class(disc_q_expanded(m)))
        return GenericExceptional(splitting_descriptor(fundamental_cubic(m)))
    if s is Stratum.STABLE_RANK2:
        r = p3_tilde_expanded(m) / p2_tilde_expanded(m)
        if r == 1:
            return StableRank2Degenerate()
        return StableRank2((r + 2) / (2 * r - 2))
    if s is Stratum.STABLE_RANK1:
        return StableRank1(square_class(p3_tilde_expanded(m) / 27))
    return _classify_nonstable(m)


def equivalent_gl(m1: Algebra, m2: Algebra) -> Equivalence:
    d1, d2 = classify_gl(m1), classify_gl(m2)
    if d1 != d2:
        return Equivalence.NO
    if isinstance(d1, GenericExceptional) and d1.heuristic:
        same = same_splitting_heuristic(d1.split.defining_cubic, d2.split.defining_cubic)
        return Equivalence.HEURISTIC_YES if same else Equivalence.NO
    return Equivalence.YES


# fundamental triples


@dataclass(frozen=True)
class FundamentalTriple:
    f: tuple
    gamma: tuple
    delta: tuple
    field: SquareClass


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _idempotent_directions(m: Algebra):
    """Three root directions of Q_m over Q or Q(sqrt a), and the field class."""
    q = fundamental_cubic(m)
    roots = projective_roots(q)
    if len(roots) == 3:
        return roots, SquareClass(1)
    if len(roots) != 1:
        raise UnsupportedError("the fundamental cubic is irreducible over Q")
    x0, y0 = roots[0]
    al, be, ga = divide_form(q.coeffs, (y0, -x0))
    # al t^2 + be t + ga = 0 for directions (t, 1); al != 0 since (1, 0) is not a root here
    sq = sqrt_in_field(be * be - 4 * al * ga)
    t1 = (-be + sq) / (2 * al)
    t2 = (-be - sq) / (2 * al)
    return [roots[0], (t1, 1), (t2, 1)], square_class(be * be - 4 * al * ga)


def _order_key(z):
    if isinstance(z, QuadraticNumber) and not z.is_rational():
        return (1, z.trace(), z.norm(), -z.s)
    return (0, as_rational(z), 0, 0)


def _normalize(z):
    if isinstance(z, QuadraticNumber) and z.is_rational():
        return z.r
    return z


def fundamental_triple(m: Algebra) -> FundamentalTriple:
    if disc_q_expanded(m) == 0:
        raise NotGenericError("fundamental triples exist only for generic algebras")
    v, field = _idempotent_directions(m)
    c = [_ratio(multiply(m, vi, vi), vi) for vi in v]
    base = _det(v[0], v[1])
    alpha = (_det(v[2], v[1]) / base, _det(v[0], v[2]) / base, -1)
    total = sum(a * ci for a, ci in zip(alpha, c))
    t = -1 / total
    f = [(t * a * vi[0], t * a * vi[1]) for a, vi in zip(alpha, v)]
    gamma = [t * a * ci for a, ci in zip(alpha, c)]
    delta = [3 * g + 1 for g in gamma]
    order = sorted(range(3), key=lambda i: _order_key(delta[i]))
    f = tuple(tuple(_normalize(x) for x in f[i]) for i in order)
    gamma = tuple(_normalize(gamma[i]) for i in order)
    delta = tuple(_normalize(delta[i]) for i in order)
    triple = FundamentalTriple(f, gamma, delta, field)
    _check_triple(m, triple)
    return triple


def _check_triple(m: Algebra, tr: FundamentalTriple) -> None:
    f, g = tr.f, tr.gamma
    if any(sum(fi[k] for fi in f) != 0 for k in range(2)):
        raise ConsistencyError("f1 + f2 + f3 != 0")
    for fi, gi in zip(f, g):
        prod = multiply(m, fi, fi)
        if (prod[0] - gi * fi[0], prod[1] - gi * fi[1]) != (0, 0):
            raise ConsistencyError("m(f_i, f_i) != gamma_i f_i")
    if sum(g) != -1:
        raise ConsistencyError("gammas do not sum to -1")
    if any(_det(f[i], f[j]) == 0 for i, j in ((0, 1), (1, 2), (0, 2))):
        raise ConsistencyError("triple is not pairwise independent")


def idemvalue_moduli(m: Algebra) -> ModuliPoint:
    d1, d2, d3 = fundamental_triple(m).delta
    return ModuliPoint(as_rational(d1 * d2 * d3), as_rational(d1 * d2 + d2 * d3 + d3 * d1))


# automorphisms


class Group(enum.Enum):
    TRIVIAL = "Trivial"
    Z2 = "Z2"
    Z3 = "Z3"
    S3 = "S3"


@dataclass(frozen=True)
class AutGroup:
    split: Group
    rational: Group


def _matrix_from_images(src, dst) -> LinMap:
    """The linear map sending src[0] -> dst[0], src[1] -> dst[1]; must be rational."""
    (p, r), (q, s) = src
    det = p * s - q * r
    inv = ((s / det, -q / det), (-r / det, p / det))
    (x1, y1), (x2, y2) = dst
    entries = (
        x1 * inv[0][0] + x2 * inv[1][0],
        x1 * inv[0][1] + x2 * inv[1][1],
        y1 * inv[0][0] + y2 * inv[1][0],
        y1 * inv[0][1] + y2 * inv[1][1],
    )
    return LinMap(*(as_rational(z) for z in entries))


def cardano_swap(m: Algebra) -> LinMap:
    """The involution exchanging the two idempotents with equal idemvalue."""
    tr = fundamental_triple(m)
    d = tr.delta
    pairs = [(i, j) for i, j in ((0, 1), (1, 2), (0, 2)) if d[i] == d[j]]
    if len(pairs) != 1:
        raise UnsupportedError("not a generic Cardano algebra away from the origin")
    i, j = pairs[0]
    h = _matrix_from_images((tr.f[i], tr.f[j]), (tr.f[j], tr.f[i]))
    if gl_act(h, m) != m:
        raise ConsistencyError("swap is not an automorphism")
    return h


_RATIONAL_AT_ORIGIN = {1: Group.S3, 2: Group.Z2, 3: Group.Z3, 6: Group.TRIVIAL}


def automorphism_group(m: Algebra) -> AutGroup:
    if disc_q_expanded(m) == 0:
        raise UnsupportedError("automorphism groups are tabulated only for generic algebras")
    nu = moduli(m)
    if inv_expanded(m) != 0:
        return AutGroup(Group.TRIVIAL, Group.TRIVIAL)
    if not nu.is_origin():
        # the swap of the two equal-idemvalue idempotents is always rational
        cardano_swap(m)
        return AutGroup(Group.Z2, Group.Z2)
    deg = splitting_descriptor(fundamental_cubic(m)).degree
    return AutGroup(Group.S3, _RATIONAL_AT_ORIGIN[deg])


# associativity and division


def is_associative(m: Algebra) -> bool:
    assoc = associator_vanishes(m)
    if disc_q_expanded(m) != 0 and (moduli(m) == ASSOCIATIVE_POINT) != assoc:
        raise ConsistencyError(f"associator and moduli disagree on {m}")
    return assoc


def is_division_direct(m: Algebra) -> bool:
    """Division iff the determinant form is anisotropic iff its discriminant is a non-square."""
    return not is_square(disc_d_expanded(m))


def division_criterion(m: Algebra) -> bool:
    if disc_q_expanded(m) == 0:
        raise NotGenericError("the division criterion is stated for generic algebras")
    nu = moduli(m)
    p3, p2 = nu.p3, nu.p2
    if not nu.on_cardano():
        return not is_square(-3 * (p2 - p3 + 1) * (-27 * p3**2 - 4 * p2**3))
    if not nu.is_origin():
        a = square_class(disc_q_expanded(m)).rep
        return not is_square(-3 * a * (p2 - p3 + 1))
    split = splitting_descriptor(fundamental_cubic(m))
    # -3 is a square in the splitting field iff it contains Q(sqrt -3)
    return not (split.degree in (2, 6) and split.disc_class.rep == -3)


def is_division(m: Algebra) -> bool:
    crit = division_criterion(m)
    if crit != is_division_direct(m):
        raise ConsistencyError(f"division criterion and direct test disagree on {m}")
    return crit


# SL classification


@dataclass(frozen=True)
class OffCardano:
    tag: ClassVar[str] = "OffCardano"
    p3: Fraction
    p2: Fraction
    inv_over_disc: Fraction


@dataclass(frozen=True)
class CardanoNonzero:
    tag: ClassVar[str] = "CardanoNonzero"
    p3: Fraction
    p2: Fraction
    disc_q: Fraction


@dataclass(frozen=True)
class ExceptionalReducible:
    tag: ClassVar[str] = "ExceptionalReducible"
    split: SplittingDescriptor
    disc_q: Fraction


@dataclass(frozen=True)
class ExceptionalIrreducible:
    tag: ClassVar[str] = "ExceptionalIrreducible"
    split: SplittingDescriptor
    disc_q: Fraction
    up_to_z2: bool = True


SLDescriptor = Union[OffCardano, CardanoNonzero, ExceptionalReducible, ExceptionalIrreducible]


def classify_sl(m: Algebra) -> SLDescriptor:
    disc = disc_q_expanded(m)
    if disc == 0:
        raise NotGenericError("SL classification covers generic algebras only")
    nu = moduli(m)
    if not nu.on_cardano():
        return OffCardano(nu.p3, nu.p2, inv_expanded(m) / disc)
    if not nu.is_origin():
        return CardanoNonzero(nu.p3, nu.p2, disc)
    split = splitting_descriptor(fundamental_cubic(m))
    if split.degree in (1, 2):
        return ExceptionalReducible(split, disc)
    return ExceptionalIrreducible(split, disc)


def equivalent_sl(m1: Algebra, m2: Algebra) -> Equivalence:
    if disc_q_expanded(m1) == 0 or disc_q_expanded(m2) == 0:
        raise UnsupportedError("SL equivalence is decided for generic algebras only")
    d1, d2 = classify_sl(m1), classify_sl(m2)
    if d1 != d2:
        return Equivalence.NO
    if isinstance(d1, ExceptionalIrreducible):
        if not same_splitting_heuristic(d1.split.defining_cubic, d2.split.defining_cubic):
            return Equivalence.NO
        return Equivalence.YES_UP_TO_Z2
    return Equivalence.YES
