from fractions import Fraction

import pytest
from hypothesis import given

from comalg.algebra import (
    SPLIT,
    ZERO,
    Algebra,
    Covector,
    LinMap,
    associator,
    associator_vanishes,
    decompose,
    det_form,
    exceptional_from_cubic,
    gl_act,
    idempotents,
    k_alpha,
    multiply,
    second_det_form,
    trace_form,
)
from comalg.construct import from_cubic_exceptional, table1_row1, table2, table3_row2
from comalg.cubics import BinaryCubic, BinaryQuadratic
from comalg.errors import DomainError
from comalg.invariants import fundamental_cubic

from strategies import algebras, linmaps, rat_algebras, rats

E1, E2 = (1, 0), (0, 1)


@pytest.mark.parametrize("u, v, w", [(E1, E1, (1, 0)), (E1, E2, (0, 0)), ((1, 1), (1, 1), (1, 1))])
def test_multiply_split(u, v, w):
    assert multiply(SPLIT, u, v) == w


@given(rat_algebras, rats, rats, rats, rats, rats)
def test_multiply_symmetric_bilinear(m, x1, y1, x2, y2, k):
    u, v = (x1, y1), (x2, y2)
    assert multiply(m, u, v) == multiply(m, v, u)
    ku = (k * x1, k * y1)
    assert multiply(m, ku, v) == tuple(k * z for z in multiply(m, u, v))
    s = (x1 + x2, y1 + y2)
    lhs = multiply(m, s, s)
    rhs = [p + 2 * q + r for p, q, r in zip(multiply(m, u, u), multiply(m, u, v), multiply(m, v, v))]
    assert list(lhs) == rhs


def test_trace_form_examples():
    assert trace_form(SPLIT) == Covector(1, 1)
    assert trace_form(from_cubic_exceptional(-7, -6)) == Covector(0, 0)
    assert trace_form(ZERO) == Covector(0, 0)


def test_det_form_examples():
    assert det_form(SPLIT) == BinaryQuadratic(0, 1, 0)
    assert det_form(ZERO) == BinaryQuadratic(0, 0, 0)
    assert det_form(table2(1)).discriminant() == 1


def test_second_det_form_examples():
    assert second_det_form(SPLIT) == BinaryQuadratic(0, -1, 0)
    assert second_det_form(ZERO) == BinaryQuadratic(0, 0, 0)


@given(algebras)
def test_second_det_form_equals_det_form_when_trace_free(m):
    _, cubic_part = decompose(m)
    assert second_det_form(cubic_part) == det_form(cubic_part)


def test_gl_act_identity_and_scalar():
    m = Algebra(1, 2, 3, 4, 5, 6)
    assert gl_act(LinMap.identity(), m) == m
    assert gl_act(LinMap.scalar(2), m) == m.scaled(Fraction(1, 2))


def test_gl_act_singular():
    with pytest.raises(DomainError):
        gl_act(LinMap(1, 2, 2, 4), SPLIT)


@given(rat_algebras, linmaps, linmaps)
def test_gl_act_is_left_action(m, g, h):
    assert gl_act(g @ h, m) == gl_act(g, gl_act(h, m))
    assert gl_act(g.inverse(), gl_act(g, m)) == m


@given(rat_algebras, linmaps, rats, rats, rats, rats)
def test_gl_act_transports_products(m, g, x1, y1, x2, y2):
    # (g.m)(g u, g v) = g m(u, v)
    u, v = (x1, y1), (x2, y2)
    assert multiply(gl_act(g, m), g(u), g(v)) == g(multiply(m, u, v))


def test_associator_examples():
    for u in (E1, E2):
        for v in (E1, E2):
            for w in (E1, E2):
                assert associator(SPLIT, u, v, w) == (0, 0)
                assert associator(ZERO, u, v, w) == (0, 0)
    m = table1_row1(0)
    assert associator(m, E1, E2, E2) == (Fraction(-1, 4), 0)
    assert not associator_vanishes(m)


@given(algebras, linmaps)
def test_associativity_is_basis_independent(m, g):
    assert associator_vanishes(m) == associator_vanishes(gl_act(g, m))


def test_decompose_examples():
    exc = from_cubic_exceptional(-7, -6)
    assert decompose(exc) == (ZERO, exc)
    k = k_alpha(Covector(Fraction(1, 2), 0))
    assert k == Algebra(1, 0, 0, 0, 0, Fraction(1, 2))
    assert decompose(k) == (k, ZERO)


@given(rat_algebras)
def test_decompose_properties(m):
    mprime, rest = decompose(m)
    assert mprime + rest == m
    assert trace_form(rest) == Covector(0, 0)
    assert trace_form(mprime) == trace_form(m)
    assert fundamental_cubic(rest) == fundamental_cubic(m)


def test_exceptional_from_cubic_examples():
    third = Fraction(1, 3)
    assert exceptional_from_cubic(BinaryCubic(0, 1, -1, 0)) == Algebra(third, 0, 0, third, -third, -third)
    assert exceptional_from_cubic(BinaryCubic(0, 0, 0, 1)) == Algebra(0, 0, 1, 0, 0, 0)
    with pytest.raises(DomainError):
        exceptional_from_cubic(BinaryCubic(0, 0, 0, 0))


@given(rats, rats, rats, rats)
def test_exceptional_from_cubic_round_trip(a, b, c, d):
    q = BinaryCubic(a, b, c, d, weight=-1)
    if q.is_zero():
        return
    m = exceptional_from_cubic(q)
    assert fundamental_cubic(m) == q
    assert trace_form(m) == Covector(0, 0)


def test_idempotents_examples():
    assert set(idempotents(SPLIT)) == {(1, 0), (0, 1), (1, 1)}
    assert idempotents(table3_row2()) == []
    assert set(idempotents(table1_row1(0))) == {(1, 0), (0, 1)}


@given(algebras)
def test_idempotents_are_idempotent(m):
    if fundamental_cubic(m).is_zero():
        return
    for v in idempotents(m):
        assert multiply(m, v, v) == v
