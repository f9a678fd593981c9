from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from comalg import gauss
from comalg.algebra import SPLIT, LinMap, det_form
from comalg.arith import NormClass
from comalg.cubics import BinaryQuadratic
from comalg.errors import DomainError, UnsupportedError
from comalg.invariants import disc_d

from strategies import nonzero_rats, rats

DELTAS = (-4, -3, 5, -8)
THREE_FORM = BinaryQuadratic(3, 2, Fraction(2, 3))
SUM_SQ = BinaryQuadratic(1, 0, 1)


@pytest.mark.parametrize("q, delta", [(BinaryQuadratic(0, 1, 0), 1), (SUM_SQ, -4), (THREE_FORM, -4)])
def test_form_discriminant(q, delta):
    assert gauss.form_discriminant(q) == delta


def test_quadratic_to_algebra_examples():
    m = gauss.quadratic_to_algebra(BinaryQuadratic(0, 1, 0))
    assert m.constants == (2, 0, 0, Fraction(1, 2), 0, 0)
    m3 = gauss.quadratic_to_algebra(THREE_FORM)
    assert m3.constants == (2, 0, 0, 1, Fraction(2, 3), Fraction(3, 2))
    with pytest.raises(DomainError):
        gauss.quadratic_to_algebra(SUM_SQ)


@given(rats, nonzero_rats, rats)
def test_det_form_inverts_quadratic_to_algebra(a, b, c):
    q = BinaryQuadratic(a, b, c)
    assert det_form(gauss.quadratic_to_algebra(q)) == q


def test_sl2_equivalent_forms_examples():
    assert gauss.sl2_equivalent_forms(SUM_SQ, SUM_SQ)
    assert not gauss.sl2_equivalent_forms(SUM_SQ, THREE_FORM)
    g = LinMap(2, 3, 1, 2)
    assert gauss.sl2_equivalent_forms(THREE_FORM, THREE_FORM.compose(g.rows))
    with pytest.raises(UnsupportedError):
        gauss.sl2_equivalent_forms(BinaryQuadratic(0, 1, 0), BinaryQuadratic(0, 1, 0))


def test_three_form_squared_is_identity():
    c = gauss.gauss_compose(THREE_FORM, THREE_FORM)
    assert c == gauss.form_class(gauss.identity_form(-4))
    assert c.form is not None
    assert gauss.form_discriminant(c.form) == -4


def test_compose_with_identity():
    ident = gauss.identity_form(-4)
    assert gauss.gauss_compose(THREE_FORM, ident) == gauss.form_class(THREE_FORM)


def _random_form(delta, alpha, beta):
    alpha, beta = Fraction(alpha), Fraction(beta)
    return BinaryQuadratic(alpha, 2 * beta, (4 * beta * beta - delta) / (4 * alpha))


forms_args = st.tuples(st.sampled_from(DELTAS), nonzero_rats, rats, nonzero_rats, rats, nonzero_rats, rats)


@given(forms_args)
def test_group_axioms_on_forms(args):
    delta, a1, b1, a2, b2, a3, b3 = args
    q1, q2, q3 = (_random_form(delta, a, b) for a, b in ((a1, b1), (a2, b2), (a3, b3)))
    c1, c2, c3 = (gauss.form_class(q) for q in (q1, q2, q3))
    ident = gauss.form_class(gauss.identity_form(delta))
    assert gauss.gauss_compose(q1, q2) == c1 * c2
    assert c1 * ident == c1
    inverse = gauss.FormClass(delta, NormClass(delta, 1 / c1.rep_value.rep))
    assert c1 * inverse == ident
    assert (c1 * c2) * c3 == c1 * (c2 * c3)
    composed = gauss.gauss_compose(q1, q2).form
    assert gauss.gauss_compose(composed, q3) == gauss.form_class(q1) * gauss.gauss_compose(q2, q3)


@given(forms_args, st.integers(0, 5))
def test_choice_independence_of_shear(args, extra):
    delta, a1, b1, a2, b2, *_ = args
    q1, q2 = _random_form(delta, a1, b1), _random_form(delta, a2, b2)
    k0 = gauss.common_shear(q1, q2)
    for k in range(k0, k0 + 3 + extra):
        try:
            c = gauss.gauss_compose(q1, q2, k)
        except DomainError:
            continue
        assert c == gauss.gauss_compose(q1, q2)


def _algebra_for(delta, alpha, beta):
    q = _random_form(delta, alpha, beta)
    k = gauss.common_shear(q)
    return gauss.quadratic_to_algebra(q.compose(gauss.shear(k).rows))


@given(forms_args)
def test_compose_algebra_classes(args):
    delta, a1, b1, a2, b2, *_ = args
    m1, m2 = _algebra_for(delta, a1, b1), _algebra_for(delta, a2, b2)
    m12 = gauss.compose_algebra_classes(m1, m2)
    assert disc_d(m12).value == delta
    assert gauss.algebra_class(m12) == gauss.algebra_class(m1) * gauss.algebra_class(m2)


def test_compose_three_form_algebras():
    m = gauss.quadratic_to_algebra(THREE_FORM)
    m2 = gauss.compose_algebra_classes(m, m)
    assert gauss.algebra_class(m2) == gauss.form_class(gauss.identity_form(-4))
    ident = _algebra_for(-4, 1, 1)
    assert gauss.algebra_class(gauss.compose_algebra_classes(m, ident)) == gauss.algebra_class(m)


def _sl(s, t, u):
    return LinMap(1, s, 0, 1) @ LinMap(1, 0, t, 1) @ LinMap(1, u, 0, 1)


@given(st.sampled_from(DELTAS), nonzero_rats, rats, rats, rats, rats, rats, rats, rats)
def test_slxsl_invariance(delta, a, b, s1, t1, u1, s2, t2, u2):
    m = _algebra_for(delta, a, b)
    moved = gauss.slxsl_act(_sl(s1, t1, u1), _sl(s2, t2, u2), m)
    assert disc_d(moved) == disc_d(m)
    assert gauss.slxsl_equivalent(moved, m)


@given(st.sampled_from(DELTAS), nonzero_rats, rats, rats, rats, rats)
def test_det_form_law(delta, a, b, s, t, u):
    # D of (g1, g2) m is D o g2^-1 (g1 has determinant one)
    m = _algebra_for(delta, a, b)
    g1, g2 = _sl(s, t, u), _sl(u, s, t)
    assert det_form(gauss.slxsl_act(g1, g2, m)) == det_form(m).compose(g2.inverse().rows)


def test_slxsl_equivalence_examples():
    m = gauss.quadratic_to_algebra(THREE_FORM)
    ident = _algebra_for(-4, 1, 1)
    assert not gauss.slxsl_equivalent(m, ident)
    with pytest.raises(UnsupportedError):
        gauss.slxsl_equivalent(SPLIT, SPLIT)


def test_square_delta_compose_unsupported():
    m = gauss.quadratic_to_algebra(BinaryQuadratic(0, 1, 0))
    with pytest.raises(UnsupportedError):
        gauss.compose_algebra_classes(m, m)
