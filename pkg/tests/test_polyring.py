"""Sparse polynomial arithmetic, exact division, substitution, symmetry."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from macrui.errors import NonDivisibleError, SpaceMismatchError
from macrui.polyring import MultiPoly, VarSpace, poly_arith
from macrui.scalar import QTScalar, S_ONE, S_Q, S_T, q_pow, qt_monomial, t_pow


Z2 = VarSpace.z(2)
X1, X2 = MultiPoly.variable(Z2, 0), MultiPoly.variable(Z2, 1)


def test_arith_examples():
    assert poly_arith(X1 + X2, X1 - X2, "mul") == X1 * X1 - X2 * X2
    f = X1 * X2 + X1.scale(S_T)
    assert poly_arith(f, MultiPoly.zero(Z2), "add") == f
    g = (X1 - X2.scale(S_T)) * (X2 - X1.scale(S_T))
    expect = MultiPoly(Z2, {
        (1, 1): S_ONE + S_T * S_T,
        (2, 0): -S_T,
        (0, 2): -S_T,
    })
    assert g == expect


def test_space_mismatch():
    with pytest.raises(SpaceMismatchError):
        X1 + MultiPoly.variable(VarSpace.z(3), 0)


def test_exact_divide_examples():
    assert (X1 * X1 - X2 * X2).exact_divide(X1 - X2) == X1 + X2
    f = X1 * X2 - X1.scale(S_Q)
    assert f.exact_divide(MultiPoly.one(Z2)) == f
    with pytest.raises(NonDivisibleError) as err:
        (X1 * X1 + X2).exact_divide(X1 - X2)
    assert not err.value.remainder.is_zero()


def test_substitute_examples():
    f = X1 * X2
    assert f.substitute({1: qt_monomial(2, 0)}) == X1.scale(qt_monomial(2, 0))
    # the degree-one shifted power sum evaluated at (q, 1, ..., 1)
    N = 3
    sp = VarSpace.z(N)
    pstar1 = MultiPoly.zero(sp)
    for i in range(N):
        pstar1 = pstar1 + (MultiPoly.variable(sp, i)
                           - MultiPoly.one(sp)).scale(t_pow(i))
    value = pstar1.substitute({0: q_pow(1), 1: S_ONE, 2: S_ONE})
    assert value == MultiPoly.constant(sp, S_Q - 1)
    # hyperplane restriction
    xy = VarSpace.xy(1, 1)
    h = MultiPoly.variable(xy, 0) - MultiPoly.variable(xy, 1)
    assert h.substitute({1: (0, S_ONE)}).is_zero()


def test_shift_examples():
    f = X1 * X1 * X2
    assert f.shift_variable(0, S_Q) == f.scale(qt_monomial(2, 0))
    c = MultiPoly.constant(Z2, S_T)
    assert c.shift_variable(1, S_T) == c
    xy = VarSpace.xy(1, 1)
    xyprod = MultiPoly.variable(xy, 0) * MultiPoly.variable(xy, 1)
    assert xyprod.shift_variable(0, S_Q).shift_variable(1, S_T) \
        == xyprod.scale(S_Q * S_T)


def test_symmetry_examples():
    assert (X1 + X2).is_symmetric("all")
    assert not (X1 - X2).is_symmetric("all")
    xy = VarSpace.xy(2, 1)
    x1, x2, y1 = (MultiPoly.variable(xy, i) for i in range(3))
    f = x1 * y1 + x2 * y1
    assert f.is_symmetric("x") and f.is_symmetric("y")


def test_leading_exponents():
    f = X1 * X2 * X2 + X1 * X1
    assert f.leading_exponent("grlex") == (1, 2)
    assert f.leading_exponent("lex") == (2, 0)


coeff_scalars = st.builds(
    QTScalar.from_int, st.integers(min_value=-3, max_value=3))


@st.composite
def polys(draw, space=Z2, max_deg=3, min_terms=0):
    n = draw(st.integers(min_value=min_terms, max_value=4))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(min_value=0, max_value=max_deg))
                  for _ in range(space.dim))
        c = draw(coeff_scalars)
        terms[e] = c
    return MultiPoly(space, terms)


@settings(max_examples=50, deadline=None)
@given(polys(), polys(min_terms=1).filter(lambda f: not f.is_zero()))
def test_division_round_trip(f, g):
    assert (f * g).exact_divide(g) == f


@settings(max_examples=50, deadline=None)
@given(polys(), polys())
def test_substitute_is_homomorphism(f, g):
    bindings = {0: qt_monomial(1, 0), 1: (1, S_T)}
    assert (f * g).substitute(bindings) == f.substitute(bindings) * g.substitute(bindings)
    assert (f + g).substitute(bindings) == f.substitute(bindings) + g.substitute(bindings)


@settings(max_examples=50, deadline=None)
@given(polys())
def test_shift_inverse_round_trip(f):
    tinv = t_pow(1).inverse()
    assert f.shift_variable(0, S_T).shift_variable(0, tinv) == f


@settings(max_examples=50, deadline=None)
@given(polys())
def test_swap_difference_divisible(f):
    diff = f.swap_variables(0, 1) - f
    q = diff.exact_divide(X1 - X2)  # must never raise
    assert q * (X1 - X2) == diff
