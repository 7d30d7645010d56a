"""The difference operator, its deformation, Hecke and commuting operators."""

import pytest

from macrui import partitions as pt
from macrui.errors import NonDivisibleError, NotSymmetricError
from macrui.macdonald import macdonald_polynomial
from macrui.operators import (apply_deformed_mr, apply_deformed_mr_detailed,
                              apply_mr, apply_mr_detailed, cherednik_dunkl,
                              coefficient_sum_identity, cycle_shift, hecke_T,
                              hecke_T_inv, mr_eigenvalue,
                              operator_from_shifted_symmetric)
from macrui.polyring import MultiPoly, VarSpace
from macrui.scalar import QTScalar, S_ONE, S_Q, S_T, one_minus_q, qt_ratio
from macrui.symfun import (in_deformed_algebra, monomial_symmetric,
                           restrict_p_expansion, shifted_power_sum,
                           to_monomial_expansion)


def test_apply_mr_one_variable():
    sp = VarSpace.z(1)
    z1 = MultiPoly.variable(sp, 0)
    assert apply_mr(z1) == -z1
    assert apply_mr(MultiPoly.constant(sp, S_Q)) == MultiPoly.zero(sp)


def test_apply_mr_eigenfunction_example():
    u = (1 + S_Q) * (S_T - 1) / (S_T - S_Q)
    f = monomial_symmetric((2,), 2) + monomial_symmetric((1, 1), 2).scale(u)
    assert apply_mr(f) == f.scale(-(1 + S_Q))


def test_apply_mr_rejects_asymmetric_input():
    sp = VarSpace.z(2)
    with pytest.raises(NotSymmetricError):
        apply_mr(MultiPoly.variable(sp, 0))


def test_mr_eigenvalue_examples():
    assert mr_eigenvalue((1,)) == QTScalar.from_int(-1)
    assert mr_eigenvalue((2,)) == -(1 + S_Q)
    assert mr_eigenvalue((1, 1)) == -(1 + S_T)
    assert mr_eigenvalue(()) == QTScalar.from_int(0)


def test_deformed_mr_examples():
    sp = VarSpace.xy(1, 1)
    x, y = MultiPoly.variable(sp, 0), MultiPoly.variable(sp, 1)
    f = x + y.scale(qt_ratio(1))
    assert apply_deformed_mr(f) == -f
    assert apply_deformed_mr(MultiPoly.constant(sp, S_T)).is_zero()
    with pytest.raises(NonDivisibleError) as err:
        apply_deformed_mr(x + y)
    assert err.value.remainder is not None
    with pytest.raises(NotSymmetricError):
        apply_deformed_mr(x + y, check=True)


def test_deformed_mr_empty_blocks_match_one_block_operator():
    # with no y variables the deformed operator is the plain one
    for lam in [(1,), (2,), (2, 1)]:
        f = monomial_symmetric(lam, 2)
        g = MultiPoly(VarSpace.xy(2, 0), dict(f.terms))
        out = apply_deformed_mr(g)
        expect = apply_mr(f)
        assert dict(out.terms) == dict(expect.terms)
    # with no x variables it is the one-block operator with parameters swapped
    for lam in [(1,), (1, 1)]:
        f = monomial_symmetric(lam, 2)
        g = MultiPoly(VarSpace.xy(0, 2), dict(f.terms))
        out = apply_deformed_mr(g)
        expect = apply_mr(f.swap_parameters()).swap_parameters()
        assert dict(out.terms) == dict(expect.terms)


def test_operator_preserves_membership():
    from macrui.macdonald import super_macdonald

    for (n, m) in [(1, 1), (2, 1), (2, 2)]:
        for d in range(1, 5):
            for lam in pt.partitions_of(d, fat_hook=(n, m)):
                img = apply_deformed_mr(super_macdonald(lam, n, m))
                assert in_deformed_algebra(img)


def test_operator_result_witnesses():
    from macrui.macdonald import macdonald_p_expansion

    f = monomial_symmetric((1,), 2)
    res = apply_mr_detailed(f)
    assert res.divisibility_witnesses == ["z1-z2"]
    g = restrict_p_expansion(macdonald_p_expansion((1,)), 1, 1)
    res = apply_deformed_mr_detailed(g)
    assert res.divisibility_witnesses == ["x1-y1"]


def test_coefficient_sum_identity_examples():
    assert coefficient_sum_identity(1, 0)
    assert coefficient_sum_identity(0, 1)
    assert coefficient_sum_identity(1, 1)
    assert coefficient_sum_identity(2, 2)
    with pytest.raises(ValueError):
        coefficient_sum_identity(0, 0)


def test_hecke_examples():
    sp = VarSpace.z(2)
    x1, x2 = MultiPoly.variable(sp, 0), MultiPoly.variable(sp, 1)
    assert hecke_T(x1, 1) == x2.scale(S_T)
    assert hecke_T(x2, 1) == x1 + x2.scale(S_ONE - S_T)
    sym = x1 * x2
    assert hecke_T(sym, 1) == sym
    assert hecke_T_inv(hecke_T(x1, 1), 1) == x1
    assert hecke_T_inv(x2.scale(S_T), 1) == x1
    c = MultiPoly.constant(sp, S_Q)
    assert hecke_T_inv(c, 1) == c


def test_hecke_quadratic_relation():
    for N in (2, 3):
        sp = VarSpace.z(N)
        for lam in pt.partitions_up_to(3):
            if len(lam) > N:
                continue
            f = monomial_symmetric(lam, N) if lam else MultiPoly.one(sp)
            f = f + MultiPoly.variable(sp, 0, 2)  # deliberately asymmetric
            for i in range(1, N):
                tf = hecke_T(f, i)
                assert (hecke_T(tf, i) - tf.scale(S_ONE - S_T) - f.scale(S_T)).is_zero()


def test_cherednik_dunkl_examples():
    sp = VarSpace.z(1)
    x1 = MultiPoly.variable(sp, 0)
    assert cherednik_dunkl(x1, 1) == x1.scale(S_Q)
    assert cherednik_dunkl(MultiPoly.one(sp), 1) == MultiPoly.one(sp)
    sp2 = VarSpace.z(2)
    f = MultiPoly.variable(sp2, 0) * MultiPoly.variable(sp2, 1)
    d1d2 = cherednik_dunkl(cherednik_dunkl(f, 2), 1)
    d2d1 = cherednik_dunkl(cherednik_dunkl(f, 1), 2)
    assert d1d2 == d2d1


def test_cycle_shift_form():
    sp = VarSpace.z(3)
    x1, x2, x3 = (MultiPoly.variable(sp, i) for i in range(3))
    assert cycle_shift(x1) == x3.scale(S_Q)
    assert cycle_shift(x2) == x1
    assert cycle_shift(x3) == x2


def test_operator_from_shifted_symmetric_examples():
    sp = VarSpace.z(1)
    x1 = MultiPoly.variable(sp, 0)
    c = MultiPoly.constant(sp, S_T)
    assert operator_from_shifted_symmetric(c, x1) == x1.scale(S_T)
    out = operator_from_shifted_symmetric(shifted_power_sum(1, 1), x1)
    assert out == x1.scale(S_Q - 1)
    m1 = monomial_symmetric((1,), 2)
    out = operator_from_shifted_symmetric(shifted_power_sum(1, 2), m1)
    assert out == apply_mr(m1).scale(one_minus_q())
    with pytest.raises(NotSymmetricError):
        operator_from_shifted_symmetric(MultiPoly.variable(VarSpace.z(2), 0), m1)


def test_first_integral_correspondence():
    for N in (2, 3):
        for d in range(4):
            for lam in pt.partitions_of(d, max_length=N):
                m = monomial_symmetric(lam, N)
                lhs = operator_from_shifted_symmetric(shifted_power_sum(1, N), m)
                assert lhs == apply_mr(m).scale(one_minus_q())


def test_mr_stability_under_variable_reduction():
    # applying the operator then dropping trailing variables agrees with
    # dropping first and applying the smaller operator
    for N in (2, 3, 4, 5):
        for M in range(1, N):
            for d in range(4):
                for lam in pt.partitions_of(d, max_length=N):
                    big = apply_mr(monomial_symmetric(lam, N))
                    small = (apply_mr(monomial_symmetric(lam, M))
                             if len(lam) <= M else MultiPoly.zero(VarSpace.z(M)))
                    bindings = {i: QTScalar.from_int(0) for i in range(M, N)}
                    reduced = big.substitute(bindings)
                    lifted = MultiPoly(VarSpace.z(N),
                                       {e + (0,) * (N - M): c
                                        for e, c in small.terms.items()})
                    assert reduced == lifted


def test_triangularity_small():
    N = 4
    for d in range(1, 5):
        for lam in pt.partitions_of(d, max_length=N):
            exp = to_monomial_expansion(apply_mr(monomial_symmetric(lam, N)))
            for mu in exp.coeffs:
                assert pt.dominance_leq(mu, lam)
            assert exp.coeffs.get(lam) == mr_eigenvalue(lam)


def test_eigen_relation_at_minimal_variable_count():
    for d in range(6):
        for lam in pt.partitions_of(d):
            N = len(lam) + 1
            P = macdonald_polynomial(lam, N)
            assert apply_mr(P) == P.scale(mr_eigenvalue(lam))
