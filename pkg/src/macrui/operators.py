"""Difference operators: the q-difference operator on symmetric polynomials,
its two-alphabet deformation, and the Hecke / commuting-difference-operator
calculus that generates higher integrals.

Operator applications never form rational functions in the main variables:
each sum is assembled over the fully cleared denominator (a product of
hyperplane binomials) and divided out exactly once at the end.  The engine
works on terms with polynomial (denominator-free) coefficients; scalar
denominators of the input are cleared first and restored at the end.
"""

from __future__ import annotations

import heapq
from collections import namedtuple

from .errors import NonDivisibleError, NotSymmetricError
from . import partitions as pt
from .polyring import MultiPoly, VarSpace
from .scalar import (P_ONE, P_Q, P_T, QTPolynomial, QTScalar, S_ONE, S_Q,
                     S_T, qt_gcd)

OperatorResult = namedtuple("OperatorResult", ["value", "divisibility_witnesses"])

_M_ONE = QTPolynomial.from_int(-1)
_M_Q = -P_Q
_M_T = -P_T


# ---------------------------------------------------------------------------
# term engine over polynomial coefficients
# ---------------------------------------------------------------------------

def _clear_denominators(f):
    """Split f into (terms with QTPolynomial coefficients, common denominator)."""
    den = P_ONE
    for c in f.terms.values():
        if c.den.terms != P_ONE.terms:
            g = qt_gcd(den, c.den)
            den = den * c.den.exact_divide(g)
    zt = {}
    for e, c in f.terms.items():
        num = c.num
        if c.den.terms != den.terms:
            num = num * den.exact_divide(c.den)
        zt[e] = num
    return zt, den


def _z_scale(zt, poly):
    return {e: c * poly for e, c in zt.items()}


def _z_sub_into(acc, other):
    for e, c in other.items():
        s = acc.get(e)
        if s is None:
            acc[e] = -c
        else:
            s = s - c
            if s.is_zero():
                del acc[e]
            else:
                acc[e] = s


def _z_sub(a, b):
    out = dict(a)
    _z_sub_into(out, b)
    return out


def _z_shift(zt, i, base):
    """Multiply the coefficient of each term by base^{exponent of v_i}."""
    out = {}
    for e, c in zt.items():
        k = e[i]
        if k:
            mono = QTPolynomial.monomial(k, 0) if base == "q" else QTPolynomial.monomial(0, k)
            out[e] = c * mono
        else:
            out[e] = c
    return out


def _z_transpose(zt, i, j):
    out = {}
    for e, c in zt.items():
        ne = list(e)
        ne[i], ne[j] = ne[j], ne[i]
        out[tuple(ne)] = c
    return out


def _z_mul_binomial(zt, i, j, cpoly):
    """Multiply by the binomial v_i + cpoly * v_j."""
    out = {}
    for e, c in zt.items():
        ne = list(e)
        ne[i] += 1
        k1 = tuple(ne)
        s = out.get(k1)
        if s is None:
            out[k1] = c
        else:
            s = s + c
            if s.is_zero():
                del out[k1]
            else:
                out[k1] = s
        ne[i] -= 1
        ne[j] += 1
        k2 = tuple(ne)
        c2 = c * cpoly
        s = out.get(k2)
        if s is None:
            out[k2] = c2
        else:
            s = s + c2
            if s.is_zero():
                del out[k2]
            else:
                out[k2] = s
    return out


def _z_div_binomial(zt, i, j, cpoly):
    """Divide exactly by v_i + cpoly * v_j with i < j (monic in graded lex).

    Returns the quotient; raises NonDivisibleError with the remainder.
    """
    work = dict(zt)
    quo = {}
    rem = {}
    heap = [(-sum(e), tuple(-x for x in e)) for e in work]
    heapq.heapify(heap)
    while heap:
        key = heapq.heappop(heap)
        e = tuple(-x for x in key[1])
        c = work.pop(e, None)
        if c is None:
            continue
        if e[i] == 0:
            rem[e] = c
            continue
        ne = list(e)
        ne[i] -= 1
        qe = tuple(ne)
        prev = quo.get(qe)
        quo[qe] = c if prev is None else prev + c
        ne[j] += 1
        ke = tuple(ne)
        delta = c * cpoly
        s = work.get(ke)
        if s is None:
            if not delta.is_zero():
                work[ke] = -delta
                heapq.heappush(heap, (-sum(ke), tuple(-x for x in ke)))
        else:
            s = s - delta
            if s.is_zero():
                del work[ke]
            else:
                work[ke] = s
    quo = {e: c for e, c in quo.items() if not c.is_zero()}
    rem = {e: c for e, c in rem.items() if not c.is_zero()}
    if rem:
        return quo, rem
    return quo, None


def _z_to_poly(space, zt, scalar_den):
    terms = {}
    for e, c in zt.items():
        v = QTScalar(c, scalar_den)
        if not v.is_zero():
            terms[e] = v
    return MultiPoly._raw(space, terms)


def _require_block_symmetric(f, block, what):
    for a, b in zip(block, block[1:]):
        if f.swap_variables(a, b) != f:
            raise NotSymmetricError(f"input not symmetric in the {what} block")


def _divide_factors(space, total, factors, scalar_den):
    """Divide ``total`` by every binomial factor; collect witnesses."""
    witnesses = []
    for (a, b, cpoly) in factors:
        total, rem = _z_div_binomial(total, a, b, cpoly)
        name = f"{space.var_name(a)}-{space.var_name(b)}" if cpoly == _M_ONE else \
            f"{space.var_name(a)}+({cpoly})*{space.var_name(b)}"
        if rem is not None:
            raise NonDivisibleError(
                f"operator sum not divisible by {name}; input outside the operator domain",
                remainder=_z_to_poly(space, rem, scalar_den))
        witnesses.append(name)
    return total, witnesses


# ---------------------------------------------------------------------------
# the q-difference operator on symmetric polynomials
# ---------------------------------------------------------------------------

def apply_mr_detailed(f, block=None):
    """Apply the q-difference operator summing over ``block`` (default: all).

    (1/(1-q)) sum_i prod_{j != i} (v_i - t v_j)/(v_i - v_j) (T_{q,v_i} - 1)
    with i, j running over the block.  The input must be symmetric in the
    block; variables outside it are spectators.
    """
    space = f.space
    if block is None:
        if space.kind != "z":
            raise ValueError("default block applies to z-spaces only")
        block = list(range(space.dim))
    block = list(block)
    _require_block_symmetric(f, block, "operator")
    if not block or f.is_zero():
        return OperatorResult(MultiPoly.zero(space), [])
    zt, den0 = _clear_denominators(f)
    i0 = block[0]
    g = _z_sub(_z_shift(zt, i0, "q"), zt)
    for k in block[1:]:
        g = _z_mul_binomial(g, i0, k, _M_T)
    pairs = [(a, b) for ai, a in enumerate(block) for b in block[ai + 1:]]
    for (a, b) in pairs:
        if a != i0 and b != i0:
            g = _z_mul_binomial(g, a, b, _M_ONE)
    total = dict(g)
    for i in block[1:]:
        _z_sub_into(total, _z_transpose(g, i0, i))
    factors = [(a, b, _M_ONE) for (a, b) in pairs]
    scalar_den = (P_ONE - P_Q) * den0
    total, witnesses = _divide_factors(space, total, factors, scalar_den)
    return OperatorResult(_z_to_poly(space, total, scalar_den), witnesses)


def apply_mr(f, block=None):
    return apply_mr_detailed(f, block).value


def mr_eigenvalue(lam):
    """(1/(1-q)) sum_i (q^{lambda_i} - 1) t^{i-1}; independent of the variable count."""
    lam = pt.as_partition(lam)
    num = QTPolynomial._raw({})
    for i, p in enumerate(lam):
        num = num + (QTPolynomial.monomial(p, i) - QTPolynomial.monomial(0, i))
    return QTScalar(num, P_ONE - P_Q)


# ---------------------------------------------------------------------------
# the deformed operator on two alphabets
# ---------------------------------------------------------------------------

def apply_deformed_mr_detailed(f, check=False):
    """Apply the deformed operator mixing q-shifts in x and t-shifts in y.

    The input must be symmetric in each block; with ``check`` it is also
    verified to satisfy the quasi-invariance condition up front.  Otherwise
    a violation surfaces as a NonDivisibleError from the cross factors.
    """
    space = f.space
    if space.kind != "xy":
        raise ValueError("the deformed operator acts on xy-spaces")
    n, m = space.n, space.m
    xs, ys = list(space.x_indices()), list(space.y_indices())
    _require_block_symmetric(f, xs, "x")
    _require_block_symmetric(f, ys, "y")
    if check:
        from .symfun import in_deformed_algebra
        if not in_deformed_algebra(f):
            raise NotSymmetricError("input is not in the deformed algebra")
    if f.is_zero():
        return OperatorResult(MultiPoly.zero(space), [])
    zt, den0 = _clear_denominators(f)

    xpairs = [(a, b) for ai, a in enumerate(xs) for b in xs[ai + 1:]]
    ypairs = [(a, b) for ai, a in enumerate(ys) for b in ys[ai + 1:]]
    cross = [(a, b) for a in xs for b in ys]

    total = {}
    if n:
        i0 = xs[0]
        g = _z_sub(_z_shift(zt, i0, "q"), zt)
        for k in xs[1:]:
            g = _z_mul_binomial(g, i0, k, _M_T)
        for j in ys:
            g = _z_mul_binomial(g, i0, j, _M_Q)
        for (a, b) in xpairs:
            if a != i0 and b != i0:
                g = _z_mul_binomial(g, a, b, _M_ONE)
        for (a, b) in ypairs:
            g = _z_mul_binomial(g, a, b, _M_ONE)
        for (a, b) in cross:
            if a != i0:
                g = _z_mul_binomial(g, a, b, _M_ONE)
        sx = dict(g)
        for i in xs[1:]:
            _z_sub_into(sx, _z_transpose(g, i0, i))
        total = _z_scale(sx, P_ONE - P_T)
    if m:
        j0 = ys[0]
        g = _z_sub(_z_shift(zt, j0, "t"), zt)
        for i in xs:
            g = _z_mul_binomial(g, j0, i, _M_T)
        for l in ys[1:]:
            g = _z_mul_binomial(g, j0, l, _M_Q)
        for (a, b) in xpairs:
            g = _z_mul_binomial(g, a, b, _M_ONE)
        for (a, b) in ypairs:
            if a != j0 and b != j0:
                g = _z_mul_binomial(g, a, b, _M_ONE)
        for (a, b) in cross:
            if b != j0:
                g = _z_mul_binomial(g, a, b, _M_ONE)
        if n % 2:
            g = _z_scale(g, _M_ONE)
        sy = dict(g)
        for j in ys[1:]:
            _z_sub_into(sy, _z_transpose(g, j0, j))
        sy = _z_scale(sy, P_ONE - P_Q)
        if total:
            _z_sub_into(total, _z_scale(sy, _M_ONE))
        else:
            total = sy

    factors = ([(a, b, _M_ONE) for (a, b) in xpairs]
               + [(a, b, _M_ONE) for (a, b) in ypairs]
               + [(a, b, _M_ONE) for (a, b) in cross])
    scalar_den = (P_ONE - P_Q) * (P_ONE - P_T) * den0
    total, witnesses = _divide_factors(space, total, factors, scalar_den)
    return OperatorResult(_z_to_poly(space, total, scalar_den), witnesses)


def apply_deformed_mr(f, check=False):
    return apply_deformed_mr_detailed(f, check).value


# ---------------------------------------------------------------------------
# Hecke operators and the commuting difference operators built from them
# ---------------------------------------------------------------------------

def hecke_T(f, i):
    """T_i = 1 + ((v_i - t v_{i+1})/(v_i - v_{i+1})) (s_i - 1), i is 1-based.

    Always polynomial: s_i f - f is antisymmetric in the pair, hence
    divisible by their difference.
    """
    space = f.space
    a, b = i - 1, i
    if not (1 <= i <= space.dim - 1):
        raise ValueError(f"T_{i} needs 1 <= i <= {space.dim - 1}")
    diff = f.swap_variables(a, b) - f
    if diff.is_zero():
        return f
    g = diff.exact_divide(MultiPoly.binomial(space, a, b, -S_ONE))
    return f + MultiPoly.binomial(space, a, b, -S_T) * g


def hecke_T_inv(f, i):
    """Inverse of T_i, from the quadratic relation (T_i - 1)(T_i + t) = 0."""
    return (hecke_T(f, i) - f.scale(S_ONE - S_T)).scale(S_T.inverse())


def cycle_shift(f):
    """The composite of the q-shift in the first variable followed by the
    cycle of coordinate transpositions: f |-> f(q v_N, v_1, ..., v_{N-1})."""
    N = f.space.dim
    if N == 1:
        return f.shift_variable(0, S_Q)
    subs = {0: (N - 1, S_Q)}
    for i in range(1, N):
        subs[i] = (i - 1, S_ONE)
    return f.substitute(subs)


def cherednik_dunkl(f, i):
    """The i-th commuting difference operator (1-based), built from the
    Hecke generators around the cycle shift.

    Composition order and normalization are pinned by the commutation,
    Hecke-relation, and restriction identities in the test suite: factors
    apply right to left and no overall power of t is applied.
    """
    N = f.space.dim
    if not (1 <= i <= N):
        raise ValueError(f"operator index {i} out of range 1..{N}")
    g = f
    for k in range(i - 1, 0, -1):
        g = hecke_T_inv(g, k)
    g = cycle_shift(g)
    for k in range(N - 1, i - 1, -1):
        g = hecke_T(g, k)
    return g


def operator_from_shifted_symmetric(g, f):
    """Substitute the commuting difference operators into a shifted
    symmetric polynomial g and apply the result to a symmetric f."""
    from .symfun import is_shifted_symmetric

    if g.space != f.space:
        raise ValueError("g and f must share a variable space")
    if not is_shifted_symmetric(g):
        raise NotSymmetricError("g is not shifted symmetric")
    result = MultiPoly.zero(f.space)
    for e, c in g.terms.items():
        h = f
        for idx, k in enumerate(e):
            for _ in range(k):
                h = cherednik_dunkl(h, idx + 1)
        result = result + h.scale(c)
    if not result.is_symmetric("all"):
        raise NotSymmetricError("operator image is not symmetric")
    return result


# ---------------------------------------------------------------------------
# the closed coefficient-sum identity behind the operator restriction
# ---------------------------------------------------------------------------

def _coefficient_sum_cleared(n, m):
    """(1-t)*sum_i A_i*D + (1-q)*sum_j B_j*D over the cleared denominator D."""
    space = VarSpace.xy(n, m)
    xs, ys = list(space.x_indices()), list(space.y_indices())
    xpairs = [(a, b) for ai, a in enumerate(xs) for b in xs[ai + 1:]]
    ypairs = [(a, b) for ai, a in enumerate(ys) for b in ys[ai + 1:]]
    cross = [(a, b) for a in xs for b in ys]
    one = {(0,) * space.dim: P_ONE}

    total = {}
    if n:
        i0 = xs[0]
        g = dict(one)
        for k in xs[1:]:
            g = _z_mul_binomial(g, i0, k, _M_T)
        for j in ys:
            g = _z_mul_binomial(g, i0, j, _M_Q)
        for (a, b) in xpairs:
            if a != i0 and b != i0:
                g = _z_mul_binomial(g, a, b, _M_ONE)
        for (a, b) in ypairs:
            g = _z_mul_binomial(g, a, b, _M_ONE)
        for (a, b) in cross:
            if a != i0:
                g = _z_mul_binomial(g, a, b, _M_ONE)
        sx = dict(g)
        for i in xs[1:]:
            _z_sub_into(sx, _z_transpose(g, i0, i))
        total = _z_scale(sx, P_ONE - P_T)
    if m:
        j0 = ys[0]
        g = dict(one)
        for i in xs:
            g = _z_mul_binomial(g, j0, i, _M_T)
        for l in ys[1:]:
            g = _z_mul_binomial(g, j0, l, _M_Q)
        for (a, b) in xpairs:
            g = _z_mul_binomial(g, a, b, _M_ONE)
        for (a, b) in ypairs:
            if a != j0 and b != j0:
                g = _z_mul_binomial(g, a, b, _M_ONE)
        for (a, b) in cross:
            if b != j0:
                g = _z_mul_binomial(g, a, b, _M_ONE)
        if n % 2:
            g = _z_scale(g, _M_ONE)
        sy = dict(g)
        for j in ys[1:]:
            _z_sub_into(sy, _z_transpose(g, j0, j))
        sy = _z_scale(sy, P_ONE - P_Q)
        if total:
            _z_sub_into(total, _z_scale(sy, _M_ONE))
        else:
            total = sy

    denom = dict(one)
    for (a, b) in xpairs + ypairs + cross:
        denom = _z_mul_binomial(denom, a, b, _M_ONE)
    return space, total, denom


def coefficient_sum_identity(n, m):
    """Verify sum_i A_i + ((1-q)/(1-t)) sum_j B_j = (t^n q^m - 1)/(t - 1)
    as an exact rational-function identity, together with the one-block
    analogue sum_l C_l = (t^N - 1)/(t - 1) at N = n + m."""
    if n + m < 1:
        raise ValueError("need at least one variable")
    space, total, denom = _coefficient_sum_cleared(n, m)
    # identity times (1-t)*D: rhs is (1 - t^n q^m) * D
    rhs_scalar = P_ONE - QTPolynomial.monomial(m, n)
    rhs = _z_scale(denom, rhs_scalar)
    if _z_sub(total, rhs):
        return False

    # the one-block sum at N = n + m: (t - 1) * sum_l C_l * D == (t^N - 1) * D
    N = n + m
    wspace = VarSpace.z(N)
    pairs = [(a, b) for a in range(N) for b in range(a + 1, N)]
    one = {(0,) * N: P_ONE}
    g = dict(one)
    for k in range(1, N):
        g = _z_mul_binomial(g, 0, k, _M_T)
    for (a, b) in pairs:
        if a != 0 and b != 0:
            g = _z_mul_binomial(g, a, b, _M_ONE)
    sw = dict(g)
    for i in range(1, N):
        _z_sub_into(sw, _z_transpose(g, 0, i))
    lhs = _z_scale(sw, P_T - P_ONE)
    denw = dict(one)
    for (a, b) in pairs:
        denw = _z_mul_binomial(denw, a, b, _M_ONE)
    rhsw = _z_scale(denw, QTPolynomial.monomial(0, N) - P_ONE)
    return not _z_sub(lhs, rhsw)
