"""Symmetric-function bases and the restriction homomorphisms.

Provides the monomial and power-sum bases with exact conversions, the
shifted power sums and expansions in them, the parameter-ratio
automorphism p_r -> ((1-q^r)/(1-t^r)) p_r, the deformed Newton sums, and
the two restriction maps onto the two-alphabet polynomial algebra: one for
symmetric functions and one for shifted symmetric functions.
"""

from __future__ import annotations

from functools import cache

from .errors import NotSymmetricError, SingularSystemError
from . import partitions as pt
from .linalg import solve_square
from .polyring import MultiPoly, VarSpace
from .scalar import (S_ONE, S_Q, S_T, S_ZERO, _coerce, qt_ratio, q_pow, t_pow)


class SymExpansion:
    """Coefficients of a symmetric (or shifted symmetric) quantity in a basis.

    ``basis`` is one of "m", "p", "pstar"; ``N`` records the variable-count
    context the expansion was computed in; ``coeffs`` maps partitions
    (tuples) to nonzero QTScalar values.
    """

    __slots__ = ("basis", "N", "coeffs")

    def __init__(self, basis, N, coeffs=None):
        if basis not in ("m", "p", "pstar"):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.N = N
        clean = {}
        if coeffs:
            for lam, c in coeffs.items():
                lam = pt.as_partition(lam)
                c = _coerce(c)
                if not c.is_zero():
                    clean[lam] = c
        self.coeffs = clean

    def __eq__(self, other):
        return (isinstance(other, SymExpansion) and self.basis == other.basis
                and self.coeffs == other.coeffs)

    def get(self, lam):
        return self.coeffs.get(tuple(lam), S_ZERO)

    def support(self):
        return sorted(self.coeffs, reverse=True)

    def degrees(self):
        return sorted({sum(lam) for lam in self.coeffs})

    def __repr__(self):
        inner = ", ".join(f"{lam}: {c}" for lam, c in sorted(self.coeffs.items()))
        return f"SymExpansion({self.basis!r}, N={self.N}, {{{inner}}})"


# ---------------------------------------------------------------------------
# classical bases
# ---------------------------------------------------------------------------

def _distinct_arrangements(parts, N):
    """All distinct ways to place the multiset ``parts`` into N slots (rest zero)."""
    from collections import Counter

    counts = Counter(parts)
    counts[0] = N - len(parts)
    values = sorted(counts)
    slots = [0] * N
    out = []

    def rec(i):
        if i == N:
            out.append(tuple(slots))
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                slots[i] = v
                rec(i + 1)
                counts[v] += 1

    rec(0)
    return out


def monomial_symmetric(lam, N):
    """m_lambda in N variables: the orbit sum of the exponent vector lambda."""
    lam = pt.as_partition(lam)
    if len(lam) > N:
        raise ValueError(f"partition {lam} needs more than {N} variables")
    space = VarSpace.z(N)
    return MultiPoly._raw(space,
                          {e: S_ONE for e in _distinct_arrangements(lam, N)})


def power_sum(r, N):
    """p_r = sum of r-th powers in N variables."""
    if r < 1:
        raise ValueError("power sums need r >= 1")
    space = VarSpace.z(N)
    terms = {}
    for i in range(N):
        e = [0] * N
        e[i] = r
        terms[tuple(e)] = S_ONE
    return MultiPoly._raw(space, terms)


def power_sum_product(lam, N):
    """p_lambda = product of p_{lambda_k}; the empty product is 1."""
    lam = pt.as_partition(lam)
    out = MultiPoly.one(VarSpace.z(N))
    for k in lam:
        out = out * power_sum(k, N)
    return out


def to_monomial_expansion(f):
    """Exact m-basis coefficients of a symmetric polynomial in a z-space."""
    if f.space.kind != "z":
        raise ValueError("monomial expansions live in z-spaces")
    if not f.is_symmetric("all"):
        raise NotSymmetricError("not symmetric; no monomial expansion")
    coeffs = {}
    for e, c in f.terms.items():
        rep = tuple(sorted(e, reverse=True))
        if rep == e:
            coeffs[tuple(x for x in rep if x)] = c
    return SymExpansion("m", f.space.n, coeffs)


def from_monomial_expansion(e):
    out = MultiPoly.zero(VarSpace.z(e.N))
    for lam, c in e.coeffs.items():
        out = out + monomial_symmetric(lam, e.N).scale(c)
    return out


@cache
def _power_in_monomial_matrix(d):
    """For each mu of weight d, the m-expansion of p_mu, computed at N = d."""
    if d == 0:
        return [()], {(): {(): S_ONE}}
    mus = pt.partitions_of(d)
    table = {}
    for mu in mus:
        table[mu] = to_monomial_expansion(power_sum_product(mu, d)).coeffs
    return mus, table


def monomial_to_power_expansion(e):
    """Rewrite an m-expansion exactly in power-sum products.

    Requires the variable context N to be at least the top degree, so the
    p_mu with |mu| <= degree are linearly independent.
    """
    if e.basis != "m":
        raise ValueError("expected an m-expansion")
    out = {}
    for d in e.degrees():
        if d > e.N:
            raise SingularSystemError(
                f"power-sum conversion at degree {d} needs at least {d} variables")
        mus, table = _power_in_monomial_matrix(d)
        lams = [lam for lam in mus]
        vec = [e.coeffs.get(lam, S_ZERO) for lam in lams]
        matrix = [[table[mu].get(lam, S_ZERO) for mu in mus] for lam in lams]
        sol = solve_square(matrix, vec)
        for mu, c in zip(mus, sol):
            if not c.is_zero():
                out[mu] = c
    return SymExpansion("p", e.N, out)


def qt_ratio_automorphism(e):
    """Scale the coefficient of p_mu by prod_k (1 - q^{mu_k}) / (1 - t^{mu_k})."""
    if e.basis != "p":
        raise ValueError("the automorphism acts on p-expansions")
    out = {}
    for mu, c in e.coeffs.items():
        factor = S_ONE
        for k in mu:
            factor = factor * qt_ratio(k)
        out[mu] = c * factor
    return SymExpansion("p", e.N, out)


# ---------------------------------------------------------------------------
# deformed Newton sums and the restriction to two alphabets
# ---------------------------------------------------------------------------

@cache
def deformed_newton_sum(r, n, m):
    """p_r(x, y, q, t) = sum x_i^r + ((1-q^r)/(1-t^r)) * sum y_j^r."""
    if r < 1:
        raise ValueError("Newton sums need r >= 1")
    space = VarSpace.xy(n, m)
    terms = {}
    for i in space.x_indices():
        e = [0] * space.dim
        e[i] = r
        terms[tuple(e)] = S_ONE
    ratio = qt_ratio(r)
    for j in space.y_indices():
        e = [0] * space.dim
        e[j] = r
        terms[tuple(e)] = ratio
    return MultiPoly._raw(space, terms)


@cache
def _deformed_newton_product(mu, n, m):
    out = MultiPoly.one(VarSpace.xy(n, m))
    for k in mu:
        out = out * deformed_newton_sum(k, n, m)
    return out


def restrict_p_expansion(e, n, m):
    """Image of a p-expansion under p_r -> deformed Newton sum in (n, m) variables."""
    if e.basis != "p":
        raise ValueError("restriction acts on p-expansions")
    out = MultiPoly.zero(VarSpace.xy(n, m))
    for mu, c in e.coeffs.items():
        out = out + _deformed_newton_product(mu, n, m).scale(c)
    return out


def in_deformed_algebra(f):
    """Membership test for the quasi-invariant two-alphabet algebra.

    Requires symmetry in each block separately, plus the shift condition
    T_{q,x_i} f = T_{t,y_j} f on every hyperplane x_i = y_j.  By block
    symmetry it suffices to check the (1, 1) pair, which is what we do
    after verifying both block symmetries.
    """
    space = f.space
    if space.kind != "xy":
        raise ValueError("membership test needs an xy-space")
    if not (f.is_symmetric("x") and (space.m == 0 or f.is_symmetric("y"))):
        return False
    if space.n == 0 or space.m == 0:
        return True
    i, j = 0, space.n
    shifted = f.shift_variable(i, S_Q) - f.shift_variable(j, S_T)
    restricted = shifted.substitute({j: (i, S_ONE)})
    return restricted.is_zero()


# ---------------------------------------------------------------------------
# shifted power sums
# ---------------------------------------------------------------------------

def shifted_power_sum(r, N):
    """p*_r = sum_i (x_i^r - 1) t^{r(i-1)} in N variables."""
    if r < 1:
        raise ValueError("shifted power sums need r >= 1")
    space = VarSpace.z(N)
    out = MultiPoly.zero(space)
    for i in range(N):
        w = t_pow(r * i)
        e = [0] * N
        e[i] = r
        out = out + MultiPoly._raw(space, {tuple(e): w}) - MultiPoly.constant(space, w)
    return out


def shifted_power_product(lam, N):
    lam = pt.as_partition(lam)
    out = MultiPoly.one(VarSpace.z(N))
    for k in lam:
        out = out * shifted_power_sum(k, N)
    return out


def _to_unshifted_coordinates(f):
    """Rewrite f(x) as a polynomial in u_i = x_i t^{i-1}, reusing the slots."""
    subs = {i: (i, t_pow(i).inverse()) for i in range(1, f.space.dim)}
    return f.substitute(subs) if subs else f


def is_shifted_symmetric(f):
    """True iff f is symmetric in the variables x_i t^{i-1}."""
    return _to_unshifted_coordinates(f).is_symmetric("all")


def to_shifted_power_expansion(f):
    """Exact expansion of a shifted symmetric polynomial in p*-products.

    Works down the degree filtration: the top homogeneous part, rewritten
    in the shifted coordinates, is an ordinary symmetric polynomial whose
    p-expansion gives the top p*-coefficients; subtract and recurse.  The
    result is verified by reconstruction.
    """
    if f.space.kind != "z":
        raise ValueError("shifted expansions live in z-spaces")
    N = f.space.n
    out = {}
    work = f
    while True:
        d = work.degree()
        if d <= 0:
            break
        if d > N:
            raise SingularSystemError(
                f"shifted expansion at degree {d} needs at least {d} variables")
        top = _to_unshifted_coordinates(work.homogeneous_component(d))
        if not top.is_symmetric("all"):
            raise NotSymmetricError("not shifted symmetric")
        pexp = monomial_to_power_expansion(to_monomial_expansion(top))
        for mu, c in pexp.coeffs.items():
            out[mu] = out.get(mu, S_ZERO) + c
            work = work - shifted_power_product(mu, N).scale(c)
        if work.degree() >= d:
            raise NotSymmetricError("shifted expansion failed to reduce the degree")
    const = work.constant_term()
    if not const.is_zero():
        out[()] = const
    expansion = SymExpansion("pstar", N, out)
    if from_shifted_power_expansion(expansion, N) != f:
        raise NotSymmetricError("shifted expansion failed reconstruction")
    return expansion


def from_shifted_power_expansion(e, N):
    out = MultiPoly.zero(VarSpace.z(N))
    for mu, c in e.coeffs.items():
        out = out + shifted_power_product(mu, N).scale(c)
    return out


@cache
def _shifted_newton_image(r, n, m):
    """Image of p*_r under the shifted restriction map.

    sum_i (x_i^r - 1) t^{r(i-1)} + ((1-q^r)/(1-t^r)) sum_j (y_j^r - t^{rn}) q^{r(j-1)}.
    """
    space = VarSpace.xy(n, m)
    out = MultiPoly.zero(space)
    for i in range(n):
        w = t_pow(r * i)
        e = [0] * space.dim
        e[i] = r
        out = out + MultiPoly._raw(space, {tuple(e): w}) - MultiPoly.constant(space, w)
    ratio = qt_ratio(r)
    tn = t_pow(r * n)
    for j in range(m):
        w = q_pow(r * j) * ratio
        e = [0] * space.dim
        e[n + j] = r
        out = out + MultiPoly._raw(space, {tuple(e): w}) - MultiPoly.constant(space, w * tn)
    return out


@cache
def _shifted_newton_image_product(mu, n, m):
    out = MultiPoly.one(VarSpace.xy(n, m))
    for k in mu:
        out = out * _shifted_newton_image(k, n, m)
    return out


def restrict_shifted_expansion(e, n, m):
    """Image of a p*-expansion under the shifted restriction map."""
    if e.basis != "pstar":
        raise ValueError("shifted restriction acts on p*-expansions")
    out = MultiPoly.zero(VarSpace.xy(n, m))
    for mu, c in e.coeffs.items():
        out = out + _shifted_newton_image_product(mu, n, m).scale(c)
    return out
