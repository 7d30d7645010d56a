"""Interpolation (shifted) polynomials and their two-alphabet restrictions.

The reference construction solves the vanishing characterization directly:
the interpolation polynomial of shape lambda is the shifted symmetric
polynomial of degree |lambda| vanishing at every evaluation point q^mu with
|mu| <= |lambda|, mu != lambda, and taking the hook-product value at its
own point.  A one-variable branching recursion and a box-weighted tableau
formula reproduce it; both carry an explicit monomial alignment factor
because their intrinsic normalization differs from the hook normalization
by q^{n(lam) - n(lam')} t^{n(lam') - n(lam)} (measured exactly, verified by
the test suite).
"""

from __future__ import annotations

from functools import cache

from .errors import InvalidPartitionError, SingularSystemError
from . import partitions as pt
from .linalg import solve_square
from .macdonald import branching_coefficients, reverse_tableaux, bitableaux, strip_boxes
from .polyring import MultiPoly, VarSpace, linear_combination
from .scalar import S_ONE, S_ZERO, q_pow, qt_monomial, t_pow
from .symfun import (shifted_power_product, to_shifted_power_expansion,
                     restrict_shifted_expansion)


def _pstar_value(r, nu):
    """Value of the r-th shifted power sum at the point q^nu."""
    s = S_ZERO
    for i, p in enumerate(nu):
        s = s + qt_monomial(r * p, r * i) - t_pow(r * i)
    return s


def _pstar_product_value(mu, nu):
    v = S_ONE
    for r in mu:
        v = v * _pstar_value(r, nu)
        if v.is_zero():
            break
    return v


class VanishingSystem:
    """The square collocation system characterizing one interpolation polynomial.

    Unknowns are the shifted power-sum products of weight at most the degree;
    conditions are the values at every evaluation point q^mu of weight at most
    the degree: zero away from the target shape, the hook product on it.
    """

    def __init__(self, lam, N):
        lam = pt.as_partition(lam)
        self.shape = lam
        self.degree = pt.weight(lam)
        self.N = N
        if len(lam) > N:
            raise InvalidPartitionError(f"{lam} needs more than {N} variables")
        if N < self.degree:
            raise SingularSystemError(
                f"the vanishing characterization of {lam} needs at least "
                f"{self.degree} variables")
        self.unknowns = pt.partitions_up_to(self.degree)
        self.points = pt.partitions_up_to(self.degree)

    def matrix(self):
        return [[_pstar_product_value(mu, nu) for mu in self.unknowns]
                for nu in self.points]

    def rhs(self):
        return [pt.hook_product(self.shape) if nu == self.shape else S_ZERO
                for nu in self.points]

    def solve(self):
        """The p*-coefficients of the interpolation polynomial, as a map."""
        coeffs = solve_square(self.matrix(), self.rhs())
        return dict(zip(self.unknowns, coeffs))


def interpolation_polynomial(lam, N):
    """The interpolation polynomial of shape lambda in N variables.

    Solved from the vanishing characterization (the reference construction);
    requires N >= |lambda|, otherwise the conditions do not pin the
    polynomial down and the call is rejected.
    """
    return _interpolation_polynomial(pt.as_partition(lam), N)


@cache
def _interpolation_polynomial(lam, N):
    if pt.weight(lam) == 0:
        if N < 0:
            raise ValueError("negative variable count")
        return MultiPoly.one(VarSpace.z(N))
    system = VanishingSystem(lam, N)
    return linear_combination(
        VarSpace.z(N),
        [(c, shifted_power_product(mu, N)) for mu, c in system.solve().items()])


def evaluate_at_partition(f, mu, base="q"):
    """Evaluate a z-space polynomial at the point (base^{mu_1}, ..., base^{mu_N}),
    trailing coordinates equal to 1."""
    mu = pt.as_partition(mu)
    if len(mu) > f.space.dim:
        raise InvalidPartitionError(f"{mu} has more parts than variables")
    if base == "q":
        point = [q_pow(pt.part(mu, i + 1)) for i in range(f.space.dim)]
    elif base == "t":
        point = [t_pow(pt.part(mu, i + 1)) for i in range(f.space.dim)]
    else:
        raise ValueError("base must be 'q' or 't'")
    return f.evaluate(point)


# ---------------------------------------------------------------------------
# branching recursion and tableau formula
# ---------------------------------------------------------------------------

def _box_node(box):
    i, j = box
    return qt_monomial(j - 1, i - 1)


@cache
def _interp_branching_raw(lam, N):
    """One-variable peeling recursion, in its intrinsic normalization."""
    space = VarSpace.z(N)
    if N == 0:
        return MultiPoly.one(space) if not lam else MultiPoly.zero(space)
    bc = branching_coefficients(lam)
    total = MultiPoly.zero(space)
    z1 = MultiPoly.variable(space, 0)
    for mu in pt.horizontal_strips_below(lam):
        psi = bc[mu]
        if psi.is_zero():
            continue
        factor = MultiPoly.one(space)
        for box in strip_boxes(lam, mu):
            factor = factor * (z1 - MultiPoly.constant(space, _box_node(box)))
        tail = _interp_branching_raw(mu, N - 1)
        lifted = MultiPoly._raw(space, {(0,) + e: c for e, c in tail.terms.items()})
        total = total + (factor * lifted).scale(psi * t_pow(pt.weight(mu)))
    return total


def interpolation_by_branching(lam, N):
    """The interpolation polynomial through the peeling recursion, aligned
    to the hook normalization."""
    lam = pt.as_partition(lam)
    return _interp_branching_raw(lam, N).scale(pt.normalization_alignment(lam))


def interpolation_tableau_sum(lam, N):
    """The interpolation polynomial as a box-weighted tableau sum, aligned
    to the hook normalization: each box contributes
    (x_{T(s)} - q^{a'(s)} t^{l'(s)}) t^{T(s)-1}."""
    lam = pt.as_partition(lam)
    space = VarSpace.z(N)
    total = MultiPoly.zero(space)
    for tab in reverse_tableaux(lam, N):
        w = tab.weight_in_chain()
        if w.is_zero():
            continue
        term = MultiPoly.constant(space, w)
        for box, entry in tab.entries.items():
            factor = (MultiPoly.variable(space, entry - 1)
                      - MultiPoly.constant(space, _box_node(box)))
            term = term * factor.scale(t_pow(entry - 1))
        total = total + term
    return total.scale(pt.normalization_alignment(lam))


def duality_check(lam, mu, N=None):
    """Exact check of the evaluation duality: the value of the lambda
    polynomial at q^mu equals the hook ratio times the value of the
    conjugate-shape polynomial, with parameters exchanged, at t^{mu'}."""
    lam, mu = pt.as_partition(lam), pt.as_partition(mu)
    if N is None:
        N = max(pt.weight(lam), pt.weight(mu), len(lam), len(mu), 1)
    lhs = evaluate_at_partition(interpolation_polynomial(lam, N), mu, "q")
    lamc = pt.conjugate(lam)
    ratio = pt.hook_product(lam) / pt.hook_product(lamc).swap_qt()
    rhs_poly = interpolation_polynomial(lamc, N).swap_parameters()
    rhs = ratio * evaluate_at_partition(rhs_poly, pt.conjugate(mu), "t")
    return lhs == rhs


# ---------------------------------------------------------------------------
# the shifted restriction and its tableau formula
# ---------------------------------------------------------------------------

def fat_hook_point(lam, n, m):
    """The (n + m)-coordinate evaluation point attached to a fat-hook shape:
    q^{lambda_i} on the x-block and t^{mu'_j} t^n on the y-block, where mu
    is the part of the diagram below row n."""
    lam = pt.as_partition(lam)
    if not pt.in_fat_hook(lam, n, m):
        raise InvalidPartitionError(f"{lam} is outside the fat ({n}, {m})-hook")
    mu = lam[n:]
    muc = pt.conjugate(mu)
    point = [q_pow(pt.part(lam, i + 1)) for i in range(n)]
    point += [t_pow(pt.part(muc, j + 1) + n) for j in range(m)]
    return point


def shifted_super_macdonald(lam, n, m):
    """Image of the interpolation polynomial under the shifted restriction;
    exactly zero when the diagram leaves the fat (n, m)-hook."""
    lam = pt.as_partition(lam)
    N = max(pt.weight(lam), len(lam), 1)
    P = interpolation_polynomial(lam, N)
    return restrict_shifted_expansion(to_shifted_power_expansion(P), n, m)


def shifted_super_tableau_sum(lam, n, m):
    """The shifted two-alphabet polynomial as a bitableau sum.

    Unprimed boxes contribute (x_k - q^{a'} t^{l'}) t^{k-1}; primed boxes
    contribute (y_j - q^{a'} t^{l'} t^n) q^{j-1}, the extra t^n being the
    block offset of the evaluation points (pinned against the restriction
    route).  The whole sum carries the same alignment factor as the other
    tableau formulas.
    """
    lam = pt.as_partition(lam)
    if not pt.in_fat_hook(lam, n, m):
        raise InvalidPartitionError(f"{lam} is outside the fat ({n}, {m})-hook")
    space = VarSpace.xy(n, m)
    tn = t_pow(n)
    total = MultiPoly.zero(space)
    for tab in bitableaux(lam, n, m):
        mu = tab.inner
        ratio = pt.hook_product(mu) / pt.hook_product(pt.conjugate(mu)).swap_qt()
        w = (tab.unprimed.weight_in_chain()
             * tab.primed_conjugate.weight_in_chain().swap_qt() * ratio)
        if w.is_zero():
            continue
        term = MultiPoly.constant(space, w)
        for box, entry in tab.unprimed.entries.items():
            factor = (MultiPoly.variable(space, entry - 1)
                      - MultiPoly.constant(space, _box_node(box)))
            term = term * factor.scale(t_pow(entry - 1))
        for box, entry in tab.primed_entries().items():
            factor = (MultiPoly.variable(space, n + entry - 1)
                      - MultiPoly.constant(space, _box_node(box) * tn))
            term = term * factor.scale(q_pow(entry - 1))
        total = total + term
    return total.scale(pt.normalization_alignment(lam))
