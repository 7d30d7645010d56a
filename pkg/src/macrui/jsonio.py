"""Deterministic JSON forms of scalars, polynomials, and expansions.

Scalars serialize numerator and denominator as lists of
[q_exponent, t_exponent, coefficient-as-decimal-string] triples sorted by
(q_exponent, t_exponent); polynomials as a term list of {"exp", "coeff"}
with exponents in block order; partitions as plain integer arrays.  All
emitters sort, so equal values produce identical bytes.
"""

from __future__ import annotations

from .errors import MacruiError
from .partitions import as_partition
from .polyring import MultiPoly, VarSpace
from .scalar import QTPolynomial, QTScalar
from .symfun import SymExpansion


def qtpoly_to_json(p):
    return [[a, b, str(c)] for (a, b), c in sorted(p.terms.items())]


def qtpoly_from_json(data):
    return QTPolynomial({(int(a), int(b)): int(c) for a, b, c in data})


def scalar_to_json(s):
    return {"num": qtpoly_to_json(s.num), "den": qtpoly_to_json(s.den)}


def scalar_from_json(data):
    return QTScalar(qtpoly_from_json(data["num"]), qtpoly_from_json(data["den"]))


def space_to_json(space):
    if space.kind == "z":
        return {"kind": "z", "N": space.n}
    return {"kind": "xy", "n": space.n, "m": space.m}


def space_from_json(data):
    if data["kind"] == "z":
        return VarSpace.z(int(data["N"]))
    if data["kind"] == "xy":
        return VarSpace.xy(int(data["n"]), int(data["m"]))
    raise MacruiError(f"unknown space kind {data.get('kind')!r}")


def poly_to_json(f):
    terms = [{"exp": list(e), "coeff": scalar_to_json(c)}
             for e, c in sorted(f.terms.items())]
    return {"space": space_to_json(f.space), "terms": terms}


def poly_from_json(data):
    space = space_from_json(data["space"])
    terms = {tuple(t["exp"]): scalar_from_json(t["coeff"]) for t in data["terms"]}
    return MultiPoly(space, terms)


def expansion_to_json(e):
    terms = [{"partition": list(lam), "coeff": scalar_to_json(c)}
             for lam, c in sorted(e.coeffs.items())]
    return {"basis": e.basis, "N": e.N, "terms": terms}


def expansion_from_json(data):
    coeffs = {as_partition(t["partition"]): scalar_from_json(t["coeff"])
              for t in data["terms"]}
    return SymExpansion(data["basis"], int(data["N"]), coeffs)


def poly_to_json_at(f, q0, t0):
    """Polynomial JSON with coefficients evaluated to exact rationals."""
    terms = [{"exp": list(e), "coeff": str(c.evaluate(q0, t0))}
             for e, c in sorted(f.terms.items())]
    return {"space": space_to_json(f.space), "terms": terms,
            "at": {"q": str(q0), "t": str(t0)}}


def scalar_to_json_at(s, q0, t0):
    return {"value": str(s.evaluate(q0, t0)), "at": {"q": str(q0), "t": str(t0)}}
