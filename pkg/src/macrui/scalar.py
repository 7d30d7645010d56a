"""Exact arithmetic in the coefficient field Q(q, t).

Values are fractions of sparse integer polynomials in the two parameters
q and t, kept fully reduced so that equality of values is equality of
representations.  The normalization convention: numerator and denominator
share no common factor (including integer content), and the denominator's
lexicographically leading term (q before t) has a positive coefficient.
Zero is stored as 0/1.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction
from functools import reduce

from .errors import ScalarDivisionError, SpecialParameterError

try:  # mature gcd backend; the primitive PRS below is the fallback
    from sympy.polys.domains import ZZ as _SYMPY_ZZ
    from sympy.polys.rings import ring as _sympy_ring

    _SYMPY_RING = _sympy_ring("q,t", _SYMPY_ZZ)[0]
except Exception:  # pragma: no cover
    _SYMPY_RING = None


# ---------------------------------------------------------------------------
# univariate helpers (dict exponent -> int), used by the bivariate gcd
# ---------------------------------------------------------------------------

def _u_content(u):
    return reduce(math.gcd, u.values(), 0)


def _u_scale(u, k):
    if k == 1:
        return dict(u)
    return {e: c * k for e, c in u.items()}


def _u_mul(u, v):
    out = {}
    for e1, c1 in u.items():
        for e2, c2 in v.items():
            e = e1 + e2
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            elif e in out:
                del out[e]
    return out


def _u_primitive(u):
    """Divide by the integer content and make the leading coefficient positive."""
    if not u:
        return {}
    c = _u_content(u)
    if u[max(u)] < 0:
        c = -c
    return {e: v // c for e, v in u.items()}


def _u_prem(a, b):
    """Pseudo-remainder of a by b (b nonzero), over the integers."""
    db = max(b)
    lb = b[db]
    r = dict(a)
    while r:
        dr = max(r)
        if dr < db:
            break
        lr = r[dr]
        nr = {}
        for e, c in r.items():
            nr[e] = c * lb
        for e, c in b.items():
            k = e + dr - db
            s = nr.get(k, 0) - lr * c
            if s:
                nr[k] = s
            elif k in nr:
                del nr[k]
        r = nr
    return r


def _u_gcd(a, b):
    """Gcd in Z[x] by the primitive pseudo-remainder sequence."""
    if not a and not b:
        return {}
    if not a:
        return _u_scale(b, -1) if b[max(b)] < 0 else dict(b)
    if not b:
        return _u_gcd(b, a)
    ca, cb = _u_content(a), _u_content(b)
    c = math.gcd(ca, cb)
    pa, pb = _u_primitive(a), _u_primitive(b)
    while pb:
        r = _u_prem(pa, pb)
        pa, pb = pb, _u_primitive(r)
    return _u_scale(pa, c)


def _u_exact_div(a, b):
    """Exact division in Z[x]; raises ValueError when not divisible."""
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    r = dict(a)
    db = max(b)
    lb = b[db]
    quo = {}
    while r:
        dr = max(r)
        if dr < db or r[dr] % lb:
            raise ValueError("not divisible")
        qc = r[dr] // lb
        qe = dr - db
        quo[qe] = qc
        for e, c in b.items():
            k = e + qe
            s = r.get(k, 0) - qc * c
            if s:
                r[k] = s
            elif k in r:
                del r[k]
    return quo


# ---------------------------------------------------------------------------
# bivariate helpers: polynomials in q with coefficients in Z[t]
# ---------------------------------------------------------------------------

def _nested(terms):
    out = {}
    for (a, b), c in terms.items():
        out.setdefault(a, {})[b] = c
    return out


def _flattened(nested):
    out = {}
    for a, u in nested.items():
        for b, c in u.items():
            if c:
                out[(a, b)] = c
    return out


def _b_content(f):
    us = list(f.values())
    g = us[0]
    for u in us[1:]:
        g = _u_gcd(g, u)
        if g == {0: 1}:
            break
    return g


def _b_div_u(f, c):
    if c == {0: 1}:
        return f
    return {a: _u_exact_div(u, c) for a, u in f.items()}


def _b_primitive(f):
    if not f:
        return {}
    return _b_div_u(f, _b_content(f))


def _b_sub(f, g):
    out = {a: dict(u) for a, u in f.items()}
    for a, u in g.items():
        cur = out.setdefault(a, {})
        for e, c in u.items():
            s = cur.get(e, 0) - c
            if s:
                cur[e] = s
            elif e in cur:
                del cur[e]
        if not cur:
            del out[a]
    return out


def _b_mul_u(f, c):
    out = {}
    for a, u in f.items():
        p = _u_mul(u, c)
        if p:
            out[a] = p
    return out


def _b_prem(f, g):
    """Pseudo-remainder in (Z[t])[q]."""
    dg = max(g)
    lg = g[dg]
    r = f
    while r:
        dr = max(r)
        if dr < dg:
            break
        lr = r[dr]
        nr = _b_mul_u(r, lg)
        for a, u in g.items():
            k = a + dr - dg
            cur = nr.setdefault(k, {})
            prod = _u_mul(lr, u)
            for e, c in prod.items():
                s = cur.get(e, 0) - c
                if s:
                    cur[e] = s
                elif e in cur:
                    del cur[e]
            if not cur:
                del nr[k]
        r = nr
    return r


# ---------------------------------------------------------------------------
# public polynomial type
# ---------------------------------------------------------------------------

class QTPolynomial:
    """Sparse polynomial in q, t with arbitrary-precision integer coefficients.

    ``terms`` maps (q_exponent, t_exponent) to a nonzero integer; exponents
    are nonnegative.  Treat instances as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                a, b = key
                if a < 0 or b < 0:
                    raise ValueError("exponents must be nonnegative")
                c = int(c)
                if c:
                    clean[(int(a), int(b))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def from_int(cls, n):
        n = int(n)
        return cls._raw({(0, 0): n} if n else {})

    @classmethod
    def monomial(cls, qexp, texp, coeff=1):
        if qexp < 0 or texp < 0:
            raise ValueError("exponents must be nonnegative")
        return cls._raw({(qexp, texp): int(coeff)} if coeff else {})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QTPolynomial.from_int(other)
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return QTPolynomial._raw({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = QTPolynomial.from_int(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return QTPolynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = QTPolynomial.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return P_ZERO
            return QTPolynomial._raw({e: c * other for e, c in self.terms.items()})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            q1, t1 = e1
            for e2, c2 in b.items():
                e = (q1 + e2[0], t1 + e2[1])
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return QTPolynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = P_ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def lex_leading(self):
        """Leading (exponent, coefficient) for lexicographic order, q before t."""
        e = max(self.terms)
        return e, self.terms[e]

    def degree_q(self):
        return max((e[0] for e in self.terms), default=-1)

    def degree_t(self):
        return max((e[1] for e in self.terms), default=-1)

    def evaluate(self, q0, t0):
        q0, t0 = Fraction(q0), Fraction(t0)
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            total += c * q0 ** a * t0 ** b
        return total

    def swap_qt(self):
        return QTPolynomial._raw({(b, a): c for (a, b), c in self.terms.items()})

    def exact_divide(self, other):
        """Quotient self/other when the division is exact; ValueError otherwise."""
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        ge, gc = other.lex_leading()
        gtail = [(e, c) for e, c in other.terms.items() if e != ge]
        rem = dict(self.terms)
        quo = {}
        heap = [(-e[0], -e[1]) for e in rem]
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            e = (-k[0], -k[1])
            c = rem.pop(e, 0)
            if not c:
                continue
            if e[0] < ge[0] or e[1] < ge[1] or c % gc:
                raise ValueError("not divisible")
            qe = (e[0] - ge[0], e[1] - ge[1])
            qc = c // gc
            quo[qe] = quo.get(qe, 0) + qc
            for te, tc in gtail:
                ke = (qe[0] + te[0], qe[1] + te[1])
                s = rem.get(ke, 0) - qc * tc
                if s:
                    if ke not in rem:
                        heapq.heappush(heap, (-ke[0], -ke[1]))
                    rem[ke] = s
                elif ke in rem:
                    del rem[ke]
        return QTPolynomial._raw({e: c for e, c in quo.items() if c})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items(), reverse=True):
            factors = []
            if a:
                factors.append("q" if a == 1 else f"q^{a}")
            if b:
                factors.append("t" if b == 1 else f"t^{b}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"QTPolynomial({self})"


P_ZERO = QTPolynomial._raw({})
P_ONE = QTPolynomial._raw({(0, 0): 1})
P_Q = QTPolynomial._raw({(1, 0): 1})
P_T = QTPolynomial._raw({(0, 1): 1})


def qt_gcd(a, b):
    """A greatest common divisor in Z[q, t], content-and-sign normalized.

    The result exactly divides both inputs; its lexicographically leading
    coefficient is positive.  Raises ValueError for gcd(0, 0).
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero():
        return _sign_normalized(b)
    if b.is_zero():
        return _sign_normalized(a)
    if _SYMPY_RING is not None:
        g = _SYMPY_RING.from_dict(a.terms).gcd(_SYMPY_RING.from_dict(b.terms))
        out = {(int(e[0]), int(e[1])): int(c) for e, c in g.to_dict().items()}
        return _sign_normalized(QTPolynomial._raw(out))
    fa, fb = _nested(a.terms), _nested(b.terms)
    ca, cb = _b_content(fa), _b_content(fb)
    pa, pb = _b_div_u(fa, ca), _b_div_u(fb, cb)
    while pb:
        r = _b_prem(pa, pb)
        pa, pb = pb, (_b_primitive(r) if r else {})
    g = _b_mul_u(pa, _u_gcd(ca, cb))
    return _sign_normalized(QTPolynomial._raw(_flattened(g)))


def _sign_normalized(p):
    if p.terms and p.terms[max(p.terms)] < 0:
        return -p
    return p


# ---------------------------------------------------------------------------
# fraction field
# ---------------------------------------------------------------------------

class QTScalar:
    """An element of the field Q(q, t), stored as a reduced fraction."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = QTPolynomial.from_int(num)
        if den is None:
            den = P_ONE
        elif isinstance(den, int):
            den = QTPolynomial.from_int(den)
        if den.is_zero():
            raise ScalarDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = P_ZERO, P_ONE
            return
        if den.terms != P_ONE.terms:
            g = qt_gcd(num, den)
            if g.terms != P_ONE.terms:
                num = num.exact_divide(g)
                den = den.exact_divide(g)
        if den.terms == P_ONE.terms:
            den = P_ONE
        elif den.terms[max(den.terms)] < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def from_int(cls, n):
        return cls._raw(QTPolynomial.from_int(n), P_ONE)

    @classmethod
    def from_fraction(cls, fr):
        fr = Fraction(fr)
        return cls(QTPolynomial.from_int(fr.numerator),
                   QTPolynomial.from_int(fr.denominator))

    def is_zero(self):
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num.terms == other.num.terms and self.den.terms == other.den.terms

    def __hash__(self):
        return hash((frozenset(self.num.terms.items()),
                     frozenset(self.den.terms.items())))

    def __neg__(self):
        return QTScalar._raw(-self.num, self.den)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        d1, d2 = self.den, other.den
        if d1 is P_ONE and d2 is P_ONE:
            return QTScalar._raw(self.num + other.num, P_ONE)
        if d1.terms == d2.terms:
            num = self.num + other.num
            if num.is_zero():
                return S_ZERO
            g = qt_gcd(num, d1)
            if g.terms != P_ONE.terms:
                num, den = num.exact_divide(g), d1.exact_divide(g)
            else:
                den = d1
            return QTScalar._raw(num, P_ONE if den.terms == P_ONE.terms else den)
        # reduced addition: only gcd(d1, d2) and gcd(num, that) are needed
        g = P_ONE if (d1 is P_ONE or d2 is P_ONE) else qt_gcd(d1, d2)
        if g.terms == P_ONE.terms:
            num = self.num * d2 + other.num * d1
            if num.is_zero():
                return S_ZERO
            return QTScalar._raw(num, d1 * d2)
        d2r = d2.exact_divide(g)
        num = self.num * d2r + other.num * d1.exact_divide(g)
        if num.is_zero():
            return S_ZERO
        den = d1 * d2r
        h = qt_gcd(num, g)
        if h.terms != P_ONE.terms:
            num, den = num.exact_divide(h), den.exact_divide(h)
        return QTScalar._raw(num, P_ONE if den.terms == P_ONE.terms else den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return S_ZERO
        if self.den is P_ONE and other.den is P_ONE:
            return QTScalar._raw(self.num * other.num, P_ONE)
        # cross-cancellation keeps the product reduced without a final gcd
        n1, d2 = self.num, other.den
        if d2 is not P_ONE:
            g = qt_gcd(n1, d2)
            if g.terms != P_ONE.terms:
                n1, d2 = n1.exact_divide(g), d2.exact_divide(g)
        n2, d1 = other.num, self.den
        if d1 is not P_ONE:
            g = qt_gcd(n2, d1)
            if g.terms != P_ONE.terms:
                n2, d1 = n2.exact_divide(g), d1.exact_divide(g)
        den = d1 * d2
        if den.terms == P_ONE.terms:
            den = P_ONE
        return QTScalar._raw(n1 * n2, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ScalarDivisionError("inverse of zero")
        num, den = self.den, self.num
        if den.terms[max(den.terms)] < 0:
            num, den = -num, -den
        if den.terms == P_ONE.terms:
            den = P_ONE
        return QTScalar._raw(num, den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ScalarDivisionError("division by zero scalar")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return S_ONE
        den = self.den ** k
        if den.terms == P_ONE.terms:
            den = P_ONE
        return QTScalar._raw(self.num ** k, den)

    def evaluate(self, q0, t0):
        """Exact rational value at q=q0, t=t0; raises on a vanishing denominator."""
        dv = self.den.evaluate(q0, t0)
        if dv == 0:
            raise SpecialParameterError(
                f"denominator vanishes at q={q0}, t={t0}: special parameters")
        return self.num.evaluate(q0, t0) / dv

    def swap_qt(self):
        num, den = self.num.swap_qt(), self.den.swap_qt()
        if den.terms == P_ONE.terms:
            return QTScalar._raw(num, P_ONE)
        if den.terms[max(den.terms)] < 0:
            num, den = -num, -den
        return QTScalar._raw(num, den)

    def __str__(self):
        if self.den is P_ONE or self.den.terms == P_ONE.terms:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"QTScalar({self})"


S_ZERO = QTScalar._raw(P_ZERO, P_ONE)
S_ONE = QTScalar._raw(P_ONE, P_ONE)
S_Q = QTScalar._raw(P_Q, P_ONE)
S_T = QTScalar._raw(P_T, P_ONE)


def _coerce(x):
    if isinstance(x, QTScalar):
        return x
    if isinstance(x, int):
        return QTScalar.from_int(x)
    if isinstance(x, QTPolynomial):
        return QTScalar._raw(x, P_ONE)
    return NotImplemented


def qt_monomial(qexp, texp=0):
    """The scalar q^qexp * t^texp; exponents may be negative."""
    nq, nt = max(qexp, 0), max(texp, 0)
    dq, dt = max(-qexp, 0), max(-texp, 0)
    return QTScalar._raw(QTPolynomial.monomial(nq, nt),
                         P_ONE if not (dq or dt) else QTPolynomial.monomial(dq, dt))


def q_pow(r):
    """The scalar q^r for r >= 0."""
    return QTScalar._raw(QTPolynomial.monomial(r, 0), P_ONE)


def t_pow(r):
    """The scalar t^r for r >= 0."""
    return QTScalar._raw(QTPolynomial.monomial(0, r), P_ONE)


def one_minus_q(r=1):
    """The polynomial scalar 1 - q^r."""
    return QTScalar(P_ONE - QTPolynomial.monomial(r, 0))


def one_minus_t(r=1):
    """The polynomial scalar 1 - t^r."""
    return QTScalar(P_ONE - QTPolynomial.monomial(0, r))


def qt_ratio(r):
    """The scalar (1 - q^r) / (1 - t^r)."""
    return one_minus_q(r) / one_minus_t(r)


def qt_arith(a, b, op):
    """Field arithmetic dispatch: op in {'add', 'sub', 'mul', 'div'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ScalarDivisionError("division by zero scalar")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def qt_eval(s, q0, t0):
    """Exact rational value of a scalar at rational parameters."""
    return s.evaluate(q0, t0)
