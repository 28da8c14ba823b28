"""Exact arithmetic over the field Q(q,t).

A polynomial is stored sparsely as a dict mapping exponent pairs
(e_q, e_t) to arbitrary-precision integer coefficients; zero
coefficients are never stored, so two polynomials are equal iff their
term dicts are equal.  Rational functions are kept fully reduced: the
numerator/denominator gcd is trivial, the integer content is divided
out, and the denominator's leading coefficient under graded-lex order
(q before t) is positive.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

import math
from fractions import Fraction


class AlgebraError(Exception):
    pass


class SubstitutionDivergence(AlgebraError):
    """The denominator vanishes identically under a substitution."""


class PoleError(AlgebraError):
    """Evaluation at a point where the denominator vanishes."""


class AmbiguousSystemError(AlgebraError):
    """Linear system whose column space is rank deficient."""


def _grlex(exp):
    # graded-lex with q ranked before t
    return (exp[0] + exp[1], exp[0])


def _render_key(exp):
    # canonical term sequence: ascending degree, q-heavy terms first
    return (exp[0] + exp[1], -exp[0])


class MPoly:
    """Sparse polynomial in q and t with integer coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms):
        self.terms = terms
        self._hash = None

    @classmethod
    def zero(cls):
        return _MP_ZERO

    @classmethod
    def one(cls):
        return _MP_ONE

    @classmethod
    def const(cls, c):
        c = int(c)
        return cls({(0, 0): c}) if c else cls({})

    @classmethod
    def monomial(cls, c, e_q, e_t):
        c = int(c)
        return cls({(e_q, e_t): c}) if c else cls({})

    @classmethod
    def var_q(cls):
        return _MP_Q

    @classmethod
    def var_t(cls):
        return _MP_T

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items())))
        return self._hash

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return MPoly.const(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _MP_ZERO
            return MPoly({e: c * other for e, c in self.terms.items()})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for (aq, at), ac in a.items():
            for (bq, bt), bc in b.items():
                e = (aq + bq, at + bt)
                s = out.get(e, 0) + ac * bc
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = _MP_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def leading(self):
        """First (exponent, coefficient) in the canonical term order:
        lowest total degree first, q before t within a degree.  This is
        the term that anchors sign normalization, so reduced fractions
        render like (q-q*t)/(1-q*t) rather than with a negated constant.
        """
        e = min(self.terms, key=_render_key)
        return e, self.terms[e]

    def degree(self):
        return max((eq + et for eq, et in self.terms), default=-1)

    def deg_q(self):
        return max((eq for eq, _ in self.terms), default=-1)

    def deg_t(self):
        return max((et for _, et in self.terms), default=-1)

    def int_content(self):
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    def divexact(self, d):
        """Exact division by d; raises ArithmeticError if not exact."""
        if not d.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if d.terms == {(0, 0): 1}:
            return self
        if len(d.terms) == 1:
            (dq, dt), dc = next(iter(d.terms.items()))
            out = {}
            for (eq, et), c in self.terms.items():
                if eq < dq or et < dt or c % dc:
                    raise ArithmeticError("inexact division")
                out[(eq - dq, et - dt)] = c // dc
            return MPoly(out)
        rem = dict(self.terms)
        (lq, lt), lc = max(d.terms, key=_grlex), None
        lc = d.terms[(lq, lt)]
        quot = {}
        while rem:
            (eq, et) = max(rem, key=_grlex)
            c = rem[(eq, et)]
            if eq < lq or et < lt or c % lc:
                raise ArithmeticError("inexact division")
            qe = (eq - lq, et - lt)
            qc = c // lc
            quot[qe] = qc
            for (dq, dt), dc in d.terms.items():
                e = (qe[0] + dq, qe[1] + dt)
                s = rem.get(e, 0) - qc * dc
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        return MPoly(quot)

    def subs_point(self, q0, t0):
        """Exact value at rational point (q0, t0)."""
        total = Fraction(0)
        for (eq, et), c in self.terms.items():
            total += c * q0**eq * t0**et
        return total

    def to_text(self):
        """Canonical rendering in the fixed term order."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_render_key):
            c = self.terms[e]
            body = _term_text(abs(c), e)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+" if c > 0 else "-") + body)
        return "".join(parts)

    def __repr__(self):
        return f"MPoly({self.to_text()})"


def _term_text(c, exp):
    eq, et = exp
    factors = []
    if c != 1 or (eq == 0 and et == 0):
        factors.append(str(c))
    if eq:
        factors.append("q" if eq == 1 else f"q^{eq}")
    if et:
        factors.append("t" if et == 1 else f"t^{et}")
    return "*".join(factors)


_MP_ZERO = MPoly({})
_MP_ONE = MPoly({(0, 0): 1})
_MP_Q = MPoly({(1, 0): 1})
_MP_T = MPoly({(0, 1): 1})


# ---------------------------------------------------------------------------
# gcd: primitive PRS treating polynomials as elements of Z[t][q]
# ---------------------------------------------------------------------------

def _tp_is_zero(p):
    return not p


def _tp_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _tp_scale(a, c):
    if c == 0:
        return {}
    return {e: k * c for e, k in a.items()}


def _tp_sub(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _tp_deg(a):
    return max(a, default=-1)


def _tp_content(a):
    g = 0
    for c in a.values():
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _tp_div_int(a, g):
    if g == 1:
        return a
    return {e: c // g for e, c in a.items()}


def _tp_shift(a, k):
    return {e + k: c for e, c in a.items()}


def _tp_prem(a, b):
    """Pseudo-remainder of a by b in Z[t]."""
    db = _tp_deg(b)
    lb = b[db]
    r = dict(a)
    while r and _tp_deg(r) >= db:
        dr = _tp_deg(r)
        lr = r[dr]
        r = _tp_sub(_tp_scale(r, lb), _tp_shift(_tp_scale(b, lr), dr - db))
    return r


def _tp_gcd(a, b):
    """gcd in Z[t], including the integer content, leading coeff > 0."""
    if _tp_is_zero(a):
        g = dict(b)
    elif _tp_is_zero(b):
        g = dict(a)
    else:
        ca, cb = _tp_content(a), _tp_content(b)
        cg = math.gcd(ca, cb)
        A = _tp_div_int(a, ca)
        B = _tp_div_int(b, cb)
        if _tp_deg(A) < _tp_deg(B):
            A, B = B, A
        while not _tp_is_zero(B):
            R = _tp_prem(A, B)
            if not _tp_is_zero(R):
                R = _tp_div_int(R, _tp_content(R))
            A, B = B, R
        g = _tp_scale(A, cg)
    if g and g[_tp_deg(g)] < 0:
        g = _tp_scale(g, -1)
    return g


def _to_qdict(p):
    out = {}
    for (eq, et), c in p.terms.items():
        out.setdefault(eq, {})[et] = c
    return out


def _from_qdict(d):
    terms = {}
    for eq, tp in d.items():
        for et, c in tp.items():
            terms[(eq, et)] = c
    return MPoly(terms)


def _qd_deg(d):
    return max(d, default=-1)


def _qd_content(d):
    g = {}
    for tp in d.values():
        g = _tp_gcd(g, tp)
        if g == {0: 1}:
            return g
    return g


def _tp_divexact(a, b):
    """Exact division in Z[t]."""
    if _tp_is_zero(a):
        return {}
    db = _tp_deg(b)
    lb = b[db]
    rem = dict(a)
    quot = {}
    while rem:
        dr = _tp_deg(rem)
        c = rem[dr]
        if dr < db or c % lb:
            raise ArithmeticError("inexact t-division")
        qc = c // lb
        quot[dr - db] = qc
        rem = _tp_sub(rem, _tp_shift(_tp_scale(b, qc), dr - db))
    return quot


def _qd_div_tp(d, g):
    if g == {0: 1}:
        return d
    return {eq: _tp_divexact(tp, g) for eq, tp in d.items()}


def _qd_prem(a, b):
    """Pseudo-remainder in q of a by b, coefficients in Z[t]."""
    db = _qd_deg(b)
    lb = b[db]
    r = {eq: dict(tp) for eq, tp in a.items()}
    while r and _qd_deg(r) >= db:
        dr = _qd_deg(r)
        lr = r[dr]
        new = {}
        for eq, tp in r.items():
            if eq == dr:
                continue
            new[eq] = _tp_mul(tp, lb)
        for eq, tp in b.items():
            if eq == db:
                continue
            target = eq + dr - db
            prod = _tp_mul(tp, lr)
            if target in new:
                new[target] = _tp_sub(new[target], prod)
                if _tp_is_zero(new[target]):
                    del new[target]
            else:
                neg = _tp_scale(prod, -1)
                if neg:
                    new[target] = neg
        r = new
    return r


def _monomial_factor(p):
    """Largest (e_q, e_t) dividing every term of p."""
    mq = min(eq for eq, _ in p.terms)
    mt = min(et for _, et in p.terms)
    return mq, mt


_GCD_CACHE = {}
_GCD_CACHE_MAX = 200000


def poly_gcd(a, b):
    """Primitive, sign-normalized gcd of two polynomials.

    The integer content is stripped from the result (RatFunc reduction
    handles integer content separately); the anchor coefficient is
    positive.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero():
        return _normalize_primitive(b)
    if b.is_zero():
        return _normalize_primitive(a)
    if a.terms == b.terms:
        return _normalize_primitive(a)
    key = (a, b) if len(a.terms) <= len(b.terms) else (b, a)
    hit = _GCD_CACHE.get(key)
    if hit is not None:
        return hit
    g = _poly_gcd_raw(*key)
    if len(_GCD_CACHE) < _GCD_CACHE_MAX:
        _GCD_CACHE[key] = g
    return g


def _poly_gcd_raw(a, b):
    # common monomial factor: cheap, frequent, and it shrinks the PRS
    aq, at = _monomial_factor(a)
    bq, bt = _monomial_factor(b)
    mq, mt = min(aq, bq), min(at, bt)
    if len(a.terms) == 1 or len(b.terms) == 1:
        return MPoly({(mq, mt): 1})
    if aq or at:
        a = MPoly({(eq - aq, et - at): c for (eq, et), c in a.terms.items()})
    if bq or bt:
        b = MPoly({(eq - bq, et - bt): c for (eq, et), c in b.terms.items()})
    # one exact-division probe: reductions very often share whole factors
    small, large = (a, b) if len(a.terms) <= len(b.terms) else (b, a)
    try:
        large.divexact(small)
    except ArithmeticError:
        pass
    else:
        g = _normalize_primitive(small)
        return _attach_monomial(g, mq, mt)
    # PRS over the variable of smaller degree
    if max(a.deg_q(), b.deg_q()) <= max(a.deg_t(), b.deg_t()):
        qa, qb = _to_qdict(a), _to_qdict(b)
        g = _gcd_qdicts(qa, qb)
        g = _from_qdict(g)
    else:
        qa = _to_qdict(_swap_vars(a))
        qb = _to_qdict(_swap_vars(b))
        g = _gcd_qdicts(qa, qb)
        g = _swap_vars(_from_qdict(g))
    return _attach_monomial(_normalize_primitive(g), mq, mt)


def _attach_monomial(g, mq, mt):
    if mq or mt:
        return MPoly({(eq + mq, et + mt): c for (eq, et), c in g.terms.items()})
    return g


def _swap_vars(p):
    return MPoly({(et, eq): c for (eq, et), c in p.terms.items()})


def _gcd_qdicts(qa, qb):
    ca = _qd_content(qa)
    cb = _qd_content(qb)
    cg = _tp_gcd(ca, cb)
    A = _qd_div_tp(qa, ca)
    B = _qd_div_tp(qb, cb)
    if _qd_deg(A) < _qd_deg(B):
        A, B = B, A
    while B:
        if _qd_deg(B) == 0:
            # unit in q: gcd of primitive parts is the t-content gcd, 1 here
            A = {0: {0: 1}}
            B = {}
            break
        R = _qd_prem(A, B)
        if R:
            R = _qd_div_tp(R, _qd_content(R))
        A, B = B, R
    A = _qd_div_tp(A, _qd_content(A))
    out = {}
    for eq, tp in A.items():
        prod = _tp_mul(tp, cg)
        if prod:
            out[eq] = prod
    return out


def _normalize_primitive(p):
    c = p.int_content()
    _, lead = p.leading()
    if lead < 0:
        c = -c
    if c != 1:
        p = MPoly({e: k // c for e, k in p.terms.items()})
    return p


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------

def _reduce_pair(num, den):
    if den.is_zero():
        raise ZeroDivisionError("zero divisor")
    if num.is_zero():
        return _MP_ZERO, _MP_ONE
    g = poly_gcd(num, den)
    if g.terms != {(0, 0): 1}:
        num = num.divexact(g)
        den = den.divexact(g)
    ig = math.gcd(num.int_content(), den.int_content())
    _, lead = den.leading()
    if lead < 0:
        ig = -ig
    if ig != 1:
        num = MPoly({e: c // ig for e, c in num.terms.items()})
        den = MPoly({e: c // ig for e, c in den.terms.items()})
    return num, den


class RatFunc:
    """Reduced fraction of two MPoly values: the coefficient field."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den):
        # assumes (num, den) already in canonical reduced form
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def make(cls, num, den=_MP_ONE):
        if isinstance(num, int):
            num = MPoly.const(num)
        if isinstance(den, int):
            den = MPoly.const(den)
        return cls(*_reduce_pair(num, den))

    @classmethod
    def zero(cls):
        return _RF_ZERO

    @classmethod
    def one(cls):
        return _RF_ONE

    @classmethod
    def from_int(cls, c):
        if c == 0:
            return _RF_ZERO
        if c == 1:
            return _RF_ONE
        return cls(MPoly.const(c), _MP_ONE)

    @classmethod
    def from_fraction(cls, f):
        f = Fraction(f)
        return cls.make(MPoly.const(f.numerator), MPoly.const(f.denominator))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.num.terms == {(0, 0): 1} and self.den.terms == {(0, 0): 1}

    def is_polynomial(self):
        return self.den.terms == {(0, 0): 1}

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den.terms == other.den.terms:
            return RatFunc.make(self.num + other.num, self.den)
        return RatFunc.make(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return RatFunc.from_int(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if not self.num or not other.num:
            return _RF_ZERO
        an, ad = self.num, self.den
        bn, bd = other.num, other.den
        g1 = poly_gcd(an, bd)
        if g1.terms != {(0, 0): 1}:
            an = an.divexact(g1)
            bd = bd.divexact(g1)
        g2 = poly_gcd(bn, ad)
        if g2.terms != {(0, 0): 1}:
            bn = bn.divexact(g2)
            ad = ad.divexact(g2)
        num = an * bn
        den = ad * bd
        ig = math.gcd(num.int_content(), den.int_content())
        _, lead = den.leading()
        if lead < 0:
            ig = -ig
        if ig != 1:
            num = MPoly({e: c // ig for e, c in num.terms.items()})
            den = MPoly({e: c // ig for e, c in den.terms.items()})
        return RatFunc(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if not other.num:
            raise ZeroDivisionError("zero divisor")
        return self * RatFunc(other.den, other.num)._resigned()

    def _resigned(self):
        _, lead = self.den.leading()
        if lead < 0:
            return RatFunc(-self.num, -self.den)
        return self

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = _RF_ONE
        for _ in range(k):
            out = out * self
        return out

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("zero divisor")
        return RatFunc(self.den, self.num)._resigned()

    def eval_point(self, q0, t0):
        """Exact rational value at (q0, t0); raises PoleError at poles."""
        q0, t0 = Fraction(q0), Fraction(t0)
        d = self.den.subs_point(q0, t0)
        if d == 0:
            raise PoleError("pole at evaluation point")
        return self.num.subs_point(q0, t0) / d

    def substitute(self, q_spec=None, t_spec=None):
        """Substitute into q and/or t.

        Each spec is one of: None (keep), the string "recip" (x -> 1/x,
        performed by clearing powers), the string "other" (q -> t), or a
        rational constant.  Raises SubstitutionDivergence if the
        denominator vanishes identically.
        """
        num, den = self.num, self.den
        if q_spec == "recip":
            mq = max(num.deg_q(), den.deg_q(), 0)
            num = MPoly({(mq - eq, et): c for (eq, et), c in num.terms.items()})
            den = MPoly({(mq - eq, et): c for (eq, et), c in den.terms.items()})
            q_spec = None
        if t_spec == "recip":
            mt = max(num.deg_t(), den.deg_t(), 0)
            num = MPoly({(eq, mt - et): c for (eq, et), c in num.terms.items()})
            den = MPoly({(eq, mt - et): c for (eq, et), c in den.terms.items()})
            t_spec = None
        num = _subst_terms(num, q_spec, t_spec)
        den = _subst_terms(den, q_spec, t_spec)
        scale = 1
        for f in list(num.values()) + list(den.values()):
            scale = scale * f.denominator // math.gcd(scale, f.denominator)
        n = MPoly({e: int(c * scale) for e, c in num.items() if c})
        d = MPoly({e: int(c * scale) for e, c in den.items() if c})
        if d.is_zero():
            raise SubstitutionDivergence("denominator vanishes under substitution")
        return RatFunc.make(n, d)

    def to_text(self):
        if self.is_polynomial():
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.den.to_text()})"

    def __repr__(self):
        return f"RatFunc({self.to_text()})"


def _subst_terms(p, q_spec, t_spec):
    out = {}
    for (eq, et), c in p.terms.items():
        coeff = Fraction(c)
        if q_spec is None:
            nq = eq
        elif q_spec == "other":
            nq, et = 0, et + eq
        else:
            v = Fraction(q_spec)
            if v == 0 and eq > 0:
                continue
            coeff *= v**eq
            nq = 0
        if t_spec is None:
            nt = et
        else:
            v = Fraction(t_spec)
            if v == 0 and et > 0:
                continue
            coeff *= v**et
            nt = 0
        e = (nq, nt)
        out[e] = out.get(e, Fraction(0)) + coeff
    return out


_RF_ZERO = RatFunc(_MP_ZERO, _MP_ONE)
_RF_ONE = RatFunc(_MP_ONE, _MP_ONE)

Q = _MP_Q
T = _MP_T
ONE = _MP_ONE
ZERO = _MP_ZERO


def rf(num, den=1):
    """Shorthand for a reduced rational function."""
    return RatFunc.make(num, den)


# ---------------------------------------------------------------------------
# linear solving
# ---------------------------------------------------------------------------

class SolveResult:
    """Outcome of solve_linear: a solution or an inconsistency witness."""

    __slots__ = ("solution", "witness")

    def __init__(self, solution=None, witness=None):
        self.solution = solution
        self.witness = witness

    @property
    def consistent(self):
        return self.witness is None


def _clear_row(row, rhs):
    """Scale one equation to polynomial entries (common denominator)."""
    den = _MP_ONE
    for entry in row + [rhs]:
        g = poly_gcd(den, entry.den)
        den = den * entry.den.divexact(g)
    cleared = [rf(e.num * den.divexact(e.den)) for e in row]
    return cleared, rf(rhs.num * den.divexact(rhs.den))


def solve_linear(matrix, rhs):
    """Solve an (over-determined) linear system over Q(q,t).

    Each equation is first cleared to polynomial form; rows beyond the
    first rank-many independent ones are residual checks, and the first
    violated one yields the inconsistency witness.  Elimination keeps
    entries as reduced fractions: at the system sizes arising here the
    gcd cancellation controls growth far better than polynomial
    cross-multiplication, whose minors reach infeasible degrees.
    Raises AmbiguousSystemError when the columns are dependent.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    if nrows < ncols:
        raise AmbiguousSystemError("ambiguous system")
    pivots = {}  # col -> (row of RatFunc, rhs RatFunc)
    for idx in range(nrows):
        row, b = _clear_row(list(matrix[idx]), rhs[idx])
        for col in sorted(pivots):
            if row[col].is_zero():
                continue
            prow, pb = pivots[col]
            f = row[col] / prow[col]
            row = [r - f * p if not p.is_zero() else r
                   for r, p in zip(row, prow)]
            b = b - f * pb
        piv_col = next((c for c in range(ncols) if row[c]), None)
        if piv_col is None:
            if not b.is_zero():
                return SolveResult(witness=idx)
            continue
        pivots[piv_col] = (row, b)
    if len(pivots) < ncols:
        raise AmbiguousSystemError("ambiguous system")
    solution = [None] * ncols
    for col in sorted(pivots, reverse=True):
        row, b = pivots[col]
        acc = b
        for c in range(col + 1, ncols):
            if row[c]:
                acc = acc - row[c] * solution[c]
        solution[col] = acc / row[col]
    return SolveResult(solution=solution)
