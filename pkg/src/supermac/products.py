"""Scalar products on symmetric superpolynomials.

Every product is diagonal in the power-sum basis: <p_L, p_O> =
(-1)^C(m,2) * z(L) * delta(L,O) for a weight z depending on the kind.
The global sign lives here, never in the stored weights.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .algebra import MPoly, RatFunc, poly_gcd, rf
from .superpartitions import enumerate_sparts, zsym
from .engine import (
    ConcreteSuperPoly,
    SymSuperPoly,
    expand_powersum,
    monomial_to_p_coords,
    m_to_p_matrix,
)

WEIGHT_KINDS = (
    "jack-alpha",
    "invalidated-f",
    "tau-t",
    "tau-qinv",
    "new",
    "primed",
    "schur-tt",
    "hl-bar",
)

_Q = MPoly.var_q()
_T = MPoly.var_t()
_ONE = MPoly.one()


def _qpow(k):
    return MPoly.monomial(1, k, 0)


def _tpow(k):
    return MPoly.monomial(1, 0, k)


@lru_cache(maxsize=None)
def zweight(kind, sp):
    """Diagonal power-sum weight z(Lambda) for the given product kind
    (the (-1)^C(m,2) sign is excluded; scalar_product applies it)."""
    if kind not in WEIGHT_KINDS:
        raise ValueError(f"unknown weight kind: {kind!r}")
    boso = sp.bosonic
    ferm = sp.fermionic
    z = zsym(boso)
    if kind == "jack-alpha":
        # alpha lives in the q slot; t is unused in this mode
        ell = sp.m + len(boso)
        return rf(MPoly.monomial(z, ell, 0))
    if kind == "schur-tt":
        return rf(MPoly.monomial(z, 0, sum(ferm)))
    num = MPoly.const(z)
    den = _ONE
    if kind in ("invalidated-f", "tau-t"):
        for k in sp.circled():
            num = num * (_ONE - _qpow(k))
            den = den * (_ONE - _tpow(k))
        return rf(num, den)
    if kind == "tau-qinv":
        # fermionic factor (1-q^(k+1))/(1-q^-(k+1)) = -q^(k+1)
        sign = -1 if sp.m % 2 else 1
        num = MPoly.const(sign * z)
        num = num * _qpow(sum(ferm) + sp.m)
        for k in boso:
            num = num * (_ONE - _qpow(k))
            den = den * (_ONE - _tpow(k))
        return rf(num, den)
    for k in boso:
        if kind == "hl-bar":
            den = den * (_ONE - _tpow(k))
        else:
            num = num * (_ONE - _qpow(k))
            den = den * (_ONE - _tpow(k))
    if kind == "new":
        num = num * _qpow(sum(ferm))
    elif kind in ("primed", "hl-bar"):
        den = den * _tpow(sum(ferm))
    return rf(num, den)


def product_sign(m):
    return -1 if (m * (m - 1) // 2) % 2 else 1


@lru_cache(maxsize=None)
def weight_vector(n, m, kind):
    """Weights of all superpartitions of degree (n|m), in the fixed order."""
    return tuple(zweight(kind, sp) for sp in enumerate_sparts(n, m))


class ClearedVector:
    """A vector of rational functions over one common denominator.

    Keeping sums and scalings in this form defers all gcd work to a
    single reduction per produced coefficient, which is what makes the
    family builds fast.
    """

    __slots__ = ("nums", "den")

    def __init__(self, nums, den=_ONE):
        self.nums = nums
        self.den = den

    @classmethod
    def from_fractions(cls, fractions):
        scale = 1
        for f in fractions:
            scale = scale * f.denominator // _gcd_int(scale, f.denominator)
        nums = [MPoly.const(f.numerator * (scale // f.denominator))
                for f in fractions]
        return cls(nums, MPoly.const(scale))

    @classmethod
    def from_ratfuncs(cls, values):
        den = _ONE
        for v in values:
            g = poly_gcd(den, v.den)
            den = den * v.den.divexact(g)
        nums = [v.num * den.divexact(v.den) for v in values]
        return cls(nums, den)

    def entry(self, i):
        return RatFunc.make(self.nums[i], self.den)

    def entries(self):
        return [RatFunc.make(nu, self.den) for nu in self.nums]

    def add_scaled(self, other, factor):
        """self + factor * other, in place; one gcd total."""
        d2 = factor.den * other.den
        g = poly_gcd(self.den, d2)
        c_self = d2.divexact(g)
        c_other = factor.num * self.den.divexact(g)
        if c_self.terms == {(0, 0): 1}:
            self.nums = [a + c_other * b for a, b in zip(self.nums, other.nums)]
        else:
            self.nums = [a * c_self + c_other * b
                         for a, b in zip(self.nums, other.nums)]
            self.den = self.den * c_self

    def reduced(self):
        """Divide out the common polynomial and integer content."""
        g = self.den
        for nu in self.nums:
            if nu.is_zero():
                continue
            g = poly_gcd(g, nu)
            if g.terms == {(0, 0): 1}:
                break
        if g.terms != {(0, 0): 1}:
            self.nums = [nu.divexact(g) if nu else nu for nu in self.nums]
            self.den = self.den.divexact(g)
        ic = self.den.int_content()
        for nu in self.nums:
            ic = _gcd_int(ic, nu.int_content())
            if ic == 1:
                break
        _, lead = self.den.leading()
        if lead < 0:
            ic = -ic
        if ic != 1:
            self.nums = [MPoly({e: c // ic for e, c in nu.terms.items()})
                         for nu in self.nums]
            self.den = MPoly({e: c // ic for e, c in self.den.terms.items()})
        return self


def _gcd_int(a, b):
    return math.gcd(a, b)


@lru_cache(maxsize=None)
def weight_factors(n, m, kind):
    """(W, factors): W is the common denominator of the degree's weights
    and factors[i] = weight_i * W, a polynomial."""
    weights = weight_vector(n, m, kind)
    W = _ONE
    for w in weights:
        g = poly_gcd(W, w.den)
        W = W * w.den.divexact(g)
    factors = tuple(w.num * W.divexact(w.den) for w in weights)
    return W, factors


def pair_cleared(n, m, kind, a, b):
    """Scalar product of two ClearedVector power-sum coordinate vectors."""
    W, factors = weight_factors(n, m, kind)
    total = MPoly.zero()
    for f, na, nb in zip(factors, a.nums, b.nums):
        if na.is_zero() or nb.is_zero():
            continue
        total = total + f * na * nb
    if product_sign(m) < 0:
        total = -total
    return RatFunc.make(total, W * (a.den * b.den))


def pair_p_coords(n, m, kind, a_coords, b_coords):
    """Scalar product of two power-sum coordinate vectors of RatFunc."""
    return pair_cleared(n, m, kind,
                        ClearedVector.from_ratfuncs(a_coords),
                        ClearedVector.from_ratfuncs(b_coords))


def scalar_product(f, g, kind):
    """Bilinear symmetric product of two same-degree superpolynomials."""
    if (f.n, f.m) != (g.n, g.m):
        raise ValueError("scalar product requires equal degrees")
    return pair_p_coords(f.n, f.m, kind,
                         monomial_to_p_coords(f), monomial_to_p_coords(g))


@lru_cache(maxsize=None)
def gram_matrix(n, m, kind):
    """Gram matrix of the monomial basis at degree (n|m)."""
    order, inv = m_to_p_matrix(n, m)
    W, factors = weight_factors(n, m, kind)
    sign = product_sign(m)
    k = len(order)
    rows = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            total = MPoly.zero()
            scale = 1
            terms = []
            for mu in range(k):
                a, b = inv[i][mu], inv[j][mu]
                if not a or not b:
                    continue
                frac = a * b
                terms.append((frac, factors[mu]))
                scale = scale * frac.denominator // math.gcd(
                    scale, frac.denominator)
            for frac, f in terms:
                total = total + int(frac * scale) * f
            if sign < 0:
                total = -total
            entry = RatFunc.make(total, MPoly.const(scale) * W)
            rows[i][j] = entry
            rows[j][i] = entry
    return order, tuple(tuple(r) for r in rows)


# ---------------------------------------------------------------------------
# truncated reproducing-kernel identity
# ---------------------------------------------------------------------------

def _qbinomial_series(k):
    """Coefficient of z^k in (tz;q)_inf / (z;q)_inf: (t;q)_k / (q;q)_k."""
    num = _ONE
    den = _ONE
    for j in range(k):
        num = num * (_ONE - _tpow(1) * _qpow(j))
        den = den * (_ONE - _qpow(j + 1))
    return rf(num, den)


def kernel_truncated_check(max_degree, nx, ny):
    """Expand both sides of the reproducing-kernel identity up to total
    x-degree max_degree and compare coefficientwise."""
    if max_degree > 3 or nx > 2 or ny > 2:
        raise ValueError("kernel check is desk-scale only")
    nvars = nx + ny
    xpos = tuple(range(nx))
    qinv = rf(_ONE, _Q)

    lhs = ConcreteSuperPoly.one(nvars)
    for i in range(nx):
        for j in range(ny):
            # bosonic factor: sum_k (t;q)_k/(q;q)_k (x_i y_j)^k
            terms = {}
            for k in range(max_degree + 1):
                e = [0] * nvars
                e[i] = k
                e[nx + j] = k
                terms[((), tuple(e))] = _qbinomial_series(k)
            factor = ConcreteSuperPoly(nvars, terms)
            lhs = lhs.mul_pruned(factor, degree_bound=max_degree,
                                 degree_positions=xpos)
            # fermionic factor: 1 + theta_i phi_j sum_k q^-k (x_i y_j)^k
            terms = {((), (0,) * nvars): RatFunc.one()}
            for k in range(max_degree + 1):
                e = [0] * nvars
                e[i] = k
                e[nx + j] = k
                terms[((i, nx + j), tuple(e))] = qinv**k if k else RatFunc.one()
            factor = ConcreteSuperPoly(nvars, terms)
            lhs = lhs.mul_pruned(factor, degree_bound=max_degree,
                                 degree_positions=xpos)

    rhs = ConcreteSuperPoly.zero(nvars)
    for n in range(max_degree + 1):
        for m in range(min(nx, ny) + 1):
            for sp in enumerate_sparts(n, m):
                z = zweight("new", sp)
                px = expand_powersum(sp, nx).embed(nvars, 0)
                py = expand_powersum(sp, ny).embed(nvars, nx)
                if px.is_zero() or py.is_zero():
                    continue
                coeff = z.inverse()
                if product_sign(m) < 0:
                    coeff = -coeff
                rhs = rhs + px.mul_pruned(py).scale(coeff)

    return lhs.terms == rhs.terms
