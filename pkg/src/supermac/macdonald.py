"""Triangular orthogonalization of Macdonald superpolynomials.

Families are built bottom-up along the fixed linear extension of
dominance.  For each label the coefficients on strictly dominated
comparable labels are determined by orthogonality against the
previously built polynomials; orthogonality against incomparable
previous labels is not imposable and is verified as a residual, which
is where over-determination shows up.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import MPoly, RatFunc, rf, solve_linear
from .superpartitions import (
    EQUAL,
    LESS,
    SuperPartition,
    bstat,
    bset,
    arms_legs,
    dominance_compare,
    enumerate_sparts,
    skew_cells,
    staircase,
    zeta,
)
from .engine import (
    SymSuperPoly,
    m_to_p_matrix,
    p_to_m_matrix,
    sym_to_concrete,
)
from .products import ClearedVector, gram_matrix, pair_cleared, product_sign


@dataclass
class MacdonaldFamily:
    n: int
    m: int
    kind: str
    order: tuple  # superpartitions, ascending in the linear extension
    polys: dict  # SuperPartition -> SymSuperPoly (monomial basis)
    p_coords: dict  # SuperPartition -> ClearedVector over the fixed order
    norms: dict  # SuperPartition -> <<P, P>> (sign included)
    failing_pairs: list = field(default_factory=list)

    @property
    def consistent(self):
        return not self.failing_pairs


@dataclass
class ConsistencyReport:
    n: int
    m: int
    kind: str
    num_superpartitions: int
    num_equations: int
    num_unknowns: int
    consistent: bool
    failing_pairs: list


class InconsistentFamilyError(Exception):
    def __init__(self, lam, om, residual):
        self.lam = lam
        self.om = om
        self.residual = residual
        super().__init__(
            f"orthogonality fails for {lam} vs {om}: {residual.to_text()}"
        )


def _count_comparable_pairs(order):
    count = 0
    for i, a in enumerate(order):
        for b in order[i + 1:]:
            if dominance_compare(a, b) != "incomparable":
                count += 1
    return count


def build_family(n, m, kind, check="abort"):
    """Construct the orthogonal triangular family at degree (n|m).

    check: "abort" raises InconsistentFamilyError at the first nonzero
    incomparable-pair residual; "collect" records every failing pair and
    keeps building, solving each square system explicitly.
    """
    full_order = enumerate_sparts(n, m)  # descending
    order = tuple(reversed(full_order))  # ascending: build bottom-up
    index = {sp: i for i, sp in enumerate(order)}
    _, inv = m_to_p_matrix(n, m)
    _, p_in_m = p_to_m_matrix(n, m)
    full_index = {sp: i for i, sp in enumerate(full_order)}
    k = len(order)

    def m_coords(sp):
        return ClearedVector.from_fractions(inv[full_index[sp]])

    def mono_dict(vec):
        # monomial coefficients of sum_mu c_mu p_mu: transpose of the
        # integer power-sum-to-monomial matrix applied to the vector
        out = {}
        for col, sp in enumerate(full_order):
            total = MPoly.zero()
            for mu in range(k):
                a = p_in_m[mu][col]
                if a and not vec.nums[mu].is_zero():
                    total = total + a * vec.nums[mu]
            if not total.is_zero():
                out[sp] = RatFunc.make(total, vec.den)
        return out

    polys = {}
    p_coords = {}
    norms = {}
    failing = []
    all_orthogonal = True

    def pair(vec, b_sp):
        return pair_cleared(n, m, kind, vec, p_coords[b_sp])

    for lam in order:
        lower = [om for om in order[:index[lam]]
                 if dominance_compare(om, lam) == LESS]
        lower_set = set(lower)
        others = [om for om in order[:index[lam]] if om not in lower_set]
        vec = m_coords(lam)
        if all_orthogonal:
            # previously built polynomials are pairwise orthogonal, so the
            # square system is solved by projection
            base = m_coords(lam)
            for om in lower:
                c = pair(base, om) / norms[om]
                if not c.is_zero():
                    vec.add_scaled(p_coords[om], -c)
        elif lower:
            # orthogonality against the built P's spanning the lower ideal
            # is equivalent to orthogonality against its monomials, so the
            # square system reads off the cached Gram matrix
            from .products import gram_matrix

            gorder, grows = gram_matrix(n, m, kind)
            gindex = {sp: i for i, sp in enumerate(gorder)}
            mat = [[grows[gindex[om2]][gindex[om]] for om2 in lower]
                   for om in lower]
            rhs = [-grows[gindex[lam]][gindex[om]] for om in lower]
            res = solve_linear(mat, rhs)
            for om, c in zip(lower, res.solution):
                if not c.is_zero():
                    vec.add_scaled(m_coords(om), c)
        vec.reduced()
        polys[lam] = SymSuperPoly("monomial", n, m, mono_dict(vec))
        p_coords[lam] = vec
        norms[lam] = pair(vec, lam)
        if norms[lam].is_zero():
            raise ArithmeticError(f"degenerate norm for {lam} under {kind}")
        for om in others:
            residual = pair(vec, om)
            if not residual.is_zero():
                if check == "abort":
                    raise InconsistentFamilyError(lam, om, residual)
                failing.append((om, lam, residual))
                all_orthogonal = False
    return MacdonaldFamily(n, m, kind, order, polys, p_coords, norms, failing)


@lru_cache(maxsize=None)
def family(n, m, kind="new"):
    """Cached consistent family; raises if the construction fails."""
    return build_family(n, m, kind, check="abort")


def consistency_report(n, m, kind="new"):
    order = enumerate_sparts(n, m)
    k = len(order)
    comparable = _count_comparable_pairs(order)
    fam = build_family(n, m, kind, check="collect")
    pairs = [
        (a.to_string(), b.to_string(), r.to_text())
        for a, b, r in fam.failing_pairs
    ]
    return ConsistencyReport(
        n=n,
        m=m,
        kind=kind,
        num_superpartitions=k,
        num_equations=k * (k - 1) // 2,
        num_unknowns=comparable,
        consistent=fam.consistent,
        failing_pairs=pairs,
    )


def orthogonality_matrix_ok(fam):
    """Post-hoc re-verification of full pairwise orthogonality."""
    order = fam.order
    for i, a in enumerate(order):
        for b in order[i + 1:]:
            prod = pair_cleared(fam.n, fam.m, fam.kind,
                                fam.p_coords[a], fam.p_coords[b])
            if not prod.is_zero():
                return False
    return True


def counterexample_invalidated(n=4, m=1):
    """Residual scalar product of the first incomparable pair under the
    invalidated weight, built with comparable-pair orthogonality only."""
    fam = build_family(n, m, "invalidated-f", check="collect")
    a = SuperPartition((2,), (1, 1))
    b = SuperPartition((0,), (2, 2))
    return pair_cleared(n, m, "invalidated-f", fam.p_coords[a], fam.p_coords[b])


def incomparable_residuals(n, m, kind):
    """All incomparable-pair residuals of the weak build at (n|m)."""
    fam = build_family(n, m, kind, check="collect")
    order = enumerate_sparts(n, m)
    out = {}
    for i, a in enumerate(order):
        for b in order[i + 1:]:
            if dominance_compare(a, b) == "incomparable":
                out[(a, b)] = pair_cleared(n, m, kind,
                                           fam.p_coords[a], fam.p_coords[b])
    return out


# ---------------------------------------------------------------------------
# norms (combinatorial and direct)
# ---------------------------------------------------------------------------

def _w_product(sp, swap):
    """prod over B(Lambda) of (1 - q^(a+1) t^(l~)), with q,t swapped when
    swap is true."""
    out = MPoly.one()
    for cell in sorted(bset(sp)):
        a, _, _, lt = arms_legs(sp, cell)
        if swap:
            out = out * (MPoly.one() - MPoly.monomial(1, lt, a + 1))
        else:
            out = out * (MPoly.one() - MPoly.monomial(1, a + 1, lt))
    return out


def w_poly(sp):
    """w_Lambda(q,t): the norm numerator product."""
    return _w_product(sp, swap=False)


def w_poly_conj_swapped(sp):
    """w_Lambda'(t,q): the norm denominator product."""
    return _w_product(sp.conjugate(), swap=True)


def norm_conjectured(sp):
    num = w_poly(sp)
    den = w_poly_conj_swapped(sp)
    ferm = sum(sp.fermionic)
    return rf(MPoly.monomial(1, ferm, 0) * num, den)


def norm_direct(fam, sp):
    """(-1)^C(m,2) <<P, P>>, from the stored family products."""
    value = fam.norms[sp]
    if product_sign(fam.m) < 0:
        return -value
    return value


# ---------------------------------------------------------------------------
# integral form
# ---------------------------------------------------------------------------

def integral_form(fam, sp):
    factor = rf(w_poly_conj_swapped(sp))
    return fam.polys[sp].map_coeffs(lambda c: c * factor)


def integrality_check(j_poly):
    """Every coefficient is a polynomial with integer coefficients."""
    return all(c.is_polynomial() for c in j_poly.coeffs.values())


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def _eval_points(N, m):
    pts = []
    for i in range(1, N + 1):
        e_t = i - 1
        e_q = max(m - i, 0)
        pts.append(rf(MPoly.monomial(1, 0, e_t), MPoly.monomial(1, e_q, 0)))
    return pts


def evaluate(f, N, m):
    """Specialization E_{N,m}: strip theta_1..theta_m, substitute the
    geometric evaluation points, divide by the Vandermonde factor."""
    if f.nvars != N:
        raise ValueError("variable count mismatch")
    if N < m:
        raise ValueError("need at least m variables")
    pts = _eval_points(N, m)
    lead = tuple(range(m))
    total = RatFunc.zero()
    for (thetas, exps), c in f.terms.items():
        if thetas != lead:
            continue
        value = c
        for u, e in zip(pts, exps):
            if e:
                value = value * u**e
        total = total + value
    vandermonde = RatFunc.one()
    for i in range(m):
        for j in range(i + 1, m):
            vandermonde = vandermonde * (pts[i] - pts[j])
    return total / vandermonde


def evaluate_poly(sym, N):
    """E_{N,m} of an abstract monomial-basis superpolynomial."""
    return evaluate(sym_to_concrete(sym, N), N, sym.m)


def evaluation_conjectured(sp, N):
    """Closed evaluation formula for the integral form J_Lambda."""
    circled = sp.circled()
    if N < len(circled):
        raise ValueError("too few variables for the evaluation formula")
    m = sp.m
    cells = skew_cells(sp)
    delta_m = staircase(m)
    ferm_skew = sum(sp.fermionic) - sum(delta_m)
    b_ferm = bstat(sp.fermionic) - bstat(delta_m)
    q_exp = (m - 1) * ferm_skew - b_ferm
    delta_m1 = tuple(max(m + 1 - i, 0) for i in range(1, len(circled) + 1))
    t_exp = zeta(sp) + bstat(circled) - bstat(delta_m1)
    prod = MPoly.one()
    for (i, j) in sorted(cells):
        prod = prod * (MPoly.one() - MPoly.monomial(1, j - 1, N - (i - 1)))
    num = MPoly.monomial(1, 0, t_exp) * prod
    if q_exp >= 0:
        return rf(num, MPoly.monomial(1, q_exp, 0))
    return rf(MPoly.monomial(1, -q_exp, 0) * num)
