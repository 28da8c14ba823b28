"""Concrete superpolynomials in N commuting and N anticommuting variables.

A ConcreteSuperPoly stores terms keyed by (theta indices, exponent
vector); theta indices are kept sorted ascending with the sign of the
sorting permutation absorbed into the coefficient, so the canonical
term of a monomial basis element always carries coefficient +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import RatFunc
from .superpartitions import SuperPartition, enumerate_sparts


def distinct_permutations(seq):
    """Distinct permutations of a sequence, in descending-lex order of
    the sorted-descending start (Knuth's algorithm L on the reverse)."""
    seq = sorted(seq)
    n = len(seq)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(seq)
        k = next((i for i in range(n - 2, -1, -1) if seq[i] < seq[i + 1]), None)
        if k is None:
            return
        i = next(i for i in range(n - 1, k, -1) if seq[k] < seq[i])
        seq[k], seq[i] = seq[i], seq[k]
        seq[k + 1:] = seq[:k:-1]


def _perm_sign(tup):
    inv = 0
    for i in range(len(tup)):
        for j in range(i + 1, len(tup)):
            if tup[i] > tup[j]:
                inv += 1
    return -1 if inv & 1 else 1


def _merge_thetas(ta, tb):
    """Merge two disjoint ascending index tuples; returns (merged, sign)."""
    inv = 0
    for x in ta:
        for y in tb:
            if x > y:
                inv += 1
    return tuple(sorted(ta + tb)), (-1 if inv & 1 else 1)


class ConcreteSuperPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = terms if terms is not None else {}

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {((), (0,) * nvars): RatFunc.one()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mismatched variable counts")
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return ConcreteSuperPoly(self.nvars, out)

    def __sub__(self, other):
        return self + other.scale(RatFunc.from_int(-1))

    def scale(self, c):
        if c.is_zero():
            return ConcreteSuperPoly.zero(self.nvars)
        return ConcreteSuperPoly(
            self.nvars, {k: v * c for k, v in self.terms.items()}
        )

    def __mul__(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mismatched variable counts")
        return self.mul_pruned(other)

    def mul_pruned(self, other, theta_bound=None, degree_bound=None,
                   degree_positions=None):
        """Product with optional pruning.

        theta_bound keeps only theta indices < theta_bound; degree_bound
        truncates terms whose exponent sum over degree_positions (all
        positions when None) exceeds the bound.  Pruned products are
        exact on the surviving terms because both theta sets and
        exponents only grow during multiplication.
        """
        out = {}
        for (ta, ea), ca in self.terms.items():
            for (tb, eb), cb in other.terms.items():
                if set(ta) & set(tb):
                    continue
                thetas, sign = _merge_thetas(ta, tb)
                if theta_bound is not None and thetas and thetas[-1] >= theta_bound:
                    continue
                exps = tuple(x + y for x, y in zip(ea, eb))
                if degree_bound is not None:
                    pos = degree_positions
                    dtot = sum(exps) if pos is None else sum(exps[i] for i in pos)
                    if dtot > degree_bound:
                        continue
                c = ca * cb
                if sign < 0:
                    c = -c
                key = (thetas, exps)
                s = out.get(key)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return ConcreteSuperPoly(self.nvars, out)

    def homogeneous_degree(self):
        """(n, m) when homogeneous; raises otherwise."""
        degs = {(sum(e), len(t)) for t, e in self.terms}
        if len(degs) != 1:
            raise ValueError("non-homogeneous superpolynomial")
        return next(iter(degs))

    def apply_transposition(self, i):
        """Simultaneous swap of x_i,x_{i+1} and theta_i,theta_{i+1}."""
        out = {}
        for (thetas, exps), c in self.terms.items():
            e = list(exps)
            e[i], e[i + 1] = e[i + 1], e[i]
            has_i = i in thetas
            has_j = (i + 1) in thetas
            if has_i and has_j:
                nt, nc = thetas, -c
            elif has_i:
                nt = tuple(sorted(x if x != i else i + 1 for x in thetas))
                nc = c
            elif has_j:
                nt = tuple(sorted(x if x != i + 1 else i for x in thetas))
                nc = c
            else:
                nt, nc = thetas, c
            out[(nt, tuple(e))] = nc
        return ConcreteSuperPoly(self.nvars, out)

    def is_symmetric(self):
        for i in range(self.nvars - 1):
            if self.apply_transposition(i).terms != self.terms:
                return False
        return True

    def embed(self, nvars, offset=0):
        """View in a larger variable set, shifting indices by offset."""
        out = {}
        for (thetas, exps), c in self.terms.items():
            nt = tuple(x + offset for x in thetas)
            ne = [0] * nvars
            for i, e in enumerate(exps):
                ne[i + offset] = e
            out[(nt, tuple(ne))] = c
        return ConcreteSuperPoly(nvars, out)


# ---------------------------------------------------------------------------
# classical bases, expanded concretely
# ---------------------------------------------------------------------------

def expand_monomial(sp, N):
    """Monomial superpolynomial m_Lambda in N variables."""
    from itertools import permutations

    ell = sp.m + len(sp.bosonic)
    if N < ell:
        raise ValueError(f"too few variables: need {ell}, got {N}")
    ferm = sp.fermionic
    boso = list(sp.bosonic) + [0] * (N - sp.m - len(sp.bosonic))
    one = RatFunc.one()
    neg_one = RatFunc.from_int(-1)
    terms = {}
    for positions in permutations(range(N), sp.m):
        sign = _perm_sign(positions)
        rest = sorted(set(range(N)) - set(positions))
        base = [0] * N
        for pos, part in zip(positions, ferm):
            base[pos] = part
        thetas = tuple(sorted(positions))
        coeff = one if sign > 0 else neg_one
        for arrangement in distinct_permutations(boso):
            exps = list(base)
            for pos, part in zip(rest, arrangement):
                exps[pos] = part
            terms[(thetas, tuple(exps))] = coeff
    return ConcreteSuperPoly(N, terms)


def _ptilde(k, N, theta_bound=None):
    stop = N if theta_bound is None else min(N, theta_bound)
    terms = {}
    one = RatFunc.one()
    for i in range(stop):
        e = [0] * N
        e[i] = k
        terms[((i,), tuple(e))] = one
    return ConcreteSuperPoly(N, terms)


def _pbos(l, N):
    terms = {}
    one = RatFunc.one()
    for i in range(N):
        e = [0] * N
        e[i] = l
        terms[((), tuple(e))] = one
    return ConcreteSuperPoly(N, terms)


def expand_powersum(sp, N, theta_bound=None):
    """Power-sum superpolynomial p_Lambda in N variables.

    theta_bound restricts theta indices (used when only canonical
    monomial coefficients are extracted afterwards).
    """
    if N < 1:
        raise ValueError("too few variables")
    result = ConcreteSuperPoly.one(N)
    for k in sp.fermionic:
        result = result.mul_pruned(_ptilde(k, N, theta_bound),
                                   theta_bound=theta_bound)
    for l in sp.bosonic:
        result = result.mul_pruned(_pbos(l, N), theta_bound=theta_bound)
    return result


def expand_elementary(sp, N):
    """Elementary superpolynomial e_Lambda in N variables."""
    result = ConcreteSuperPoly.one(N)
    for k in sp.fermionic:
        result = result * expand_monomial(
            SuperPartition((0,), (1,) * k), N)
    for l in sp.bosonic:
        result = result * expand_monomial(SuperPartition((), (1,) * l), N)
    return result


# ---------------------------------------------------------------------------
# abstract expansions over superpartitions
# ---------------------------------------------------------------------------

@dataclass
class SymSuperPoly:
    """Basis-tagged coefficient map over superpartitions of one degree."""

    basis: str
    n: int
    m: int
    coeffs: dict

    def __post_init__(self):
        self.coeffs = {sp: c for sp, c in self.coeffs.items() if not c.is_zero()}

    def coeff(self, sp):
        return self.coeffs.get(sp, RatFunc.zero())

    def map_coeffs(self, fn):
        return SymSuperPoly(self.basis, self.n, self.m,
                            {sp: fn(c) for sp, c in self.coeffs.items()})

    def add_scaled(self, other, factor):
        out = dict(self.coeffs)
        for sp, c in other.coeffs.items():
            s = out.get(sp)
            s = factor * c if s is None else s + factor * c
            if s.is_zero():
                out.pop(sp, None)
            else:
                out[sp] = s
        return SymSuperPoly(self.basis, self.n, self.m, out)

    def __eq__(self, other):
        return (self.basis == other.basis and self.n == other.n
                and self.m == other.m and self.coeffs == other.coeffs)


def canonical_key(sp, N):
    """The canonical concrete term of m_Lambda: thetas 0..m-1, fermionic
    parts first, then bosonic parts, padded with zeros."""
    exps = list(sp.fermionic) + list(sp.bosonic)
    exps += [0] * (N - len(exps))
    return (tuple(range(sp.m)), tuple(exps))


def min_nvars(n, m):
    """Smallest variable count faithful for degree (n|m): the longest
    circled diagram at that degree."""
    longest = max((sp.m + len(sp.bosonic) for sp in enumerate_sparts(n, m)),
                  default=1)
    return max(longest, 1)


def to_basis_monomial(f, n=None, m=None, verify=False):
    """Read a symmetric homogeneous superpolynomial off in the monomial
    basis.  With verify=True the expansion is re-expanded and compared."""
    if f.is_zero():
        if n is None or m is None:
            raise ValueError("degree of the zero polynomial must be given")
        return SymSuperPoly("monomial", n, m, {})
    dn, dm = f.homogeneous_degree()
    if n is None:
        n, m = dn, dm
    elif (n, m) != (dn, dm):
        raise ValueError(f"degree mismatch: expected {(n, m)}, found {(dn, dm)}")
    N = f.nvars
    coeffs = {}
    for sp in enumerate_sparts(n, m):
        if sp.m + len(sp.bosonic) > N:
            continue
        c = f.terms.get(canonical_key(sp, N))
        if c is not None and not c.is_zero():
            coeffs[sp] = c
    result = SymSuperPoly("monomial", n, m, coeffs)
    if verify:
        check = ConcreteSuperPoly.zero(N)
        for sp, c in result.coeffs.items():
            check = check + expand_monomial(sp, N).scale(c)
        if check.terms != f.terms:
            raise ValueError("input is not in the span of the monomial basis")
    return result


def sym_to_concrete(sym, N):
    """Expand a monomial-basis SymSuperPoly in N variables."""
    if sym.basis != "monomial":
        raise ValueError(f"cannot expand basis {sym.basis!r} directly")
    out = ConcreteSuperPoly.zero(N)
    for sp, c in sym.coeffs.items():
        out = out + expand_monomial(sp, N).scale(c)
    return out


# ---------------------------------------------------------------------------
# power-sum <-> monomial transition matrices
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def p_to_m_matrix(n, m, N=None):
    """Integer matrix expanding power-sums over monomials: row Lambda
    lists the coefficient of m_Omega for each Omega in the fixed order."""
    order = enumerate_sparts(n, m)
    if N is None:
        N = min_nvars(n, m)
    rows = []
    for sp in order:
        expansion = expand_powersum(sp, N, theta_bound=m)
        row = []
        for om in order:
            c = expansion.terms.get(canonical_key(om, N))
            if c is None:
                row.append(0)
            else:
                if not c.is_polynomial() or c.num.deg_q() > 0 or c.num.deg_t() > 0:
                    raise AssertionError("non-integer power-sum coefficient")
                row.append(c.num.terms.get((0, 0), 0))
        rows.append(tuple(row))
    return order, tuple(rows)


@lru_cache(maxsize=None)
def m_to_p_matrix(n, m):
    """Rational matrix expanding monomials over power-sums (the inverse
    of p_to_m_matrix)."""
    order, rows = p_to_m_matrix(n, m)
    k = len(order)
    aug = [[Fraction(rows[i][j]) for j in range(k)]
           + [Fraction(1 if j == i else 0) for j in range(k)]
           for i in range(k)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inverse = tuple(tuple(row[k:]) for row in aug)
    return order, inverse


def monomial_to_p_coords(sym):
    """Dense power-sum coordinates of a monomial-basis SymSuperPoly,
    listed in the fixed superpartition order."""
    if sym.basis == "powersum":
        order = enumerate_sparts(sym.n, sym.m)
        return [sym.coeff(sp) for sp in order]
    if sym.basis != "monomial":
        raise ValueError(f"cannot convert basis {sym.basis!r}")
    order, inv = m_to_p_matrix(sym.n, sym.m)
    index = {sp: i for i, sp in enumerate(order)}
    coords = [RatFunc.zero()] * len(order)
    for sp, c in sym.coeffs.items():
        row = inv[index[sp]]
        for j, a in enumerate(row):
            if a:
                coords[j] = coords[j] + c * RatFunc.from_fraction(a)
    return coords


def p_coords_to_monomial(n, m, coords):
    """Monomial-basis SymSuperPoly from dense power-sum coordinates."""
    order, rows = p_to_m_matrix(n, m)
    out = {}
    for i, c in enumerate(coords):
        if c.is_zero():
            continue
        for j, a in enumerate(rows[i]):
            if a:
                sp = order[j]
                s = out.get(sp)
                add = c * a
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(sp, None)
                else:
                    out[sp] = s
    return SymSuperPoly("monomial", n, m, out)
