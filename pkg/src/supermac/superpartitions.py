"""Superpartitions, diagram geometry, orderings and enumeration.

A superpartition is a pair (fermionic; bosonic) where the fermionic
parts are strictly decreasing non-negative integers (at most one zero,
necessarily last) and the bosonic parts form an ordinary partition.
Plain partitions are handled as tuples of ints throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

LESS = "less"
GREATER = "greater"
EQUAL = "equal"
INCOMPARABLE = "incomparable"


# ---------------------------------------------------------------------------
# ordinary partitions
# ---------------------------------------------------------------------------

def conj_partition(parts):
    if not parts:
        return ()
    out = []
    for col in range(1, parts[0] + 1):
        out.append(sum(1 for p in parts if p >= col))
    return tuple(out)


def dominance_partition(mu, lam):
    """Classical dominance comparison of two partitions of equal weight."""
    if sum(mu) != sum(lam):
        return INCOMPARABLE
    if mu == lam:
        return EQUAL
    le = ge = True
    sm = sl = 0
    for i in range(max(len(mu), len(lam))):
        sm += mu[i] if i < len(mu) else 0
        sl += lam[i] if i < len(lam) else 0
        if sm > sl:
            le = False
        if sm < sl:
            ge = False
    if le:
        return LESS
    if ge:
        return GREATER
    return INCOMPARABLE


@lru_cache(maxsize=None)
def partitions(n):
    """All partitions of n, descending lexicographic."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def zsym(parts):
    """Product of i^n_i * n_i! over part multiplicities."""
    z = 1
    mult = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    for p, k in mult.items():
        z *= p**k
        for j in range(1, k + 1):
            z *= j
    return z


def bstat(parts):
    """Sum of (i-1) * parts_i."""
    return sum(i * p for i, p in enumerate(parts))


# ---------------------------------------------------------------------------
# superpartitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SuperPartition:
    fermionic: tuple
    bosonic: tuple

    def __post_init__(self):
        f, b = self.fermionic, self.bosonic
        if any(f[i] <= f[i + 1] for i in range(len(f) - 1)) or any(p < 0 for p in f):
            raise ValueError(f"fermionic parts must strictly decrease: {f}")
        if any(b[i] < b[i + 1] for i in range(len(b) - 1)) or any(p <= 0 for p in b):
            raise ValueError(f"bosonic parts must be a partition: {b}")

    @property
    def m(self):
        return len(self.fermionic)

    @property
    def n(self):
        return sum(self.fermionic) + sum(self.bosonic)

    @property
    def degree(self):
        return (self.n, self.m)

    def star(self):
        parts = [p for p in self.fermionic + self.bosonic if p > 0]
        return tuple(sorted(parts, reverse=True))

    def circled(self):
        parts = [p + 1 for p in self.fermionic] + list(self.bosonic)
        return tuple(sorted(parts, reverse=True))

    def rows(self):
        """Diagram rows as (boxes, has_circle), circles counted as half-boxes."""
        entries = [(p + 0.5, p, True) for p in self.fermionic]
        entries += [(float(p), p, False) for p in self.bosonic]
        entries.sort(key=lambda e: -e[0])
        return tuple((boxes, circ) for _, boxes, circ in entries)

    def conjugate(self):
        return from_star_circled(conj_partition(self.star()),
                                 conj_partition(self.circled()))

    def to_string(self):
        return ",".join(map(str, self.fermionic)) + ";" + \
            ",".join(map(str, self.bosonic))

    @classmethod
    def from_string(cls, text):
        if ";" not in text:
            raise ValueError(f"not a superpartition string: {text!r}")
        left, _, right = text.partition(";")
        ferm = tuple(int(p) for p in left.split(",")) if left else ()
        boso = tuple(int(p) for p in right.split(",")) if right else ()
        return cls(ferm, boso)

    def __str__(self):
        return self.to_string()


def spart(ferm, boso=()):
    return SuperPartition(tuple(ferm), tuple(boso))


def from_star_circled(star, circled):
    """Reconstruct the superpartition with the given box/circled diagrams."""
    rows = max(len(star), len(circled))
    ferm, boso = [], []
    for i in range(rows):
        s = star[i] if i < len(star) else 0
        c = circled[i] if i < len(circled) else 0
        if c == s + 1:
            ferm.append(s)
        elif c == s:
            if s > 0:
                boso.append(s)
        else:
            raise ValueError("incompatible star/circled diagrams")
    return SuperPartition(tuple(sorted(ferm, reverse=True)),
                          tuple(sorted(boso, reverse=True)))


def dominance_compare(om, lam):
    """Superspace dominance: both star and circled diagrams must agree."""
    if om.degree != lam.degree:
        return INCOMPARABLE
    if om == lam:
        return EQUAL
    star = dominance_partition(om.star(), lam.star())
    circ = dominance_partition(om.circled(), lam.circled())
    if star in (LESS, EQUAL) and circ in (LESS, EQUAL):
        return LESS
    if star in (GREATER, EQUAL) and circ in (GREATER, EQUAL):
        return GREATER
    return INCOMPARABLE


def dominance_compare_prime(om, lam):
    """Variant ordering: star strictly dominates, or ties broken by circled."""
    if om.degree != lam.degree:
        return INCOMPARABLE
    if om == lam:
        return EQUAL
    star = dominance_partition(om.star(), lam.star())
    if star == LESS:
        return LESS
    if star == GREATER:
        return GREATER
    if star == EQUAL:
        circ = dominance_partition(om.circled(), lam.circled())
        if circ in (LESS, GREATER):
            return circ
    return INCOMPARABLE


def _ext_key(sp):
    # fixed linear extension: circled reverse-lex, then star reverse-lex
    return (sp.circled(), sp.star())


@lru_cache(maxsize=None)
def enumerate_sparts(n, m):
    """All superpartitions of degree (n|m), greater first in a fixed
    linear extension of dominance."""
    if n < 0 or m < 0 or n < m * (m - 1) // 2:
        return ()
    out = []
    for ferm in _distinct_tuples(n, m):
        rest = n - sum(ferm)
        for boso in partitions(rest):
            out.append(SuperPartition(ferm, boso))
    out.sort(key=_ext_key, reverse=True)
    return tuple(out)


def _distinct_tuples(n, m):
    """Strictly decreasing m-tuples of non-negative ints with sum <= n."""
    if m == 0:
        return ((),)
    out = []

    def rec(k, smallest_excl, total, prefix):
        if k == 0:
            out.append(tuple(prefix))
            return
        for p in range(k - 1, smallest_excl):
            # p is the largest remaining part; the other k-1 are distinct below it
            if total + p + (k - 2) * (k - 1) // 2 > n:
                continue
            prefix.append(p)
            rec(k - 1, p, total + p, prefix)
            prefix.pop()

    rec(m, n + 1, 0, [])
    return out


# ---------------------------------------------------------------------------
# diagram statistics
# ---------------------------------------------------------------------------

def arms_legs(sp, cell):
    """Arm/leg statistics (a, a~, l, l~) of a box of the star diagram."""
    i, j = cell
    star = sp.star()
    circ = sp.circled()
    if i < 1 or i > len(star) or j < 1 or j > star[i - 1]:
        raise ValueError(f"cell {cell} outside the star diagram of {sp}")
    star_c = conj_partition(star)
    circ_c = conj_partition(circ)
    a = star[i - 1] - j
    at = circ[i - 1] - j
    l = star_c[j - 1] - i
    lt = circ_c[j - 1] - i
    return a, at, l, lt


def bset(sp):
    """Boxes of the star diagram not lying in both a circle row and a
    circle column."""
    rows = sp.rows()
    circle_cols = {boxes + 1 for boxes, circ in rows if circ}
    cells = set()
    for i, (boxes, circ) in enumerate(rows, start=1):
        for j in range(1, boxes + 1):
            if circ and j in circle_cols:
                continue
            cells.add((i, j))
    return cells


def zeta(sp):
    """Count, over boxes in circle rows, of circle-free rows above that
    cover the same column."""
    rows = sp.rows()
    total = 0
    for i, (boxes, circ) in enumerate(rows):
        if not circ:
            continue
        for j in range(1, boxes + 1):
            total += sum(1 for i2 in range(i)
                         if not rows[i2][1] and rows[i2][0] >= j)
    return total


def staircase(m):
    return tuple(range(m - 1, 0, -1))


def skew_cells(sp):
    """Cells of the circled diagram outside the staircase delta^(m+1)."""
    circ = sp.circled()
    m = sp.m
    delta = [max(m + 1 - i, 0) for i in range(1, len(circ) + 1)]
    cells = set()
    for i, width in enumerate(circ, start=1):
        lo = delta[i - 1]
        if width < lo:
            raise AssertionError("circled diagram does not contain the staircase")
        for j in range(lo + 1, width + 1):
            cells.add((i, j))
    return cells
