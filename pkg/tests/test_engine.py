import random

import pytest

from supermac.algebra import RatFunc, rf
from supermac.engine import (
    ConcreteSuperPoly,
    expand_elementary,
    expand_monomial,
    expand_powersum,
    m_to_p_matrix,
    min_nvars,
    p_to_m_matrix,
    sym_to_concrete,
    to_basis_monomial,
)
from supermac.superpartitions import enumerate_sparts, spart

ONE = RatFunc.one()
MINUS = RatFunc.from_int(-1)


def term(thetas, exps):
    return (tuple(thetas), tuple(exps))


def test_expand_monomial_examples():
    f = expand_monomial(spart((1,)), 2)
    assert f.terms == {term((0,), (1, 0)): ONE, term((1,), (0, 1)): ONE}
    f = expand_monomial(spart((0,), (1,)), 2)
    assert f.terms == {term((0,), (0, 1)): ONE, term((1,), (1, 0)): ONE}
    f = expand_monomial(spart((1, 0)), 2)
    assert f.terms == {term((0, 1), (1, 0)): ONE, term((0, 1), (0, 1)): MINUS}


def test_expand_monomial_too_few_variables():
    with pytest.raises(ValueError):
        expand_monomial(spart((0,), (1, 1)), 2)


def test_expand_powersum_examples():
    f = expand_powersum(spart((0,), (1,)), 2)
    assert f.terms == {
        term((0,), (1, 0)): ONE, term((1,), (0, 1)): ONE,
        term((0,), (0, 1)): ONE, term((1,), (1, 0)): ONE,
    }
    f = expand_powersum(spart((1, 0)), 2)
    assert f.terms == {term((0, 1), (1, 0)): ONE, term((0, 1), (0, 1)): MINUS}
    f = expand_powersum(spart((), (2,)), 2)
    assert f.terms == {term((), (2, 0)): ONE, term((), (0, 2)): ONE}


def test_multiply_anticommutation():
    theta1 = ConcreteSuperPoly(2, {term((0,), (0, 0)): ONE})
    theta2 = ConcreteSuperPoly(2, {term((1,), (0, 0)): ONE})
    assert (theta1 * theta2).terms == {term((0, 1), (0, 0)): ONE}
    assert (theta2 * theta1).terms == {term((0, 1), (0, 0)): MINUS}
    assert (theta1 * theta1).terms == {}
    x2 = ConcreteSuperPoly(2, {term((), (0, 1)): ONE})
    t1x1 = ConcreteSuperPoly(2, {term((0,), (1, 0)): ONE})
    assert (t1x1 * x2).terms == {term((0,), (1, 1)): ONE}


def test_multiply_anticommutation_property():
    rng = random.Random(3)
    sps = [sp for n in range(4) for m in range(3) for sp in enumerate_sparts(n, m)]
    for _ in range(10):
        a = expand_powersum(rng.choice(sps), 5)
        b = expand_powersum(rng.choice(sps), 5)
        ma = a.homogeneous_degree()[1] if a.terms else 0
        mb = b.homogeneous_degree()[1] if b.terms else 0
        ab = a * b
        ba = b * a
        if (ma * mb) % 2:
            ba = ba.scale(MINUS)
        assert ab == ba


def test_to_basis_monomial_examples():
    f = expand_powersum(spart((0,), (1,)), 2)
    sym = to_basis_monomial(f, verify=True)
    assert sym.coeffs == {spart((1,)): ONE, spart((0,), (1,)): ONE}
    for n in range(5):
        for m in range(3):
            for sp in enumerate_sparts(n, m):
                N = max(sp.m + len(sp.bosonic), 1)
                sym = to_basis_monomial(expand_monomial(sp, N))
                assert sym.coeffs == {sp: ONE}
    etilde2 = expand_monomial(spart((0,), (1, 1)), 3)
    sym = to_basis_monomial(etilde2)
    assert sym.coeffs == {spart((0,), (1, 1)): ONE}


def test_expand_elementary_examples():
    f = expand_elementary(spart((), (1,)), 3)
    assert f == expand_powersum(spart((), (1,)), 3)
    f = expand_elementary(spart((0,)), 3)
    assert f == expand_monomial(spart((0,)), 3)
    # etilde_1 = m_(0;1): a single monomial basis element
    f = expand_elementary(spart((1,)), 3)
    assert to_basis_monomial(f).coeffs == {spart((0,), (1,)): ONE}


def test_is_symmetric():
    for sp in enumerate_sparts(3, 1) + enumerate_sparts(4, 2):
        N = sp.m + len(sp.bosonic)
        assert expand_monomial(sp, N + 1).is_symmetric()
        assert expand_powersum(sp, N + 1).is_symmetric()
    lone = ConcreteSuperPoly(2, {term((0,), (1, 0)): ONE})
    assert not lone.is_symmetric()


def test_p_to_m_degree_1_1():
    order, rows = p_to_m_matrix(1, 1)
    assert order == (spart((1,)), spart((0,), (1,)))
    assert rows == ((1, 0), (1, 1))


def test_p_to_m_degree_1_0():
    order, rows = p_to_m_matrix(1, 0)
    assert rows == ((1,),)


def test_matrix_inverse_round_trip():
    for n in range(6):
        for m in range(3):
            if not enumerate_sparts(n, m):
                continue
            order, rows = p_to_m_matrix(n, m)
            _, inv = m_to_p_matrix(n, m)
            k = len(order)
            for i in range(k):
                for j in range(k):
                    s = sum(rows[i][l] * inv[l][j] for l in range(k))
                    assert s == (1 if i == j else 0)


def test_p_to_m_stability():
    for n in range(5):
        for m in range(3):
            if not enumerate_sparts(n, m):
                continue
            base = p_to_m_matrix(n, m, n + m if n + m else 1)
            bigger = p_to_m_matrix(n, m, n + m + 1)
            reduced = p_to_m_matrix(n, m, min_nvars(n, m))
            assert base[1] == bigger[1] == reduced[1]


def test_round_trip_random_combination():
    rng = random.Random(5)
    for n, m in [(3, 1), (4, 2), (5, 2)]:
        sps = enumerate_sparts(n, m)
        N = min_nvars(n, m)
        for _ in range(3):
            coeffs = {}
            for sp in sps:
                if rng.random() < 0.4:
                    coeffs[sp] = rf(rng.randint(-3, 3))
            coeffs = {sp: c for sp, c in coeffs.items() if not c.is_zero()}
            f = ConcreteSuperPoly.zero(N)
            for sp, c in coeffs.items():
                f = f + expand_monomial(sp, N).scale(c)
            if f.is_zero():
                continue
            sym = to_basis_monomial(f, n, m, verify=True)
            assert sym.coeffs == coeffs


def test_sym_to_concrete_round_trip():
    f = expand_powersum(spart((1,), (2,)), 4)
    sym = to_basis_monomial(f)
    assert sym_to_concrete(sym, 4) == f
