import random

from supermac.algebra import MPoly, RatFunc, rf
from supermac.engine import SymSuperPoly
from supermac.products import (
    WEIGHT_KINDS,
    gram_matrix,
    kernel_truncated_check,
    scalar_product,
    zweight,
)
from supermac.superpartitions import enumerate_sparts, spart, zsym

Q = MPoly.var_q()
T = MPoly.var_t()
ONE = MPoly.one()


def mono_poly(n, m, coeffs):
    return SymSuperPoly("monomial", n, m, coeffs)


def p_poly(n, m, coeffs):
    return SymSuperPoly("powersum", n, m, coeffs)


def test_zweight_examples():
    assert zweight("new", spart((1,))) == rf(Q)
    expected = rf(2 * (ONE - Q**2) * (ONE - Q), (ONE - T**2) * (ONE - T))
    assert zweight("new", spart((), (2, 1))) == expected
    assert zweight("invalidated-f", spart((1,))) == rf(ONE - Q**2, ONE - T**2)


def test_zweight_tau_variants():
    for n in range(5):
        for m in range(3):
            for sp in enumerate_sparts(n, m):
                assert zweight("tau-t", sp) == zweight("invalidated-f", sp)
                # tau = 1/q turns each fermionic factor into -q^(part+1)
                ratio = zweight("tau-qinv", sp) / zweight("new", sp)
                sign = -1 if sp.m % 2 else 1
                assert ratio == rf(MPoly.monomial(sign, sp.m, 0))


def test_zweight_classical_slice():
    for lam in [(1,), (2,), (2, 1), (3, 1, 1)]:
        num = MPoly.const(zsym(lam))
        den = ONE
        for k in lam:
            num = num * (ONE - Q**k)
            den = den * (ONE - T**k)
        assert zweight("new", spart((), lam)) == rf(num, den)


def test_zweight_jack_alpha():
    # alpha^(length of circled diagram) * z of the bosonic part
    assert zweight("jack-alpha", spart((1,), (2, 2))) == rf(8 * Q**3)
    assert zweight("jack-alpha", spart((0,))) == rf(Q)


def test_zweight_schur_tt():
    assert zweight("schur-tt", spart((2, 0), (1, 1))) == rf(2 * T**2)


def test_scalar_product_powersum_orthogonality():
    for kind in WEIGHT_KINDS:
        for n in range(4):
            for m in range(3):
                sps = enumerate_sparts(n, m)
                for a in sps:
                    for b in sps:
                        fa = p_poly(n, m, {a: RatFunc.one()})
                        fb = p_poly(n, m, {b: RatFunc.one()})
                        prod = scalar_product(fa, fb, kind)
                        if a != b:
                            assert prod.is_zero()
                        else:
                            assert not prod.is_zero()


def test_scalar_product_examples():
    f = p_poly(1, 1, {spart((1,)): RatFunc.one()})
    assert scalar_product(f, f, "new") == rf(Q)
    c = rf(Q * (ONE - T), ONE - Q * T)
    g = mono_poly(1, 1, {spart((1,)): RatFunc.one(), spart((0,), (1,)): c})
    h = mono_poly(1, 1, {spart((0,), (1,)): RatFunc.one()})
    assert scalar_product(g, h, "new").is_zero()
    fa = p_poly(1, 1, {spart((1,)): RatFunc.one()})
    fb = p_poly(1, 1, {spart((0,), (1,)): RatFunc.one()})
    for kind in WEIGHT_KINDS:
        assert scalar_product(fa, fb, kind).is_zero()


def test_scalar_product_bilinear_symmetric():
    rng = random.Random(23)
    sps = enumerate_sparts(3, 1)
    for _ in range(5):
        def rand_poly():
            return mono_poly(3, 1, {
                sp: rf(rng.randint(-3, 3)) for sp in sps if rng.random() < 0.5
            })
        f, g, h = rand_poly(), rand_poly(), rand_poly()
        c = rf(rng.randint(1, 4))
        lhs = scalar_product(f.add_scaled(g, c), h, "new")
        rhs = scalar_product(f, h, "new") + c * scalar_product(g, h, "new")
        assert lhs == rhs
        assert scalar_product(f, g, "new") == scalar_product(g, f, "new")


def test_gram_degree_1_1():
    order, rows = gram_matrix(1, 1, "new")
    assert order == (spart((1,)), spart((0,), (1,)))
    assert rows[0][0] == rf(Q)
    assert rows[0][1] == rf(-Q)
    assert rows[1][1] == rf(Q) + rf(ONE - Q, ONE - T)


def test_gram_degree_1_0():
    _, rows = gram_matrix(1, 0, "new")
    assert rows == ((rf(ONE - Q, ONE - T),),)


def test_gram_symmetric():
    for n, m in [(2, 1), (3, 1), (2, 2), (4, 1)]:
        _, rows = gram_matrix(n, m, "new")
        k = len(rows)
        for i in range(k):
            for j in range(k):
                assert rows[i][j] == rows[j][i]


def test_kernel_coefficient_examples():
    # x1*y1 coefficient (no thetas) matches the k=1 series coefficient
    from supermac.products import _qbinomial_series

    assert _qbinomial_series(1) == rf(ONE - T, ONE - Q)
    assert kernel_truncated_check(2, 2, 2)


def test_kernel_degree_3_single_variable():
    assert kernel_truncated_check(3, 1, 1)
