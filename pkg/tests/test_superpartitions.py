import pytest

from supermac.superpartitions import (
    EQUAL,
    GREATER,
    INCOMPARABLE,
    LESS,
    SuperPartition,
    arms_legs,
    bset,
    bstat,
    conj_partition,
    dominance_compare,
    dominance_compare_prime,
    dominance_partition,
    enumerate_sparts,
    partitions,
    skew_cells,
    spart,
    zeta,
    zsym,
)


def test_star_circled_examples():
    sp = spart((3, 1, 0), (5, 4, 3))
    assert sp.star() == (5, 4, 3, 3, 1)
    assert sp.circled() == (5, 4, 4, 3, 2, 1)
    sp = spart((0,))
    assert sp.star() == ()
    assert sp.circled() == (1,)
    sp = spart((), (2, 1))
    assert sp.star() == (2, 1)
    assert sp.circled() == (2, 1)


def test_validation():
    with pytest.raises(ValueError):
        spart((1, 1))
    with pytest.raises(ValueError):
        spart((), (1, 2))
    with pytest.raises(ValueError):
        spart((), (1, 0))


def test_conjugate_examples():
    assert spart((2, 1, 0)).conjugate() == spart((2, 1, 0))
    assert spart((1,)).conjugate() == spart((0,), (1,))
    assert spart((3, 0), (1,)).conjugate() == spart((2, 0), (1, 1))


def test_conjugate_involution():
    for n in range(8):
        for m in range(4):
            for sp in enumerate_sparts(n, m):
                assert sp.conjugate().conjugate() == sp


def test_conjugate_reverses_dominance():
    for n in range(7):
        for m in range(4):
            sps = enumerate_sparts(n, m)
            for a in sps:
                for b in sps:
                    rel = dominance_compare(a, b)
                    flipped = dominance_compare(a.conjugate(), b.conjugate())
                    expected = {LESS: GREATER, GREATER: LESS,
                                EQUAL: EQUAL, INCOMPARABLE: INCOMPARABLE}[rel]
                    assert flipped == expected


def test_dominance_examples():
    assert dominance_compare(spart((2,), (1, 1)), spart((0,), (2, 2))) == INCOMPARABLE
    bottom = spart((0,), (1, 1, 1, 1))
    for sp in enumerate_sparts(4, 1):
        if sp != bottom:
            assert dominance_compare(bottom, sp) == LESS
    lam = spart((1,), (2,))
    assert dominance_compare(lam, lam) == EQUAL


def test_degree_4_1_incomparable_pairs():
    sps = enumerate_sparts(4, 1)
    pairs = set()
    for i, a in enumerate(sps):
        for b in sps[i + 1:]:
            if dominance_compare(a, b) == INCOMPARABLE:
                pairs.add(frozenset((a, b)))
    assert pairs == {
        frozenset((spart((2,), (1, 1)), spart((0,), (2, 2)))),
        frozenset((spart((2,), (2,)), spart((0,), (3, 1)))),
    }


def test_dominance_prime_examples():
    assert dominance_compare_prime(spart((2,), (1, 1)), spart((0,), (2, 2))) == LESS
    rel = dominance_compare_prime(spart((2,), (2,)), spart((0,), (3, 1)))
    assert rel in (LESS, GREATER)
    assert rel == LESS  # stars (2,2) < (3,1)
    lam = spart((1,), (2,))
    assert dominance_compare_prime(lam, lam) == EQUAL


def test_prime_refines_dominance():
    for n in range(6):
        for m in range(3):
            sps = enumerate_sparts(n, m)
            for a in sps:
                for b in sps:
                    rel = dominance_compare(a, b)
                    if rel in (LESS, GREATER, EQUAL):
                        assert dominance_compare_prime(a, b) == rel


def test_dominance_is_partial_order():
    for n in range(7):
        for m in range(3):
            sps = enumerate_sparts(n, m)
            for a in sps:
                assert dominance_compare(a, a) == EQUAL
                for b in sps:
                    rab = dominance_compare(a, b)
                    rba = dominance_compare(b, a)
                    if rab == LESS:
                        assert rba == GREATER
                    for c in sps:
                        if rab == LESS and dominance_compare(b, c) == LESS:
                            assert dominance_compare(a, c) == LESS


def test_enumerate_examples():
    sps = enumerate_sparts(3, 1)
    assert len(sps) == 7
    assert set(sps) == {
        spart((0,), (1, 1, 1)), spart((0,), (2, 1)), spart((0,), (3,)),
        spart((1,), (1, 1)), spart((1,), (2,)), spart((2,), (1,)),
        spart((3,)),
    }
    assert len(enumerate_sparts(4, 1)) == 12
    assert enumerate_sparts(0, 1) == (spart((0,)),)
    assert enumerate_sparts(0, 0) == (spart(()),)
    assert enumerate_sparts(1, 3) == ()


def test_enumerate_is_linear_extension():
    for n in range(7):
        for m in range(3):
            sps = enumerate_sparts(n, m)
            for i, a in enumerate(sps):
                for b in sps[i + 1:]:
                    assert dominance_compare(a, b) != LESS


def test_enumerate_counts_match_partitions():
    for n in range(11):
        assert len(enumerate_sparts(n, 0)) == len(partitions(n))


def test_star_circled_degrees():
    for n in range(7):
        for m in range(4):
            for sp in enumerate_sparts(n, m):
                assert sum(sp.star()) == n
                assert sum(sp.circled()) == n + m


def test_arms_legs_examples():
    sp = spart((3, 0), (1,))
    assert arms_legs(sp, (1, 2)) == (1, 2, 0, 0)
    assert arms_legs(sp, (2, 1)) == (0, 0, 0, 1)
    assert arms_legs(spart((), (1,)), (1, 1)) == (0, 0, 0, 0)
    with pytest.raises(ValueError):
        arms_legs(sp, (1, 4))


def test_bset_examples():
    sp = spart((3, 1, 0), (5, 4, 3))
    cells = bset(sp)
    star = sp.star()
    all_boxes = {(i + 1, j + 1) for i, w in enumerate(star) for j in range(w)}
    assert all_boxes - cells == {(3, 1), (3, 2), (5, 1)}
    assert bset(spart((2, 1, 0))) == set()
    assert bset(spart((), (2, 1))) == {(1, 1), (1, 2), (2, 1)}


def test_zeta_examples():
    assert zeta(spart((1, 0), (2, 2))) == 2
    assert zeta(spart((3, 1, 0), (2,))) == 1
    assert zeta(spart((2, 1, 0), (3, 1))) == 3
    assert zeta(spart((3, 1, 0), (1, 1))) == 0


def test_skew_cells_examples():
    assert skew_cells(spart((3, 1, 0), (1, 1))) == {(1, 4), (4, 1), (5, 1)}
    assert skew_cells(spart((0,))) == set()
    assert bstat((4, 2, 1, 1, 1)) - bstat((3, 2, 1)) == 11 - 4


def test_bstat():
    assert bstat((3, 2, 1)) == 4
    assert bstat(()) == 0


def test_zsym():
    assert zsym((1, 1, 1)) == 6
    assert zsym((2, 1)) == 2
    assert zsym((3,)) == 3
    assert zsym(()) == 1


def test_string_round_trip():
    for text in ("3,1,0;5,4,3", "2,1,0;", ";2,1", ";", "0;"):
        assert SuperPartition.from_string(text).to_string() == text
    with pytest.raises(ValueError):
        SuperPartition.from_string("bogus")


def test_conj_partition():
    assert conj_partition((4, 1, 1)) == (3, 1, 1, 1)
    assert conj_partition(()) == ()
    assert dominance_partition((2, 1, 1), (2, 2)) == LESS
