"""Polynomial algebra: tilde conjugation, factorisation, power classifications."""

import itertools
from math import gcd

import pytest

from unitary_powers.gf import make_field
from unitary_powers.polyalg import (
    Poly,
    PolyClass,
    butler_pattern,
    classify,
    compose_power,
    factor,
    irreducible_polys,
    is_irreducible,
    is_m_power_pair,
    is_mtilde_power,
    monic_polys,
    root_order,
    tilde,
)

F4 = make_field(2, 1, 1)
F9 = make_field(3, 1, 1)


def elem_of_order(desc, k):
    for a in desc.elements():
        if a.code == 0:
            continue
        b, j = a, 1
        while b.code != 1:
            b = b * a
            j += 1
        if j == k:
            return a
    raise AssertionError(f"no element of order {k} in GF({desc.order})")


# ----------------------------------------------------------------------
# tilde
# ----------------------------------------------------------------------

def test_tilde_fixes_t_minus_one():
    for desc in (F4, F9):
        f = Poly.linear(desc.one)
        assert tilde(f) == f


def test_tilde_fixes_norm_one_linear_over_f4():
    g = elem_of_order(F4, 3)  # norm-one generator, g^3 = 1
    f = Poly.linear(g)
    assert tilde(f) == f
    # root of the tilde conjugate is the inverse conjugate of the root
    assert tilde(f) == Poly.linear(g.conj().inverse())


def test_tilde_moves_order_eight_linear_over_f9():
    g = elem_of_order(F9, 8)
    f = Poly.linear(g)
    assert tilde(f) == Poly.linear(g ** (-3))
    assert tilde(f) != f


@pytest.mark.parametrize("desc", [F4, F9], ids=lambda d: f"GF{d.order}")
def test_tilde_is_an_involution(desc):
    for d in (1, 2, 3):
        for f in monic_polys(desc, d):
            if f.codes[0] == 0:
                continue
            assert tilde(tilde(f)) == f


@pytest.mark.parametrize("desc", [F4, F9], ids=lambda d: f"GF{d.order}")
def test_tilde_preserves_irreducibility(desc):
    for d in (1, 2, 3):
        for f in irreducible_polys(desc, d):
            if f.codes[0] == 0:
                continue
            assert is_irreducible(tilde(f))


def test_tilde_rejects_zero_constant_term():
    with pytest.raises(ValueError):
        tilde(Poly.t(F4))


# ----------------------------------------------------------------------
# irreducibility and factorisation
# ----------------------------------------------------------------------

def test_linear_is_irreducible():
    for c in range(4):
        assert is_irreducible(Poly(F4, (c, 1)))


def test_irreducible_quadratics_over_f4_match_necklace_count():
    # independent oracle for quadratics: irreducible iff no root
    brute = [
        f
        for f in monic_polys(F4, 2)
        if all(f(a).code != 0 for a in F4.elements())
    ]
    assert len(brute) == (4**2 - 4) // 2 == 6
    assert set(brute) == set(irreducible_polys(F4, 2))
    for f in monic_polys(F4, 2):
        assert is_irreducible(f) == (f in brute)


def test_t_cubed_minus_one_over_f4():
    f = Poly(F4, (1, 0, 0, 1))  # t^3 - 1 = t^3 + 1 in characteristic 2
    assert not is_irreducible(f)
    fs = factor(f)
    assert [g.degree for g, _ in fs] == [1, 1, 1]
    assert all(m == 1 for _, m in fs)
    # roots are exactly the norm-one circle of F4
    roots = {a.code for a in F4.elements() if f(a).code == 0}
    assert roots == {a.code for a in F4.elements() if a.code and (a**3).code == 1}


def test_factor_of_irreducible_and_of_a_square():
    f = irreducible_polys(F4, 2)[0]
    assert factor(f) == ((f, 1),)
    lin = Poly.linear(F4.one)
    assert factor(lin * lin) == ((lin, 2),)


@pytest.mark.parametrize(
    "desc,max_deg", [(F4, 3), (F9, 2)], ids=["GF4-deg3", "GF9-deg2"]
)
def test_factor_multiplies_back_and_is_sorted(desc, max_deg):
    for d in range(1, max_deg + 1):
        for f in monic_polys(desc, d):
            fs = factor(f)
            prod = Poly.one(desc)
            for g, m in fs:
                assert is_irreducible(g)
                for _ in range(m):
                    prod = prod * g
            assert prod == f
            assert list(fs) == sorted(fs, key=lambda pair: pair[0].sort_key())


def test_factor_handles_pth_power_shapes():
    # f(x^2) is a square in characteristic 2
    f = irreducible_polys(F4, 2)[0]
    h = compose_power(f, 2)
    fs = factor(h)
    assert sum(g.degree * m for g, m in fs) == 4


# ----------------------------------------------------------------------
# classification
# ----------------------------------------------------------------------

def test_classify_examples():
    assert classify(Poly.linear(F4.one)) is PolyClass.SCIM
    assert classify(Poly.linear(elem_of_order(F9, 8))) is PolyClass.PAIR_MEMBER
    assert classify(Poly.t(F9)) is PolyClass.LINEAR_T
    assert classify(Poly(F4, (1, 0, 0, 1))) is PolyClass.REDUCIBLE


@pytest.mark.parametrize("desc", [F4, F9], ids=["GF4", "GF9"])
def test_scim_polynomials_have_odd_degree(desc):
    for d in (1, 2, 3, 4):
        scims = [
            f for f in irreducible_polys(desc, d)
            if f.codes[0] != 0 and tilde(f) == f
        ]
        if d % 2 == 0:
            assert not scims
        else:
            assert len(scims) > 0


def test_compose_power():
    assert compose_power(Poly(F4, (1, 1)), 3) == Poly(F4, (1, 0, 0, 1))
    for c in range(1, 4):
        assert compose_power(Poly(F4, (c, 1)), 2) == Poly(F4, (c, 0, 1))
    for d in (1, 2):
        for f in itertools.islice(monic_polys(F9, d), 10):
            for M in (2, 3, 5):
                assert compose_power(f, M).degree == M * f.degree


# ----------------------------------------------------------------------
# power classifications
# ----------------------------------------------------------------------

def test_mtilde_power_examples_q2():
    one_lin = Poly.linear(F4.one)
    assert is_mtilde_power(one_lin, 2)  # t^2 - 1 = (t - 1)^2
    others = [
        Poly.linear(a) for a in F4.elements() if a.code > 1
    ]  # the two non-identity norm-one linears
    assert all(classify(f) is PolyClass.SCIM for f in others)
    assert [is_mtilde_power(f, 3) for f in others] == [False, False]
    scim_cubics = [f for f in irreducible_polys(F4, 3) if classify(f) is PolyClass.SCIM]
    assert len(scim_cubics) == 2
    assert not any(is_mtilde_power(f, 3) for f in scim_cubics)


def test_mtilde_power_rejects_non_scim():
    with pytest.raises(ValueError):
        is_mtilde_power(Poly.linear(elem_of_order(F9, 8)), 2)


def test_m_power_pair_examples_q3():
    f = Poly.linear(elem_of_order(F9, 8))
    assert is_m_power_pair(f, 5)
    assert not is_m_power_pair(f, 2)
    with pytest.raises(ValueError):
        is_m_power_pair(Poly.linear(F9.one), 2)


@pytest.mark.parametrize("desc", [F4, F9], ids=["GF4", "GF9"])
def test_m_power_pair_is_constant_on_pairs(desc):
    for d in (1, 2):
        for f in irreducible_polys(desc, d):
            if f.codes[0] == 0 or classify(f) is not PolyClass.PAIR_MEMBER:
                continue
            for M in (2, 3, 5):
                assert is_m_power_pair(f, M) == is_m_power_pair(tilde(f), M)


# ----------------------------------------------------------------------
# root orders and factor-degree patterns
# ----------------------------------------------------------------------

def test_root_order_examples():
    assert root_order(Poly.linear(F4.one)) == 1
    assert root_order(Poly.linear(elem_of_order(F4, 3))) == 3
    assert root_order(Poly.linear(elem_of_order(F9, 8))) == 8
    assert {root_order(f) for f in irreducible_polys(F4, 2)} == {5, 15}


def test_butler_pattern_examples():
    assert butler_pattern(1, 1, 3, 4) == ((1, 1), (1, 2))
    assert butler_pattern(1, 3, 3, 4) == ((3, 1),)
    assert butler_pattern(1, 1, 1, 4) == ((1, 1),)
    with pytest.raises(ValueError):
        butler_pattern(1, 1, 2, 4)  # gcd(m, Q) != 1


@pytest.mark.parametrize("desc,Q", [(F4, 4), (F9, 9)], ids=["GF4", "GF9"])
def test_butler_pattern_matches_actual_factorisations(desc, Q):
    for d in (1, 2):
        for f in irreducible_polys(desc, d):
            if f.codes[0] == 0:
                continue
            t = root_order(f)
            for m in (2, 3, 5, 6):
                if gcd(m, Q) != 1:
                    continue
                predicted: dict[int, int] = {}
                for deg, count in butler_pattern(d, t, m, Q):
                    predicted[deg] = predicted.get(deg, 0) + count
                actual: dict[int, int] = {}
                for g, e in factor(compose_power(f, m)):
                    actual[g.degree] = actual.get(g.degree, 0) + e
                assert predicted == actual, (str(f), m)


@pytest.mark.parametrize("M", [3, 5])
def test_prime_power_composition_dichotomy_over_f4(M):
    # for prime M coprime to q, f(x^M) either keeps a degree-d factor or is
    # irreducible
    for d in (1, 2, 3):
        for f in irreducible_polys(F4, d):
            h = compose_power(f, M)
            fs = factor(h)
            has_same_degree = any(g.degree == d for g, _ in fs)
            assert has_same_degree or (len(fs) == 1 and fs[0] == (h, 1)), str(f)
