from math import gcd

import pytest

from ikdeg import (
    CycInt,
    conjugate_set,
    degree_of,
    equivariance_check,
    galois_apply,
    get_field,
    ik_degree,
    min_poly,
    scaled_ik_at_p,
)
from ikdeg.errors import WrongConductor, ZeroParameter


def test_conjugate_set_counts():
    z = CycInt.zeta(7)
    rep = conjugate_set(z)
    assert len(rep.conjugates) == 6
    assert rep.distinct_count == 6
    assert rep.stabilizer_order == 1
    rational = CycInt.from_int(7, 5)
    assert degree_of(rational) == 1
    # z + z^-1 generates the real subfield: degree (p-1)/2
    half = CycInt.zeta(11) + CycInt.zeta(11, 10)
    assert degree_of(half) == 5


def test_conjugate_set_requires_prime_conductor():
    with pytest.raises(WrongConductor):
        conjugate_set(CycInt.zeta(6))
    with pytest.raises(WrongConductor):
        degree_of(CycInt.zeta(12))


def test_min_poly_examples():
    # minimal polynomial of zeta_5 is the 5th cyclotomic polynomial
    assert min_poly(CycInt.zeta(5)).coeffs == (1, 1, 1, 1, 1)
    # zeta_3: x^2 + x + 1
    assert min_poly(CycInt.zeta(3)).coeffs == (1, 1, 1)
    # rational integer: x - 4
    assert min_poly(CycInt.from_int(7, 4)).coeffs == (-4, 1)
    # golden-ratio relative: zeta_5 + zeta_5^4 satisfies x^2 + x - 1
    assert min_poly(CycInt.zeta(5) + CycInt.zeta(5, 4)).coeffs == (-1, 1, 1)


def test_min_poly_vanishes_and_is_minimal():
    for z in (
        CycInt(7, [1, 2, 0, 0, 0, 3, 0]),
        CycInt(11, [0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
        CycInt(13, [5, -1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ):
        f = min_poly(z)
        assert f(z).is_zero()
        assert f.degree == degree_of(z)
        assert f.is_monic()


def test_ik_degree_anchors():
    assert ik_degree(get_field(5), 1, 1) == 2
    assert ik_degree(get_field(7), 1, 1) == 3
    for b in get_field(5).units():
        assert ik_degree(get_field(5), 3, b) == 1  # 4 | n+1: rational


def test_ik_degree_matches_gcd_formula_grid():
    for p in (5, 7, 11):
        F = get_field(p)
        for n in (1, 2, 3, 4):
            want = (p - 1) // gcd(n + 1, p - 1)
            for b in F.units():
                assert ik_degree(F, n, b) == want


def test_min_poly_of_scaled_ik():
    # frozen oracle: 20 * IK_1(5, 1) has minimal polynomial x^2 + 20x - 400
    z = scaled_ik_at_p(get_field(5), 1, 1)
    assert min_poly(z).coeffs == (-400, 20, 1)


def test_equivariance_prime_and_extension():
    F7 = get_field(7)
    for a in range(1, 7):
        for b in F7.units():
            assert equivariance_check(F7, 1, b, a)
    F9 = get_field(3, 2)
    for a in (1, 2):
        for b in F9.units():
            assert equivariance_check(F9, 2, b, a)


def test_equivariance_consistency_with_galois_apply():
    F = get_field(11)
    z = scaled_ik_at_p(F, 2, 1)
    a = 2
    b2 = F.elt(1) * F.elt(a) ** (-3)
    assert galois_apply(z, a) == scaled_ik_at_p(F, 2, b2)


def test_equivariance_guards():
    F = get_field(5)
    with pytest.raises(ZeroParameter):
        equivariance_check(F, 1, F.zero, 2)
    with pytest.raises(ZeroParameter):
        equivariance_check(F, 1, F.one, 5)
