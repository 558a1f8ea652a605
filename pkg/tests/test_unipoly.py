import itertools

import pytest

from fillcurve import canonical_field
from fillcurve.errors import BothZero, DegreeZero, DivisionByZero, MixedFields
from fillcurve.field import Fel, extension
from fillcurve.rng import RngState
from fillcurve.unipoly import (
    UPoly,
    factor,
    is_irreducible,
    monic_gcd,
    roots_in_field,
)

from conftest import naive_eval, naive_poly_mul


def test_mul_matches_schoolbook(F3):
    a = UPoly(F3, [1, 1])  # X + 1
    b = UPoly(F3, [2, 1])  # X + 2
    expected = naive_poly_mul(F3, [1, 1], [2, 1])
    assert (a * b).coeffs == tuple(expected) == (2, 0, 1)  # X^2 + 2


def test_add_zero_and_divmod_trivial(F3):
    a = UPoly(F3, [1, 2, 1])
    assert a + UPoly.zero(F3) == a
    q, r = divmod(UPoly(F3, [0, 0, 1]), UPoly.x(F3))
    assert q == UPoly.x(F3) and r.is_zero()
    with pytest.raises(DivisionByZero):
        divmod(a, UPoly.zero(F3))


def test_divmod_invariant_random():
    rng = RngState(17)
    for q in (2, 3, 4, 5, 9):
        field = canonical_field(q)
        for _ in range(50):
            a = UPoly(field, [field.random_raw(rng) for _ in range(rng.randbelow(10))])
            b = UPoly(field, [field.random_raw(rng) for _ in range(rng.randbelow(8) + 1)])
            if b.is_zero():
                continue
            qq, r = divmod(a, b)
            assert qq * b + r == a
            assert r.degree < b.degree


def test_eval_and_derivative(F3, F9):
    assert UPoly(F3, [0, 0, 0, 1]).derivative().is_zero()  # (X^3)' = 3X^2 = 0
    assert UPoly(F3, [0, 0, 0, 1, 1]).derivative() == UPoly(F3, [0, 0, 0, 1])
    t = F9.fel((0, 1))
    assert UPoly(F3, [1, 0, 1])(t).is_zero()
    assert UPoly(F3, [1, 2])(1) == canonical_field(3).fel(0)


def test_derivative_product_rule(F5):
    rng = RngState(23)
    for _ in range(30):
        a = UPoly(F5, [F5.random_raw(rng) for _ in range(rng.randbelow(7))])
        b = UPoly(F5, [F5.random_raw(rng) for _ in range(rng.randbelow(7))])
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


def test_monic_gcd_examples(F3):
    g = monic_gcd(UPoly(F3, [-1, 0, 1]), UPoly(F3, [-1, 1]))
    assert g == UPoly(F3, [2, 1])  # monic form of X - 1
    a = UPoly(F3, [1, 2, 0, 1])
    assert monic_gcd(a, UPoly.zero(F3)) == a.monic()
    with pytest.raises(BothZero):
        monic_gcd(UPoly.zero(F3), UPoly.zero(F3))
    # X^2+1 and X^2+X+2 are distinct irreducibles (root scans below)
    for coeffs in ([1, 0, 1], [2, 1, 1]):
        assert all(naive_eval(F3, coeffs, x) != 0 for x in range(3))
    assert monic_gcd(UPoly(F3, [1, 0, 1]), UPoly(F3, [2, 1, 1])) == UPoly.one(F3)


def test_gcd_divides_both():
    rng = RngState(29)
    for q in (3, 4, 9):
        field = canonical_field(q)
        for _ in range(40):
            a = UPoly(field, [field.random_raw(rng) for _ in range(rng.randbelow(9))])
            b = UPoly(field, [field.random_raw(rng) for _ in range(rng.randbelow(9))])
            if a.is_zero() and b.is_zero():
                continue
            g = monic_gcd(a, b)
            assert g.lead() == Fel(field, field.one)
            for h in (a, b):
                if not h.is_zero():
                    assert (h % g).is_zero()


def test_is_irreducible(F3, F5):
    assert is_irreducible(UPoly(F3, [1, 0, 1]))
    assert all(naive_eval(F3, [1, 0, 1], x) != 0 for x in range(3))
    assert not is_irreducible(UPoly(F5, [1, 0, 1]))  # 2^2 + 1 = 5 = 0
    assert naive_eval(F5, [1, 0, 1], 2) == 0
    assert is_irreducible(UPoly(F3, [2, 1]))
    with pytest.raises(DegreeZero):
        is_irreducible(UPoly(F3, [1]))


def test_factor_spec_example(F3):
    # 1 + X^2 + X^4 + X^6 splits into the three monic irreducible quadratics
    f = UPoly(F3, [1, 0, 1, 0, 1, 0, 1])
    unit, factors = factor(f)
    assert unit == F3.fel(1)
    assert [(p.coeffs, m) for p, m in factors] == [
        ((1, 0, 1), 1),
        ((2, 1, 1), 1),
        ((2, 2, 1), 1),
    ]
    # oracle: re-expand the product and root-scan each factor
    prod = [1]
    for p, m in factors:
        for _ in range(m):
            prod = naive_poly_mul(F3, prod, list(p.coeffs))
    assert tuple(prod) == f.coeffs
    for p, _ in factors:
        assert all(naive_eval(F3, list(p.coeffs), x) != 0 for x in range(3))


def test_factor_simple_cases(F2, F3):
    unit, factors = factor(UPoly(F3, [-1, 0, 1]))  # X^2 - 1
    assert [(p.coeffs, m) for p, m in factors] == [((1, 1), 1), ((2, 1), 1)]
    unit, factors = factor(UPoly(F2, [0, 0, 0, 0, 1]))  # X^4
    assert [(p.coeffs, m) for p, m in factors] == [((0, 1), 4)]
    with pytest.raises(DegreeZero):
        factor(UPoly(F3, [2]))


def test_factor_roundtrip_random():
    rng = RngState(31)
    for q in (2, 3, 4, 5, 9):
        field = canonical_field(q)
        for _ in range(60):
            coeffs = [field.random_raw(rng) for _ in range(rng.randbelow(13))]
            f = UPoly(field, coeffs)
            if f.degree < 1:
                continue
            unit, factors = factor(f, rng)
            back = UPoly(field, [unit])
            for p, m in factors:
                assert p.lead().raw == field.one
                assert is_irreducible(p)
                for _ in range(m):
                    back = back * p
            assert back == f
            assert sum(p.degree * m for p, m in factors) == f.degree


def test_factor_multiset_union(F3):
    rng = RngState(37)
    for _ in range(25):
        a = UPoly(F3, [F3.random_raw(rng) for _ in range(rng.randbelow(6) + 2)])
        b = UPoly(F3, [F3.random_raw(rng) for _ in range(rng.randbelow(6) + 2)])
        if a.degree < 1 or b.degree < 1:
            continue
        _, fa = factor(a)
        _, fb = factor(b)
        merged = {}
        for p, m in fa + fb:
            merged[p] = merged.get(p, 0) + m
        _, fab = factor(a * b)
        assert {p: m for p, m in fab} == merged


def test_factor_seed_independent(F5):
    f = UPoly(F5, [1, 0, 0, 2, 0, 1, 3, 0, 0, 1, 1])
    r1 = factor(f, RngState(1))
    r2 = factor(f, RngState(999))
    assert r1 == r2


def test_factor_over_relative_extension(F3):
    # factorization must also work over a non-prime, non-canonical level
    F9 = canonical_field(9)
    K = extension(F9, [F9.fel((2, 2)), F9.fel((0, 0)), F9.fel((1, 0))])
    rng = RngState(41)
    for _ in range(10):
        f = UPoly(K, [K.random_raw(rng) for _ in range(5)])
        if f.degree < 1:
            continue
        unit, factors = factor(f, rng)
        back = UPoly(K, [unit])
        for p, m in factors:
            for _ in range(m):
                back = back * p
        assert back == f


def test_roots_in_field(F3, F9):
    m = UPoly(F3, [1, 0, 1])
    assert roots_in_field(m, F3) == []
    rr = roots_in_field(m, F9)
    assert [r.raw for r in rr] == [(0, 1), (0, 2)]
    c = UPoly(F3, [-2, 1])
    assert [r.raw for r in roots_in_field(c, F3)] == [2]


def test_roots_multiplicity_suppressed(F3):
    f = UPoly(F3, [1, 2, 1])  # (X+1)^2
    assert [r.raw for r in roots_in_field(f, F3)] == [2]


def test_mixed_fields(F3, F5):
    with pytest.raises(MixedFields):
        UPoly(F3, [1, 1]) + UPoly(F5, [1, 1])
