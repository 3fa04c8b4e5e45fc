"""Exact polynomial arithmetic.

Claims checked:
  * ring operations agree with hand-expanded products and sums
  * Horner evaluation, synthetic division and divmod are consistent
  * monic gcd and the squarefree part behave on known factorizations
  * exactness tracking and immutability hold up
"""

from fractions import Fraction

import pytest

from dgexcess import Polynomial


def P(*coeffs):
    return Polynomial(coeffs)


def test_construction_trims_and_tracks_exactness():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0).is_zero and P().is_zero
    assert P(0).degree == -1
    assert P(1, Fraction(1, 2)).exact
    assert not P(1.0, 2.0).exact


def test_ring_operations():
    p = P(1, 1)            # 1 + x
    q = P(-1, 1)           # x - 1
    assert p * q == P(-1, 0, 1)
    assert p + q == P(0, 2)
    assert p - p == Polynomial.zero()
    assert (-p) + p == Polynomial.zero()
    assert 3 * p == P(3, 3)
    assert p * Polynomial.zero() == Polynomial.zero()
    assert Polynomial.monomial(3) == P(0, 0, 0, 1)
    assert Polynomial.one()(17) == 1


def test_evaluation_is_horner_and_generic():
    p = P(Fraction(1), Fraction(-2), Fraction(1))   # (x-1)^2
    assert p(Fraction(3)) == 4
    assert p(1) == 0
    assert abs(p(1.5) - 0.25) < 1e-15
    assert Polynomial.zero()(5) == 0


def test_derivative():
    assert P(5, 3, 0, 2).derivative() == P(3, 0, 6)
    assert P(7).derivative().is_zero


def test_synthetic_division_matches_divmod():
    p = P(-6, 11, -6, 1)   # (x-1)(x-2)(x-3)
    q, r = p.synthetic_divide(2)
    assert r == 0
    assert q * P(-2, 1) == p
    q2, r2 = divmod(p, P(-2, 1))
    assert q2 == q and r2.is_zero


def test_divmod_and_floordiv():
    a = P(Fraction(2), 0, Fraction(1))
    b = P(1, 1)
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree
    with pytest.raises(ZeroDivisionError):
        divmod(a, Polynomial.zero())
    with pytest.raises(ValueError):
        divmod(P(1.0, 1.0), P(1.0))
    with pytest.raises(ValueError):
        P(1, 0, 1) // P(1, 1)
    assert P(-1, 0, 1) // P(1, 1) == P(-1, 1)


def test_gcd_and_squarefree_part():
    a = P(-1, 1) * P(-1, 1) * P(-2, 1)     # (x-1)^2 (x-2)
    b = P(-1, 1) * P(-3, 1)
    assert Polynomial.gcd(a, b) == P(-1, 1)
    assert a.squarefree_part() == P(-1, 1) * P(-2, 1)
    sq = P(0, -2, 0, 1)                    # x^3 - 2x, already squarefree
    assert sq.squarefree_part() == sq.monic()
    assert Polynomial.gcd(a, Polynomial.zero()) == a.monic()


def test_monic_and_coefficient_access():
    p = P(2, 0, 4)
    assert p.monic() == P(Fraction(1, 2), 0, 1)
    assert p.is_monic is False
    assert p.coefficient(1) == 0
    assert p.coefficient(9) == 0


def test_immutability_and_hashing():
    p = P(1, 2)
    with pytest.raises(AttributeError):
        p.coeffs = (3,)
    assert hash(P(1, 2)) == hash(P(1, 2))
    assert P(1, 2) != P(1, 2, 3)


def test_map_coefficients():
    p = P(Fraction(1, 2), Fraction(3, 2))
    doubled = p.map_coefficients(lambda c: 2 * c)
    assert doubled == P(1, 3)
    as_float = p.map_coefficients(float)
    assert not as_float.exact
