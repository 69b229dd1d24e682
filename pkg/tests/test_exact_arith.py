"""Rationals and the quadratic extension."""

import math
from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from hq3.errors import (
    DegenerateRoots,
    DivisionByZero,
    MismatchedDiscriminant,
    ZeroRoot,
)
from hq3.exact_arith import QuadExt, embed_roots, rat, rat_str

from conftest import nonzero_rationals, rationals


# -- rational carrier ----------------------------------------------------------


def test_rat_parsing():
    assert rat("3/4") == mpq(3, 4)
    assert rat("-2") == -2
    assert rat(7) == 7
    assert rat(Fraction(2, 6)) == mpq(1, 3)
    assert rat(mpq(5, 10)) == mpq(1, 2)


def test_rat_rejects_floats_and_junk():
    with pytest.raises(TypeError):
        rat(0.5)
    with pytest.raises(ValueError):
        rat("three")


def test_rat_str_round_trip():
    for text in ("0", "-7", "3/4", "-22/7"):
        assert rat_str(rat(text)) == text


@given(rationals(), rationals())
def test_canonical_form(x, y):
    for value in (x + y, x * y, x - y):
        assert value.denominator > 0
        assert math.gcd(int(value.numerator), int(value.denominator)) == 1


# -- QuadExt basics -------------------------------------------------------------


def test_conjugate_pair_sums_to_trace():
    x = QuadExt(1, 2, 5)
    y = QuadExt(3, -2, 5)
    assert x + y == QuadExt(4, 0, 5)
    assert x + y == 4


def test_additive_identity_and_doubling():
    x = QuadExt("1/2", 1, 5)
    assert x + 0 == x
    assert x + x == QuadExt(1, 2, 5)


def test_sqrt_d_squares_to_d():
    r5 = QuadExt.sqrt_disc(5)
    assert r5 * r5 == 5


def test_golden_ratio_square():
    # ((1+sqrt5)/2)^2 = (3+sqrt5)/2, by hand: (1 + 2 sqrt5 + 5)/4
    alpha, _, _ = embed_roots(1, -1)
    assert alpha * alpha == QuadExt("3/2", "1/2", 5)


def test_roots_satisfy_vieta():
    alpha, beta, d = embed_roots(1, -1)
    assert d == 5
    assert alpha + beta == 1
    assert alpha * beta == -1


def test_inverse_rational_case():
    two = QuadExt(2, 0, 5)
    assert two.inverse() == mpq(1, 2)


def test_inverse_of_sqrt():
    r5 = QuadExt.sqrt_disc(5)
    assert r5.inverse() == QuadExt(0, "1/5", 5)


def test_inverse_of_root():
    alpha, _, _ = embed_roots(1, -1)
    assert alpha.inverse() * alpha == 1


def test_conjugation():
    x = QuadExt(3, 2, 5)
    assert x.conjugate() == QuadExt(3, -2, 5)
    assert x.conjugate().conjugate() == x
    alpha, beta, _ = embed_roots("1/2", "-3/4")
    assert alpha.conjugate() == beta


def test_embed_roots_rational_root_case():
    # x^2 - 3x + 2 has roots 2, 1; D = 1 stays as stored discriminant
    alpha, beta, d = embed_roots(3, 2)
    assert d == 1
    assert alpha == QuadExt("3/2", "1/2", 1)
    assert alpha + beta == 3 and alpha * beta == 2


def test_embed_roots_degenerate():
    with pytest.raises(DegenerateRoots):
        embed_roots(2, 1)
    with pytest.raises(ZeroRoot):
        embed_roots(2, 0)


def test_zero_divisor_has_no_inverse():
    # in Q[x]/(x^2 - 1): (1 + x)(1 - x) = 0
    x = QuadExt(1, 1, 1)
    assert x * QuadExt(1, -1, 1) == 0
    with pytest.raises(DivisionByZero):
        x.inverse()


def test_mismatched_discriminants_raise():
    with pytest.raises(MismatchedDiscriminant):
        QuadExt(0, 1, 5) + QuadExt(0, 1, 13)
    with pytest.raises(MismatchedDiscriminant):
        QuadExt(0, 1, 5) * QuadExt(0, 1, 13)


def test_rational_values_equal_across_discriminants():
    assert QuadExt(2, 0, 5) == QuadExt(2, 0, 13)
    assert QuadExt(2, 0, 5) == 2
    assert hash(QuadExt(2, 0, 5)) == hash(mpq(2))


def test_pow_matches_repeated_multiplication():
    alpha, _, _ = embed_roots(2, -3)
    acc = QuadExt(1, 0, alpha.d)
    for k in range(9):
        assert alpha**k == acc
        acc = acc * alpha
    assert alpha**-2 == (alpha.inverse()) ** 2


def test_json_round_trip():
    x = QuadExt("-3/2", "1/7", "5/4")
    assert QuadExt.from_json(x.to_json()) == x
    assert x.to_json() == {"a": "-3/2", "b": "1/7", "D": "5/4"}


# -- field laws (property-based, shared D incl. negative and square D) -----------


def quad_elements(d):
    return st.tuples(rationals(), rationals()).map(lambda ab: QuadExt(ab[0], ab[1], d))


@st.composite
def quad_triples(draw):
    d = draw(nonzero_rationals(min_value=-6, max_value=6))
    els = quad_elements(d)
    return draw(els), draw(els), draw(els)


@given(quad_triples())
def test_field_laws(xyz):
    x, y, z = xyz
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) + z == x + (y + z)
    if x.norm() != 0:
        assert x * x.inverse() == 1


@given(quad_triples())
def test_conjugation_is_ring_homomorphism(xyz):
    x, y, _ = xyz
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()


@given(quad_triples())
def test_trace_and_norm_are_rational(xyz):
    x, _, _ = xyz
    assert (x + x.conjugate()).is_rational
    assert (x * x.conjugate()).is_rational
    assert x.trace() == (x + x.conjugate()).as_rational()
    assert x.norm() == (x * x.conjugate()).as_rational()
