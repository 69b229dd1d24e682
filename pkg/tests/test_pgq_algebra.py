"""The 3-parameter quaternion algebra."""

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from hq3.errors import MismatchedParams
from hq3.exact_arith import QuadExt
from hq3.pgq_algebra import HAMILTON, PgqParams, Quaternion, commutator

from conftest import rationals, slow_mul

# distinct primes so any table transposition shows up
LAM = PgqParams.of(2, 3, 5)


def units(lam):
    return Quaternion.basis(lam)


def test_multiplication_table():
    one, i, j, k = units(LAM)
    l1, l2, l3 = LAM.as_tuple()
    assert i * i == Quaternion.scalar(-l1 * l2, LAM)
    assert j * j == Quaternion.scalar(-l1 * l3, LAM)
    assert k * k == Quaternion.scalar(-l2 * l3, LAM)
    assert i * j == Quaternion(0, 0, 0, l1, LAM)
    assert j * i == Quaternion(0, 0, 0, -l1, LAM)
    assert j * k == Quaternion(0, l3, 0, 0, LAM)
    assert k * j == Quaternion(0, -l3, 0, 0, LAM)
    assert k * i == Quaternion(0, 0, l2, 0, LAM)
    assert i * k == Quaternion(0, 0, -l2, 0, LAM)
    for u in (one, i, j, k):
        assert one * u == u
        assert u * one == u


def test_hamilton_specialization():
    _, i, j, k = units(HAMILTON)
    assert i * j == k and j * k == i and k * i == j
    assert i * i == j * j == k * k == Quaternion.scalar(-1, HAMILTON)


def test_square_of_one_plus_i_plus_j_plus_k():
    q = Quaternion(1, 1, 1, 1, HAMILTON)
    expected = Quaternion(-2, 2, 2, 2, HAMILTON)
    assert q * q == expected
    assert slow_mul(q, q) == expected


def test_componentwise_module_structure():
    q = Quaternion(1, 1, 0, 0, LAM)
    assert q + Quaternion.zero(LAM) == q
    assert q - q == Quaternion.zero(LAM)
    assert q.scale(2) == Quaternion(2, 2, 0, 0, LAM)
    assert 2 * q == q * 2 == q.scale(2)


def test_conjugate():
    q = Quaternion(1, 1, 1, 1, LAM)
    assert q.conjugate() == Quaternion(1, -1, -1, -1, LAM)
    assert q.conjugate().conjugate() == q
    s = Quaternion.scalar(7, LAM)
    assert s.conjugate() == s


def test_norm_examples():
    assert Quaternion(1, 1, 1, 1, HAMILTON).norm() == 4
    _, i, _, _ = units(LAM)
    assert i.norm() == LAM.l1 * LAM.l2
    assert Quaternion.zero(LAM).norm() == 0


def test_norm_is_scalar_part_of_q_qdag():
    q = Quaternion("1/2", -3, "2/7", 1, LAM)
    prod = q * q.conjugate()
    assert prod.x1 == prod.x2 == prod.x3 == 0
    assert prod.x0 == q.norm()


def test_commutator_basics():
    q = Quaternion(1, 2, 3, 4, LAM)
    assert commutator(q, q) == Quaternion.zero(LAM)
    _, i, j, _ = units(HAMILTON)
    assert commutator(i, j) == Quaternion(0, 0, 0, 2, HAMILTON)


def test_mismatched_params_raise():
    with pytest.raises(MismatchedParams):
        Quaternion.zero(LAM) + Quaternion.zero(HAMILTON)
    with pytest.raises(MismatchedParams):
        Quaternion.zero(LAM) * Quaternion.zero(HAMILTON)


def test_quadext_coefficients_work():
    d = 5
    r5 = QuadExt.sqrt_disc(d)
    q = Quaternion(QuadExt(1, 0, d), r5, QuadExt(0, 0, d), QuadExt(2, 1, d), LAM)
    prod = q * q.conjugate()
    assert prod.x1 == 0 and prod.x2 == 0 and prod.x3 == 0
    assert prod.x0 == q.norm()
    # x0^2 + l1l2 (sqrt5)^2 + l2l3 (2+sqrt5)^2, squared in the ring
    assert q.norm() == 1 + LAM.l1 * LAM.l2 * 5 + LAM.l2 * LAM.l3 * QuadExt(9, 4, d)


def test_rationalized():
    d = 5
    q = Quaternion(QuadExt(1, 0, d), QuadExt("2/3", 0, d), 1, 0, LAM)
    assert q.rationalized() == Quaternion(1, "2/3", 1, 0, LAM)
    bad = Quaternion(QuadExt(0, 1, d), 0, 0, 0, LAM)
    with pytest.raises(ValueError):
        bad.rationalized()


def test_json():
    q = Quaternion("1/2", -3, 0, 1, LAM)
    assert q.to_json() == {
        "x0": "1/2",
        "x1": "-3",
        "x2": "0",
        "x3": "1",
        "lambda": ["2", "3", "5"],
    }


# -- property tests over random parameters ---------------------------------------


lam_strategy = st.tuples(rationals(-3, 3, 4), rationals(-3, 3, 4), rationals(-3, 3, 4)).map(
    lambda t: PgqParams.of(*t)
)


@st.composite
def quaternion_triples(draw):
    lam = draw(lam_strategy)
    def one():
        return Quaternion(
            draw(rationals()), draw(rationals()), draw(rationals()), draw(rationals()), lam
        )
    return one(), one(), one()


@given(quaternion_triples())
def test_associativity(pqr):
    p, q, r = pqr
    assert (p * q) * r == p * (q * r)


@given(quaternion_triples())
def test_multiplication_matches_basis_expansion(pqr):
    p, q, _ = pqr
    assert p * q == slow_mul(p, q)


@given(quaternion_triples())
def test_conjugate_antihomomorphism(pqr):
    p, q, _ = pqr
    assert (p * q).conjugate() == q.conjugate() * p.conjugate()


@given(quaternion_triples())
def test_norm_multiplicativity(pqr):
    p, q, _ = pqr
    assert (p * q).norm() == p.norm() * q.norm()


@given(quaternion_triples())
def test_commutator_has_zero_scalar_part(pqr):
    p, q, _ = pqr
    assert commutator(p, q).x0 == 0
