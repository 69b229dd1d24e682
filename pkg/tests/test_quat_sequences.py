"""Quaternion-valued sequences: closed forms and the full identity suite."""

import pytest
from gmpy2 import mpq

from hq3.errors import DegenerateDenominator, UndefinedSequence
from hq3.exact_arith import QuadExt
from hq3.horadam_core import HoradamParams, tables_for
from hq3.pgq_algebra import HAMILTON, PgqParams, Quaternion, commutator
from hq3.quat_sequences import (
    Mat2,
    QuatSeqContext,
    catalan_sides,
    cassini_sides,
    docagne_diag_sides,
    docagne_sides,
    double_index_sides,
    h_matrix,
    h_power,
    h_power_closed,
    index_reduction_checks,
    index_shift_sides,
    mixed_product_diag_sides,
    mixed_product_sides,
    qu_binet,
    qu_binet_sides,
    qu_ogf_check,
    qw_binet,
    qw_binet_sides,
    qw_egf_check,
    qw_matrix_check,
    qw_matrix_sides,
    qw_norm_sides,
    qw_ogf_check,
    qw_ogf_sides,
    qw_recurrence_check,
    qw_recurrence_sides,
    qw_sum_sides,
    theta_commutator,
    theta_commutator_sides,
    theta_products,
    theta_products_closed,
)

from conftest import slow_mul


def ctx_of(p, q, w0, w1, s=1, lam=(1, 1, 1)):
    return QuatSeqContext(HoradamParams.of(p, q, w0, w1, s=s, lam=lam))


FIB1 = ctx_of(1, -1, 0, 1)
FIB2 = ctx_of(1, -1, 0, 1, s=2)
LUCAS2 = ctx_of(1, -1, 2, 1, s=2)

# a spread of parameter points exercising zero, negative and fractional values
SWEEP = [
    FIB1,
    FIB2,
    LUCAS2,
    ctx_of(1, -1, 2, 1, s=2, lam=(1, 2, 3)),
    ctx_of(1, -1, 2, 1, s=2, lam=(0, 0, 0)),
    ctx_of(3, 2, 0, 1, s=2, lam=(-1, 2, 1)),
    ctx_of(2, -3, "1/2", "1/3", s=2, lam=(2, 1, -1)),
    ctx_of(-2, "3/2", 1, -1, s=3, lam=(1, 0, 2)),
]


def test_qw_qu_windows():
    assert FIB1.qu(0) == Quaternion(0, 1, 1, 2, HAMILTON)
    assert LUCAS2.qw(0) == Quaternion(mpq(2, 3), 1, mpq(7, 3), 6, HAMILTON)
    mersenne = ctx_of(3, 2, 0, 1)
    assert mersenne.qu(1) == Quaternion(1, 3, 7, 15, HAMILTON)
    # window shift: coefficients of qw(n+1) are qw(n)'s shifted left
    for n in range(5):
        a, b = LUCAS2.qw(n), LUCAS2.qw(n + 1)
        assert (a.x1, a.x2, a.x3) == (b.x0, b.x1, b.x2)


def test_qw_needs_nonzero_w_s():
    bad = ctx_of(1, -1, 1, 0)  # W_1 = 0
    with pytest.raises(UndefinedSequence):
        bad.qw(0)


def test_recurrence_identity():
    # componentwise Fibonacci: QF_2 = 1*QF_1 - (-1)*QF_0
    lhs, rhs = qw_recurrence_sides(FIB1, 0)
    assert lhs == FIB1.qw(1).scale(1) - FIB1.qw(0).scale(-1) == rhs
    for ctx in SWEEP:
        for n in range(9):
            assert qw_recurrence_check(ctx, n)


def test_norm_identity_fibonacci_example():
    direct, closed = qw_norm_sides(FIB1, 0)
    assert direct == 6  # 0 + 1 + 1 + 4
    assert closed == 6  # (2 + V_2 + V_4 + V_6)/5 = (2+3+7+18)/5


def test_norm_identity_zero_lambda():
    ctx = ctx_of(1, -1, 2, 1, s=2, lam=(0, 0, 0))
    for n in range(6):
        direct, closed = qw_norm_sides(ctx, n)
        assert direct == ctx.tab.ws(n) ** 2
        assert closed == direct


def test_norm_identity_sweep():
    for ctx in SWEEP:
        for n in range(9):
            direct, closed = qw_norm_sides(ctx, n)
            assert closed.is_rational
            assert closed == direct


def test_binet_reproduces_definition_at_zero():
    for ctx in SWEEP:
        got = qw_binet(ctx, 0)
        assert got.is_rational
        assert got == ctx.qw(0)


def test_binet_golden_values():
    assert qu_binet(FIB2, 2) == Quaternion(3, 8, 21, 55, HAMILTON)
    assert qw_binet(LUCAS2, 1) == Quaternion(1, mpq(7, 3), 6, mpq(47, 3), HAMILTON)


def test_binet_sweep():
    for ctx in SWEEP:
        for n in range(9):
            lhs, rhs = qw_binet_sides(ctx, n)
            assert rhs.is_rational and lhs == rhs
            lhs, rhs = qu_binet_sides(ctx, n)
            assert rhs.is_rational and lhs == rhs


def test_binet_conjugation_symmetry():
    # coefficientwise conjugation fixes the (rational) value and swaps the terms
    ctx = LUCAS2
    value = qw_binet(ctx, 3)
    assert value.map_coeffs(lambda c: c.conjugate()) == value
    assert ctx.theta_alpha.map_coeffs(lambda c: c.conjugate()) == ctx.theta_beta


def test_theta_products_scalar_part():
    for ctx in SWEEP:
        ab, ba = theta_products(ctx)
        lam = ctx.lam
        expected = (
            1
            - lam.l1 * lam.l2 * ctx.tab.qs_pow(1)
            - lam.l1 * lam.l3 * ctx.tab.qs_pow(2)
            - lam.l2 * lam.l3 * ctx.tab.qs_pow(3)
        )
        assert ab.x0 == expected and ba.x0 == expected
        # the symmetrized product and both scalar parts are rational
        sym = ab + ba
        assert sym.is_rational


def test_theta_products_closed_forms():
    for ctx in SWEEP:
        direct = theta_products(ctx)
        closed = theta_products_closed(ctx)
        assert direct[0] == closed[0]
        assert direct[1] == closed[1]


def test_theta_products_zero_lambda():
    ctx = ctx_of(1, -1, 2, 1, s=2, lam=(0, 0, 0))
    ab, ba = theta_products(ctx)
    tab = ctx.tab
    expected = Quaternion(1, tab.v(2), tab.v(4), tab.v(6), ctx.lam)
    assert ab == expected and ba == expected


def test_commutator_closed_form():
    for ctx in SWEEP:
        direct, closed = theta_commutator_sides(ctx)
        assert direct == closed
        assert direct.x0 == 0
        assert direct == commutator(ctx.theta_beta, ctx.theta_alpha)
        # alternative factorization through (alpha - beta) U_s
        alt = ctx.twist.scale(
            2 * ctx.qs * (ctx.root.sqrt_d * ctx.tab.u(ctx.s))
        )
        assert direct == alt


def test_commutator_vanishes_for_zero_lambda():
    ctx = ctx_of(1, -1, 2, 1, s=2, lam=(0, 0, 0))
    assert theta_commutator(ctx) == Quaternion.zero(ctx.lam)


def test_catalan_hand_value():
    # lhs = QF_1^2 - QF_0 QF_2 = (2, 2, 4, 3), worked out by basis expansion
    lhs, rhs = catalan_sides(FIB1, 1, 1)
    brute = slow_mul(FIB1.qw(1), FIB1.qw(1)) - slow_mul(FIB1.qw(0), FIB1.qw(2))
    assert lhs == brute == Quaternion(2, 2, 4, 3, HAMILTON)
    assert rhs == lhs


def test_catalan_m0_vanishes():
    for ctx in SWEEP:
        lhs, rhs = catalan_sides(ctx, 4, 0)
        assert not lhs and not rhs


def test_catalan_sweep():
    for ctx in SWEEP:
        for n in range(7):
            for m in range(n + 1):
                lhs, rhs = catalan_sides(ctx, n, m)
                assert rhs.is_rational
                assert lhs == rhs


def test_cassini_equals_catalan_at_m1():
    for ctx in SWEEP:
        for n in range(1, 7):
            assert cassini_sides(ctx, n) == catalan_sides(ctx, n, 1)


def test_docagne_sweep_and_corollary():
    lhs, rhs = docagne_sides(FIB1, 1, 0)
    assert lhs == rhs
    for ctx in SWEEP:
        for n in range(7):
            for m in range(n + 1):
                lhs, rhs = docagne_sides(ctx, n, m)
                assert lhs == rhs
        for n in range(7):
            assert docagne_diag_sides(ctx, n) == docagne_sides(ctx, n, n)


def test_docagne_diag_zero_lambda_commutes():
    ctx = ctx_of(3, 2, 1, "1/2", s=1, lam=(0, 0, 0))
    lhs, rhs = docagne_diag_sides(ctx, 3)
    assert not lhs and not rhs


def test_sum_identity():
    lhs, rhs = qw_sum_sides(FIB2, 3)
    assert lhs.x0 == 12  # matches the scalar partial-sum example
    assert lhs == rhs
    for ctx in SWEEP:
        if ctx.tab.sum_denom == 0:
            continue
        for n in range(8):
            lhs, rhs = qw_sum_sides(ctx, n)
            assert lhs == rhs
        assert qw_sum_sides(ctx, 0)[0] == ctx.qw(0)


def test_sum_offset_k_component_forms_agree():
    # (1 - q^s) W_0(s) + (1 + V_s) W_1(s) = W_0(s) + W_1(s) + W_2(s)
    for ctx in SWEEP:
        tab = ctx.tab
        if tab.w(tab.s) == 0:
            continue
        assert ctx.phi_offset.x3 == tab.ws(0) + tab.ws(1) + tab.ws(2)


def test_sum_degenerate_denominator():
    ctx = ctx_of(3, 2, 1, 1)  # q - V_1 + 1 = 0
    with pytest.raises(DegenerateDenominator):
        qw_sum_sides(ctx, 2)


def test_mixed_product_zero_seed_vanishes():
    ctx = ctx_of(1, -1, 0, 1, s=2, lam=(1, 2, 3))  # W_0 = 0
    for (n, m) in ((0, 0), (3, 1), (5, 5)):
        lhs, rhs = mixed_product_sides(ctx, n, m)
        assert not lhs and not rhs


def test_mixed_product_diag_zero_lambda():
    ctx = ctx_of(1, -1, 2, 1, s=2, lam=(0, 0, 0))
    lhs, rhs = mixed_product_diag_sides(ctx, 4)
    assert not lhs and not rhs


def test_mixed_product_sweep():
    lucas1 = ctx_of(1, -1, 2, 1)
    lhs, rhs = mixed_product_sides(lucas1, 2, 1)
    assert lhs == rhs
    for ctx in SWEEP:
        for n in range(7):
            for m in range(n + 1):
                lhs, rhs = mixed_product_sides(ctx, n, m)
                assert rhs.is_rational
                assert lhs == rhs
        for n in range(7):
            assert mixed_product_diag_sides(ctx, n) == mixed_product_sides(ctx, n, n)


def test_ogf_trivial_and_deep():
    for ctx in SWEEP:
        assert qw_ogf_check(ctx, 2)
        assert qu_ogf_check(ctx, 2)
    assert qw_ogf_check(FIB2, 12)
    assert qu_ogf_check(FIB2, 12)
    assert qw_ogf_check(ctx_of(1, -1, 2, 1, s=3, lam=(1, 1, 1)), 12)


def test_ogf_numerator_terms():
    for ctx in SWEEP:
        lhs, rhs = qw_ogf_sides(ctx, 8)
        assert lhs[0] == ctx.qw(0)
        assert rhs[0] == ctx.qw(0)
        assert rhs[1] == ctx.qw(1) - ctx.qw(0).scale(ctx.vs)
        assert all(not c for c in lhs[2:])


def test_egf_reduces_to_closed_form():
    assert qw_egf_check(FIB2, 0)
    assert qw_egf_check(FIB2, 5)
    assert qw_egf_check(ctx_of(1, -1, 2, 1, s=3), 4)
    for ctx in SWEEP:
        for n in range(7):
            assert qw_egf_check(ctx, n)


def test_h_matrix_and_powers():
    tab = tables_for(FIB2.params)
    h = h_matrix(tab)
    assert h == Mat2(3, -1, 1, 0)
    assert h_power(tab, 1) == h == h_power_closed(tab, 1)
    assert h_power(tab, 3) == Mat2(21, -8, 8, -3)
    for ctx in SWEEP:
        t = ctx.tab
        if t.u(t.s) == 0:
            continue
        for n in range(1, 9):
            assert h_power(t, n) == h_power_closed(t, n)
            assert h_power(t, n).det() == t.qs_pow(n)


def test_h_power_index_addition():
    tab = tables_for(LUCAS2.params)
    for n in range(1, 6):
        for m in range(1, 6):
            assert h_power(tab, n) * h_power(tab, m) == h_power(tab, n + m)


def test_matrix_identity():
    lhs, rhs = qw_matrix_sides(LUCAS2, 1)
    assert lhs == rhs  # n = 1: both sides are the seed matrix
    assert qw_matrix_check(ctx_of(1, -1, 2, 1, s=2), 4)
    assert qw_matrix_check(FIB1, 5)
    for ctx in SWEEP:
        for n in range(1, 8):
            assert qw_matrix_check(ctx, n)


def test_index_reduction():
    # n=0, m=1: QW_2 = QW_2 U_1 - q^s QW_1 U_0
    lhs, rhs = index_shift_sides(FIB2, 0, 1)
    assert lhs == rhs == FIB2.qw(2)
    # second form at n=1 for the higher-order Fibonacci point
    lhs, rhs = double_index_sides(FIB2, 1)
    assert lhs == FIB2.qw(1).scale(3) - FIB2.qw(0).scale(1)
    assert lhs == rhs
    assert index_reduction_checks(LUCAS2, 2, 2)
    for ctx in SWEEP:
        for n in range(6):
            for m in range(1, 6):
                assert index_reduction_checks(ctx, n, m)


def test_hypothesis_bounds_enforced():
    with pytest.raises(ValueError):
        catalan_sides(FIB1, 1, 2)
    with pytest.raises(ValueError):
        cassini_sides(FIB1, 0)
    with pytest.raises(ValueError):
        qw_matrix_sides(FIB1, 0)
    with pytest.raises(ValueError):
        double_index_sides(FIB1, 0)
    with pytest.raises(ValueError):
        index_shift_sides(FIB1, 0, 0)


def test_mixed_product_needs_u_s():
    ctx = ctx_of(0, -1, 2, 1, s=2)  # U_2 = 0 but W_2 = -2 q W_0... check W first
    with pytest.raises(UndefinedSequence):
        mixed_product_sides(ctx, 1, 0)
