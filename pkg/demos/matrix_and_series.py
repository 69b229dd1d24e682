"""Matrix generators and generating-function coefficients, all exact."""

from hq3 import HoradamParams, QuatSeqContext, h_matrix, h_power, h_power_closed, tables_for
import hq3.horadam_core as hc
import hq3.quat_sequences as qs

fib2 = HoradamParams.of(1, -1, 0, 1, s=2)
tab = tables_for(fib2)

print("The companion matrix of the order-s recurrence, H(s) = [[V_s, -q^s], [1, 0]]:")
print(f"  H(2) for Fibonacci: {h_matrix(tab)}")

print("\nIts powers (by exponentiation by squaring) encode U_n(s):")
for n in (1, 2, 3):
    print(f"  H(2)^{n} = {h_power(tab, n)}  vs closed form {h_power_closed(tab, n)}")

print(f"\n  det H(2)^3 = {h_power(tab, 3).det()} = (q^s)^3 = {tab.qs_pow(3)}")

print("\nOrdinary generating function: multiplying the coefficient series of")
print("W_n(s) by 1 - V_s x + q^s x^2 must flatten it to a degree-1 numerator:")
lhs, rhs = hc.ogf_w_sides(tab, 8)
print("  product coefficients:", [str(c) for c in lhs])
print("  expected numerator:  ", [str(c) for c in rhs])

print("\nThe same holds for the quaternion series, with the numerator evaluated")
print("from the roots (every sqrt part cancels):")
ctx = QuatSeqContext(HoradamParams.of(1, -1, 2, 1, s=2, lam=(1, 1, 1)))
lhs, rhs = qs.qw_ogf_sides(ctx, 6)
print("  constant term:", lhs[0], "=", rhs[0].rationalized())
print("  linear term:  ", lhs[1], "=", rhs[1].rationalized())
print("  tail is zero: ", all(not c for c in lhs[2:]))

print("\nThe exponential generating function pins the same closed form at each n:")
print("  coefficient check at n=5:", qs.qw_egf_check(ctx, 5))

print("\nMatrix identity: the window matrix at n equals the seed window matrix")
print("times H(s)^(n-1), with scalars promoted to quaternions:")
lhs, rhs = qs.qw_matrix_sides(ctx, 4)
print("  n=4 entries equal:", lhs == rhs)
