"""One identity end to end: the quaternion Catalan identity at a single point.

The left side multiplies window quaternions built from rational recurrence
values.  The right side is assembled from the characteristic roots inside
Q(sqrt(5)).  They agree coefficient by coefficient, exactly.
"""

from hq3 import HoradamParams, QuatSeqContext, qw
import hq3.quat_sequences as qs

ctx = QuatSeqContext(HoradamParams.of(1, -1, 2, 1, s=2, lam=(1, 2, 3)))
print("Point: Lucas seeds (2, 1), s = 2, lambda = (1, 2, 3)\n")

print("Window quaternions QW_n(2) = W_n(2) + W_{n+1}(2) i + W_{n+2}(2) j + W_{n+3}(2) k:")
for n in range(4):
    print(f"  QW_{n}(2) = {qw(ctx, n)}")

print("\nThe root quaternions behind all closed forms:")
print(f"  Th_a(2) = {ctx.theta_alpha}")
print(f"  Th_b(2) = {ctx.theta_beta}")

print("\nTheir commutator, directly and from its closed form:")
direct, closed = qs.theta_commutator_sides(ctx)
print(f"  direct: {direct}")
print(f"  closed: {closed}")

n, m = 5, 2
lhs, rhs = qs.catalan_sides(ctx, n, m)
print(f"\nCatalan identity at n={n}, m={m}:")
print(f"  QW_n^2 - QW_(n-m) QW_(n+m)    = {lhs}")
print(f"  root-side closed form         = {rhs.rationalized()}")
print(f"  equal: {lhs == rhs}")

print("\nThe d'Ocagne identity at m = n degenerates to the anti-commutation defect:")
lhs, rhs = qs.docagne_diag_sides(ctx, 3)
print(f"  QW_4 QW_3 - QW_3 QW_4 = {lhs}")
print(f"  closed form           = {rhs.rationalized()}")

print("\nThe mixed product against QU vanishes when W_0 = 0 (the sequences collapse):")
fib_ctx = QuatSeqContext(HoradamParams.of(1, -1, 0, 1, s=2, lam=(1, 2, 3)))
lhs, rhs = qs.mixed_product_sides(fib_ctx, 4, 1)
print(f"  at Fibonacci seeds: lhs = {lhs}, rhs = {rhs.rationalized()}")
