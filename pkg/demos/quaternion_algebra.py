"""Tour of the 3-parameter quaternion algebra and its norm form."""

from hq3 import HAMILTON, PgqParams, Quaternion, commutator

print("The algebra is spanned by 1, i, j, k with three rational parameters:")
print("  i^2 = -l1*l2, j^2 = -l1*l3, k^2 = -l2*l3")
print("  ij = l1 k = -ji,  jk = l3 i = -kj,  ki = l2 j = -ik\n")

lam = PgqParams.of(2, 3, 5)
one, i, j, k = Quaternion.basis(lam)
print(f"with (l1,l2,l3) = (2,3,5):  i*j = {i * j},  j*i = {j * i},  i*i = {i * i}")

print("\n(1,1,1) recovers Hamilton's quaternions:")
_, hi, hj, hk = Quaternion.basis(HAMILTON)
print(f"  i*j = {hi * hj},  j*k = {hj * hk},  k*i = {hk * hi}")

q = Quaternion(1, 1, 1, 1, HAMILTON)
print(f"\n(1+i+j+k)^2 = {q * q}")

print("\nThe conjugate negates the vector part, and Q Q^dag is a scalar:")
p = Quaternion("1/2", -3, "2/7", 1, lam)
prod = p * p.conjugate()
print(f"  Q = {p}")
print(f"  Q Q^dag = {prod}   (norm = {p.norm()})")

print("\nThe norm is multiplicative, so the algebra is a composition algebra:")
r = Quaternion(2, 0, -1, "1/3", lam)
print(f"  norm(PQ) = {(p * r).norm()} = norm(P) norm(Q) = {p.norm() * r.norm()}")

print("\nNon-commutativity is measured by the commutator [P, Q] = PQ - QP:")
print(f"  [i, j] = {commutator(i, j)}   (always has zero scalar part)")

print("\nZero parameters are allowed and degenerate the algebra gracefully:")
z = PgqParams.of(0, 0, 0)
a = Quaternion(1, 2, 3, 4, z)
b = Quaternion(4, 3, 2, 1, z)
print(f"  with l = (0,0,0): [a, b] = {commutator(a, b)} for every a, b")
