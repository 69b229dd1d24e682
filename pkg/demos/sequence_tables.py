"""Tour of the scalar sequences: W, U, V and their order-s normalizations."""

from hq3 import HoradamParams, higher_u, higher_w_ratio, higher_w_rec, horadam_w, lucas_v, tables_for

print("Fibonacci numbers are the Horadam sequence with p=1, q=-1, W0=0, W1=1:")
fib = HoradamParams.of(1, -1, 0, 1)
print(" ", [str(horadam_w(fib, n)) for n in range(10)])

print("\nThe companion sequence V_n (seeds 2, p) collects the root power sums:")
print(" ", [str(lucas_v(fib, n)) for n in range(10)])

print("\nSeeds are arbitrary rationals; p, q too.  W with p=5/2, q=-1/3, seeds 2, -1/2:")
odd = HoradamParams.of("5/2", "-1/3", 2, "-1/2")
print(" ", [str(horadam_w(odd, n)) for n in range(6)])

print("\nThe order-s sequence W_n(s) = W_{sn}/W_s picks every s-th term, normalized")
print("so that W_1(s) = 1.  For Lucas numbers (seeds 2, 1) at s = 2:")
lucas2 = HoradamParams.of(1, -1, 2, 1, s=2)
print("  recurrence route:", [str(higher_w_rec(lucas2, n)) for n in range(6)])
print("  ratio route:     ", [str(higher_w_ratio(lucas2, n)) for n in range(6)])
print("  (two independent computations; the library cross-checks them everywhere)")

print("\nU_n(2) for Fibonacci is the bisection F_{2n}/F_2:")
fib2 = HoradamParams.of(1, -1, 0, 1, s=2)
print(" ", [str(higher_u(fib2, n)) for n in range(8)])

tab = tables_for(lucas2)
print("\nEverything is exact rational arithmetic: W_0(2) for Lucas is", tab.ws(0))
print("and the order-2 recurrence coefficients are V_2 =", tab.vs, "and q^2 =", tab.qs)
