"""Shared test helpers: independent oracles and hypothesis strategies.

The oracles here deliberately avoid the library's own computation paths:
sequence tables come from bare integer recurrences, and quaternion products
from a literal basis-times-basis expansion.
"""

from gmpy2 import mpq
from hypothesis import strategies as st

from hq3.pgq_algebra import Quaternion


def rationals(min_value=-5, max_value=5, max_denominator=6):
    return st.fractions(
        min_value=min_value, max_value=max_value, max_denominator=max_denominator
    ).map(mpq)


def nonzero_rationals(**kw):
    return rationals(**kw).filter(lambda x: x != 0)


# -- recurrence oracles ------------------------------------------------------


def seq_oracle(p, q, w0, w1, count):
    """First `count` terms of x_{n+2} = p x_{n+1} - q x_n by bare iteration."""
    out = [mpq(w0), mpq(w1)]
    while len(out) < count:
        out.append(p * out[-1] - q * out[-2])
    return out[:count]


def fib_oracle(count):
    return seq_oracle(1, -1, 0, 1, count)


def lucas_oracle(count):
    return seq_oracle(1, -1, 2, 1, count)


def mersenne_oracle(count):
    return seq_oracle(3, 2, 0, 1, count)


# -- quaternion multiplication oracle -----------------------------------------


def _unit_product(i, j, lam):
    """(coefficient, basis index) of e_i * e_j from the multiplication table."""
    l1, l2, l3 = lam
    if i == 0:
        return mpq(1), j
    if j == 0:
        return mpq(1), i
    table = {
        (1, 1): (-l1 * l2, 0),
        (1, 2): (l1, 3),
        (1, 3): (-l2, 2),
        (2, 1): (-l1, 3),
        (2, 2): (-l1 * l3, 0),
        (2, 3): (l3, 1),
        (3, 1): (l2, 2),
        (3, 2): (-l3, 1),
        (3, 3): (-l2 * l3, 0),
    }
    return table[(i, j)]


def slow_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """16-term basis expansion of p*q; independent of Quaternion.__mul__."""
    lam = (p.lam.l1, p.lam.l2, p.lam.l3)
    out = [mpq(0)] * 4
    for i, xc in enumerate(p.coeffs):
        for j, yc in enumerate(q.coeffs):
            c, k = _unit_product(i, j, lam)
            out[k] = out[k] + xc * yc * c
    return Quaternion(out[0], out[1], out[2], out[3], p.lam)
