"""Scalar sequences and their quadratic identities.

Covers the Horadam recurrence W_{n+2} = p W_{n+1} - q W_n with seeds (W0, W1),
its companion V_n (V_0 = 2, V_1 = p) and generalized-Fibonacci U_n (U_0 = 0,
U_1 = 1) specializations, and the order-s normalizations

    W_n(s) = W_{sn} / W_s        U_n(s) = U_{sn} / U_s

which satisfy X_{n+2}(s) = V_s X_{n+1}(s) - q^s X_n(s).  The normalized values
are produced by that recurrence; the defining ratio is kept as an independent
cross-check (`higher_w_ratio` / `higher_u_ratio`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from .errors import DegenerateDenominator, DegenerateRoots, UndefinedSequence, ZeroRoot
from .exact_arith import QuadExt, Rational, embed_roots, rat
from .pgq_algebra import HAMILTON, PgqParams


@dataclass(frozen=True)
class HoradamParams:
    """One parameter point: recurrence (p, q), seeds (W0, W1), order s, quaternion parameters."""

    p: Rational
    q: Rational
    w0: Rational
    w1: Rational
    s: int = 1
    lam: PgqParams = HAMILTON

    def __post_init__(self):
        for name in ("p", "q", "w0", "w1"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if not isinstance(self.s, int) or self.s < 1:
            raise ValueError(f"s must be a positive integer, got {self.s!r}")
        if self.q == 0:
            raise ZeroRoot("q = 0: zero is a characteristic root")
        if self.disc == 0:
            raise DegenerateRoots("p^2 - 4q = 0: repeated characteristic root")

    @classmethod
    def of(cls, p, q, w0, w1, s: int = 1, lam=(1, 1, 1)) -> HoradamParams:
        if not isinstance(lam, PgqParams):
            lam = PgqParams.of(*lam)
        return cls(rat(p), rat(q), rat(w0), rat(w1), int(s), lam)

    @property
    def disc(self):
        """Discriminant p^2 - 4q of the characteristic polynomial."""
        return self.p * self.p - 4 * self.q

    def scalar_key(self):
        """The lambda-free part; sequence values depend only on this."""
        return (self.p, self.q, self.w0, self.w1, self.s)


def _check_index(n: int):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"index must be an integer >= 0, got {n!r}")


class SequenceTables:
    """Growable memo tables for one (p, q, W0, W1, s) point.

    All accessors are O(1) amortized; values are exact rationals.  Instances
    are cheap to build and safe to share within one task; `tables_for` caches
    one per parameter point.
    """

    def __init__(self, p, q, w0, w1, s: int):
        self.p = rat(p)
        self.q = rat(q)
        self.w0 = rat(w0)
        self.w1 = rat(w1)
        self.s = int(s)
        if self.q == 0:
            raise ZeroRoot("q = 0: zero is a characteristic root")
        if self.p * self.p - 4 * self.q == 0:
            raise DegenerateRoots("p^2 - 4q = 0: repeated characteristic root")
        if self.s < 1:
            raise ValueError("s must be >= 1")
        self.qs = self.q**self.s
        self._w = [self.w0, self.w1]
        self._u = [mpq(0), mpq(1)]
        self._v = [mpq(2), self.p]
        self._qs_pow = [mpq(1)]
        self._ws: list | None = None
        self._us: list | None = None
        self._wsum: list | None = None
        self._inv_ws = None
        self._inv_us = None
        self._vs = None
        self._ab = None

    @classmethod
    def for_params(cls, params: HoradamParams) -> SequenceTables:
        return cls(*params.scalar_key())

    def _extend(self, table: list, n: int, c1, c0):
        while len(table) <= n:
            table.append(c1 * table[-1] - c0 * table[-2])

    # -- the three base sequences -------------------------------------------

    def w(self, n: int):
        _check_index(n)
        self._extend(self._w, n, self.p, self.q)
        return self._w[n]

    def u(self, n: int):
        _check_index(n)
        self._extend(self._u, n, self.p, self.q)
        return self._u[n]

    def v(self, n: int):
        _check_index(n)
        self._extend(self._v, n, self.p, self.q)
        return self._v[n]

    @property
    def vs(self):
        """V_s = alpha^s + beta^s, the order-s recurrence coefficient."""
        if self._vs is None:
            self._vs = self.v(self.s)
        return self._vs

    def qs_pow(self, k: int):
        """(q^s)^k."""
        _check_index(k)
        t = self._qs_pow
        while len(t) <= k:
            t.append(t[-1] * self.qs)
        return t[k]

    # -- order-s normalizations ----------------------------------------------

    def ws(self, n: int):
        """W_n(s) via the order-s recurrence; requires W_s != 0."""
        _check_index(n)
        if self._ws is None:
            den = self.w(self.s)
            if den == 0:
                raise UndefinedSequence("W_s = 0")
            self._inv_ws = 1 / den
            self._ws = [self.w0 * self._inv_ws, mpq(1)]
        self._extend(self._ws, n, self.vs, self.qs)
        return self._ws[n]

    def us(self, n: int):
        """U_n(s) via the order-s recurrence; requires U_s != 0."""
        _check_index(n)
        if self._us is None:
            den = self.u(self.s)
            if den == 0:
                raise UndefinedSequence("U_s = 0")
            self._inv_us = 1 / den
            self._us = [mpq(0), mpq(1)]
        self._extend(self._us, n, self.vs, self.qs)
        return self._us[n]

    def ws_inv(self):
        """1 / W_s (initializes the W(s) table)."""
        self.ws(0)
        return self._inv_ws

    def us_inv(self):
        self.us(0)
        return self._inv_us

    def ws_ratio(self, n: int):
        """W_n(s) directly as W_{sn} / W_s; independent of the `ws` recurrence."""
        _check_index(n)
        den = self.w(self.s)
        if den == 0:
            raise UndefinedSequence("W_s = 0")
        return self.w(self.s * n) / den

    def us_ratio(self, n: int):
        _check_index(n)
        den = self.u(self.s)
        if den == 0:
            raise UndefinedSequence("U_s = 0")
        return self.u(self.s * n) / den

    def wsum(self, n: int):
        """Partial sum W_0(s) + ... + W_n(s)."""
        _check_index(n)
        if self._wsum is None:
            self._wsum = [self.ws(0)]
        t = self._wsum
        while len(t) <= n:
            t.append(t[-1] + self.ws(len(t)))
        return t[n]

    @property
    def ab(self):
        """A*B = W1^2 - p W0 W1 + q W0^2, the invariant of the seed pair."""
        if self._ab is None:
            self._ab = self.w1 * self.w1 - self.p * self.w0 * self.w1 + self.q * self.w0 * self.w0
        return self._ab

    @property
    def sum_denom(self):
        """q^s - V_s + 1, the partial-sum denominator."""
        return self.qs - self.vs + 1


@lru_cache(maxsize=None)
def _tables_cached(key) -> SequenceTables:
    return SequenceTables(*key)


def tables_for(params: HoradamParams) -> SequenceTables:
    return _tables_cached(params.scalar_key())


# -- sequence values ----------------------------------------------------------


def horadam_w(params: HoradamParams, n: int):
    """W_n: W_0, W_1 seeds, W_{n+2} = p W_{n+1} - q W_n."""
    return tables_for(params).w(n)


def lucas_v(params: HoradamParams, n: int):
    """V_n = alpha^n + beta^n (V_0 = 2, V_1 = p, same recurrence)."""
    return tables_for(params).v(n)


def fib_u(params: HoradamParams, n: int):
    """U_n: the W_0 = 0, W_1 = 1 specialization."""
    return tables_for(params).u(n)


def higher_w_ratio(params: HoradamParams, n: int):
    """W_n(s) = W_{sn} / W_s computed literally from the base table."""
    return tables_for(params).ws_ratio(n)


def higher_w_rec(params: HoradamParams, n: int):
    """W_n(s) via the order-s recurrence with coefficients V_s and q^s."""
    return tables_for(params).ws(n)


def higher_u(params: HoradamParams, n: int):
    """U_n(s) = U_{sn} / U_s (computed by the order-s recurrence)."""
    return tables_for(params).us(n)


def higher_u_ratio(params: HoradamParams, n: int):
    return tables_for(params).us_ratio(n)


def ab_product(params: HoradamParams):
    """A*B = W1^2 - p W0 W1 + q W0^2."""
    return tables_for(params).ab


# -- closed forms in Q(sqrt(D)), used as cross-oracles -------------------------


def _root_data(params: HoradamParams):
    alpha, beta, _ = embed_roots(params.p, params.q)
    a_coeff = params.w1 - params.w0 * beta
    b_coeff = params.w1 - params.w0 * alpha
    return alpha, beta, a_coeff, b_coeff


def binet_w(params: HoradamParams, n: int) -> QuadExt:
    """(A alpha^n - B beta^n) / (alpha - beta); rational and equal to W_n."""
    _check_index(n)
    alpha, beta, a_coeff, b_coeff = _root_data(params)
    return (a_coeff * alpha**n - b_coeff * beta**n) / (alpha - beta)

def binet_u(params: HoradamParams, n: int) -> QuadExt:
    _check_index(n)
    alpha, beta, _, _ = _root_data(params)
    return (alpha**n - beta**n) / (alpha - beta)


def binet_v(params: HoradamParams, n: int) -> QuadExt:
    _check_index(n)
    alpha, beta, _, _ = _root_data(params)
    return alpha**n + beta**n


def w0s_binet_form(params: HoradamParams) -> QuadExt:
    """W_0(s) as W_0 (alpha - beta) / (A alpha^s - B beta^s), evaluated exactly.

    Rational (sqrt part 0) and equal to W_0 / W_s whenever W_s != 0.
    """
    tab = tables_for(params)
    if tab.w(tab.s) == 0:
        raise UndefinedSequence("W_s = 0")
    alpha, beta, a_coeff, b_coeff = _root_data(params)
    denom = a_coeff * alpha**tab.s - b_coeff * beta**tab.s
    return (params.w0 * (alpha - beta)) * denom.inverse()


# -- quadratic identities (each returns both sides) -----------------------------


def _require_nm(n: int, m: int):
    _check_index(n)
    _check_index(m)
    if m > n:
        raise ValueError(f"need n >= m >= 0, got n={n}, m={m}")


def catalan_w_sides(tab: SequenceTables, n: int, m: int):
    """W_n(s)^2 - W_{n-m}(s) W_{n+m}(s)  vs  AB q^{s(n-m)} (U_{sm}/W_s)^2."""
    _require_nm(n, m)
    lhs = tab.ws(n) ** 2 - tab.ws(n - m) * tab.ws(n + m)
    ratio = tab.u(tab.s * m) * tab.ws_inv()
    rhs = tab.ab * tab.qs_pow(n - m) * ratio * ratio
    return lhs, rhs


def cassini_w_sides(tab: SequenceTables, n: int):
    """The m = 1 case: W_n(s)^2 - W_{n-1}(s) W_{n+1}(s) = AB q^{s(n-1)} (U_s/W_s)^2."""
    if n < 1:
        raise ValueError("Cassini form needs n >= 1")
    lhs = tab.ws(n) ** 2 - tab.ws(n - 1) * tab.ws(n + 1)
    ratio = tab.u(tab.s) * tab.ws_inv()
    rhs = tab.ab * tab.qs_pow(n - 1) * ratio * ratio
    return lhs, rhs


def docagne_w_sides(tab: SequenceTables, n: int, m: int):
    """W_{m+1}(s) W_n(s) - W_m(s) W_{n+1}(s)  vs  AB q^{sm} U_s U_{s(n-m)} / W_s^2."""
    _require_nm(n, m)
    lhs = tab.ws(m + 1) * tab.ws(n) - tab.ws(m) * tab.ws(n + 1)
    inv = tab.ws_inv()
    rhs = tab.ab * tab.qs_pow(m) * tab.u(tab.s) * tab.u(tab.s * (n - m)) * inv * inv
    return lhs, rhs


def catalan_u_sides(tab: SequenceTables, n: int, m: int):
    """U_n(s)^2 - U_{n-m}(s) U_{n+m}(s)  vs  q^{s(n-m)} U_m(s)^2."""
    _require_nm(n, m)
    lhs = tab.us(n) ** 2 - tab.us(n - m) * tab.us(n + m)
    rhs = tab.qs_pow(n - m) * tab.us(m) ** 2
    return lhs, rhs


def cassini_u_sides(tab: SequenceTables, n: int):
    """U_n(s)^2 - U_{n-1}(s) U_{n+1}(s) = q^{s(n-1)}."""
    if n < 1:
        raise ValueError("Cassini form needs n >= 1")
    lhs = tab.us(n) ** 2 - tab.us(n - 1) * tab.us(n + 1)
    rhs = tab.qs_pow(n - 1)
    return lhs, rhs


def docagne_u_sides(tab: SequenceTables, n: int, m: int):
    """U_{m+1}(s) U_n(s) - U_m(s) U_{n+1}(s) = q^{sm} U_{n-m}(s)."""
    _require_nm(n, m)
    lhs = tab.us(m + 1) * tab.us(n) - tab.us(m) * tab.us(n + 1)
    rhs = tab.qs_pow(m) * tab.us(n - m)
    return lhs, rhs


def sum_w_sides(tab: SequenceTables, n: int):
    """Partial sum of W_r(s) vs its closed form over q^s - V_s + 1."""
    _check_index(n)
    if tab.sum_denom == 0:
        raise DegenerateDenominator("q^s - V_s + 1 = 0")
    lhs = tab.wsum(n)
    rhs = (
        tab.qs * tab.ws(n) - tab.ws(n + 1) + tab.ws(1) + (1 - tab.vs) * tab.ws(0)
    ) / tab.sum_denom
    return lhs, rhs


def ogf_w_sides(tab: SequenceTables, trunc: int):
    """Coefficients of (sum W_n(s) x^n) (1 - V_s x + q^s x^2) vs the degree-1 numerator.

    Both sides are coefficient lists through degree trunc - 1.
    """
    if trunc < 1:
        raise ValueError("truncation order must be >= 1")
    coeffs = [tab.ws(r) for r in range(trunc + 1)]
    lhs = []
    for t in range(trunc):
        d = coeffs[t]
        if t >= 1:
            d -= tab.vs * coeffs[t - 1]
        if t >= 2:
            d += tab.qs * coeffs[t - 2]
        lhs.append(d)
    rhs = [tab.ws(0), tab.ws(1) - tab.vs * tab.ws(0)] + [mpq(0)] * (trunc - 2)
    return lhs, rhs[:trunc]


def decompose_sides(tab: SequenceTables, n: int):
    """W_n(s) vs W_0(s) U_{n+1}(s) + (1 - V_s W_0(s)) U_n(s)."""
    _check_index(n)
    lhs = tab.ws(n)
    rhs = tab.ws(0) * tab.us(n + 1) + (1 - tab.vs * tab.ws(0)) * tab.us(n)
    return lhs, rhs


# -- spec-level wrappers over params -------------------------------------------


def scalar_catalan_w(params: HoradamParams, n: int, m: int):
    return catalan_w_sides(tables_for(params), n, m)


def scalar_docagne_w(params: HoradamParams, n: int, m: int):
    return docagne_w_sides(tables_for(params), n, m)


def scalar_catalan_u(params: HoradamParams, n: int, m: int):
    return catalan_u_sides(tables_for(params), n, m)


def scalar_docagne_u(params: HoradamParams, n: int, m: int):
    return docagne_u_sides(tables_for(params), n, m)


def scalar_sum_w(params: HoradamParams, n: int):
    return sum_w_sides(tables_for(params), n)


def scalar_ogf_check(params: HoradamParams, trunc: int) -> bool:
    lhs, rhs = ogf_w_sides(tables_for(params), trunc)
    return lhs == rhs


def scalar_decompose_check(params: HoradamParams, n: int) -> bool:
    lhs, rhs = decompose_sides(tables_for(params), n)
    return lhs == rhs
