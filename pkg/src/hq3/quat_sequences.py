"""Quaternion-valued sequences and their identity suite.

The window quaternions

    QW_n(s) = W_n(s) + W_{n+1}(s) i + W_{n+2}(s) j + W_{n+3}(s) k
    QU_n(s) = U_n(s) + U_{n+1}(s) i + U_{n+2}(s) j + U_{n+3}(s) k

admit closed forms built from the root quaternions

    Th_a(s) = 1 + a^s i + a^{2s} j + a^{3s} k      (a, b the two roots)
    Th_b(s) = 1 + b^s i + b^{2s} j + b^{3s} k

Every check function below evaluates an identity twice: the left side through
rational recurrence values and the multiplication table, the right side
through Q(sqrt(D)) root arithmetic, and returns both sides so callers can
compare exactly.  A pass is meaningful precisely because the two computation
paths share nothing.
"""

from __future__ import annotations

from functools import cached_property

from gmpy2 import mpq

from .errors import DegenerateDenominator, UndefinedSequence
from .exact_arith import QuadExt, embed_roots
from .horadam_core import HoradamParams, SequenceTables, _check_index, _require_nm, tables_for
from .pgq_algebra import PgqParams, Quaternion, commutator


class Mat2:
    """2x2 matrix over any exact ring (rationals or quaternions)."""

    __slots__ = ("e00", "e01", "e10", "e11")

    def __init__(self, e00, e01, e10, e11):
        self.e00 = e00
        self.e01 = e01
        self.e10 = e10
        self.e11 = e11

    @property
    def entries(self):
        return ((self.e00, self.e01), (self.e10, self.e11))

    def __mul__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.e00 * other.e00 + self.e01 * other.e10,
            self.e00 * other.e01 + self.e01 * other.e11,
            self.e10 * other.e00 + self.e11 * other.e10,
            self.e10 * other.e01 + self.e11 * other.e11,
        )

    def __pow__(self, n: int):
        """Exponentiation by squaring; n >= 1."""
        if not isinstance(n, int) or n < 1:
            raise ValueError("matrix power requires an integer n >= 1")
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def det(self):
        """ad - bc; multiplicative when entries commute."""
        return self.e00 * self.e11 - self.e01 * self.e10

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return (
            self.e00 == other.e00
            and self.e01 == other.e01
            and self.e10 == other.e10
            and self.e11 == other.e11
        )

    def __repr__(self):
        return f"Mat2([[{self.e00!s}, {self.e01!s}], [{self.e10!s}, {self.e11!s}]])"


def _tab_of(x) -> SequenceTables:
    if isinstance(x, SequenceTables):
        return x
    if isinstance(x, HoradamParams):
        return tables_for(x)
    return x.tab  # QuatSeqContext


def h_matrix(x) -> Mat2:
    """The companion matrix [[V_s, -q^s], [1, 0]] of the order-s recurrence."""
    tab = _tab_of(x)
    return Mat2(tab.vs, -tab.qs, mpq(1), mpq(0))


def h_power(x, n: int) -> Mat2:
    """H(s)^n by exponentiation by squaring; n >= 1."""
    return h_matrix(x) ** n


def h_power_closed(x, n: int) -> Mat2:
    """[[U_{n+1}(s), -q^s U_n(s)], [U_n(s), -q^s U_{n-1}(s)]]."""
    if n < 1:
        raise ValueError("need n >= 1")
    tab = _tab_of(x)
    return Mat2(
        tab.us(n + 1),
        -tab.qs * tab.us(n),
        tab.us(n),
        -tab.qs * tab.us(n - 1),
    )


def h_power_sides(x, n: int):
    return h_power(x, n), h_power_closed(x, n)


class RootData:
    """Root-side data for one parameter point, shared across lambda choices."""

    def __init__(self, tab: SequenceTables):
        self.tab = tab
        self.alpha, self.beta, self.disc = embed_roots(tab.p, tab.q)
        self.one = QuadExt(1, 0, self.disc)
        self.sqrt_d = QuadExt(0, 1, self.disc)
        # seed coefficients: A = W1 - W0*beta, B = W1 - W0*alpha
        self.A = tab.w1 - tab.w0 * self.beta
        self.B = tab.w1 - tab.w0 * self.alpha
        self._pow_a = [self.one, self.alpha]

    def pow_a(self, k: int) -> QuadExt:
        t = self._pow_a
        alpha = self.alpha
        while len(t) <= k:
            t.append(t[-1] * alpha)
        return t[k]

    def pow_b(self, k: int) -> QuadExt:
        return self.pow_a(k).conjugate()

    @cached_property
    def alpha_s(self) -> QuadExt:
        return self.pow_a(self.tab.s)

    @cached_property
    def beta_s(self) -> QuadExt:
        return self.alpha_s.conjugate()

    @cached_property
    def denom_w(self) -> QuadExt:
        """A alpha^s - B beta^s; equals (alpha - beta) W_s."""
        return self.A * self.alpha_s - self.B * self.beta_s

    @cached_property
    def denom_u(self) -> QuadExt:
        """alpha^s - beta^s; equals (alpha - beta) U_s."""
        return self.alpha_s - self.beta_s

    @cached_property
    def inv_denom_w(self) -> QuadExt:
        if self.tab.w(self.tab.s) == 0:
            raise UndefinedSequence("W_s = 0")
        return self.denom_w.inverse()

    @cached_property
    def inv_denom_w2(self) -> QuadExt:
        inv = self.inv_denom_w
        return inv * inv

    @cached_property
    def inv_denom_u(self) -> QuadExt:
        if self.tab.u(self.tab.s) == 0:
            raise UndefinedSequence("U_s = 0")
        return self.denom_u.inverse()


class QuatSeqContext:
    """All state needed to evaluate the quaternion identities at one point.

    Immutable after construction; check functions are pure.  `root` and `tab`
    may be shared between contexts that differ only in lambda.
    """

    def __init__(self, params: HoradamParams, tab: SequenceTables | None = None,
                 root: RootData | None = None):
        self.params = params
        self.lam = params.lam
        self.tab = tab if tab is not None else tables_for(params)
        self.root = root if root is not None else RootData(self.tab)
        self.s = params.s
        self.qs = self.tab.qs
        lam = params.lam
        self.l12 = lam.l1 * lam.l2
        self.l13 = lam.l1 * lam.l3
        self.l23 = lam.l2 * lam.l3
        self._qw: list[Quaternion] = []
        self._qu: list[Quaternion] = []
        self._qw_prod: dict = {}
        self._wu_prod: dict = {}
        self._uw_prod: dict = {}
        self._xbr: dict = {}
        self._qwsum: list[Quaternion] = []
        self._t54: list = [None]  # 1-indexed right sides of the matrix identity

    @property
    def vs(self):
        return self.tab.vs

    # -- the sequences themselves -------------------------------------------

    def qw(self, n: int) -> Quaternion:
        _check_index(n)
        t = self._qw
        tab = self.tab
        while len(t) <= n:
            k = len(t)
            t.append(Quaternion(tab.ws(k), tab.ws(k + 1), tab.ws(k + 2), tab.ws(k + 3), self.lam))
        return t[n]

    def qu(self, n: int) -> Quaternion:
        _check_index(n)
        t = self._qu
        tab = self.tab
        while len(t) <= n:
            k = len(t)
            t.append(Quaternion(tab.us(k), tab.us(k + 1), tab.us(k + 2), tab.us(k + 3), self.lam))
        return t[n]

    def qw_prod(self, i: int, j: int) -> Quaternion:
        key = (i, j)
        got = self._qw_prod.get(key)
        if got is None:
            got = self._qw_prod[key] = self.qw(i) * self.qw(j)
        return got

    def wu_prod(self, i: int, j: int) -> Quaternion:
        key = (i, j)
        got = self._wu_prod.get(key)
        if got is None:
            got = self._wu_prod[key] = self.qw(i) * self.qu(j)
        return got

    def uw_prod(self, i: int, j: int) -> Quaternion:
        key = (i, j)
        got = self._uw_prod.get(key)
        if got is None:
            got = self._uw_prod[key] = self.qu(i) * self.qw(j)
        return got

    def qw_cumsum(self, n: int) -> Quaternion:
        t = self._qwsum
        if not t:
            t.append(self.qw(0))
        while len(t) <= n:
            t.append(t[-1] + self.qw(len(t)))
        return t[n]

    # -- root quaternions and their products -----------------------------------

    @cached_property
    def theta_alpha(self) -> Quaternion:
        r = self.root
        s = self.s
        return Quaternion(r.one, r.pow_a(s), r.pow_a(2 * s), r.pow_a(3 * s), self.lam)

    @cached_property
    def theta_beta(self) -> Quaternion:
        return self.theta_alpha.map_coeffs(lambda c: c.conjugate())

    @cached_property
    def theta_ab(self) -> Quaternion:
        return self.theta_alpha * self.theta_beta

    @cached_property
    def theta_ba(self) -> Quaternion:
        return self.theta_beta * self.theta_alpha

    @cached_property
    def comm(self) -> Quaternion:
        """[Th_b, Th_a] = Th_b Th_a - Th_a Th_b, computed directly."""
        return self.theta_ba - self.theta_ab

    @cached_property
    def twist(self) -> Quaternion:
        """l3 q^s i - l2 V_s j + l1 k, the recurring vector factor."""
        lam = self.lam
        return Quaternion(0, lam.l3 * self.qs, -lam.l2 * self.vs, lam.l1, lam)

    def da(self, k: int) -> QuadExt:
        """alpha^{sk} - beta^{sk}."""
        r = self.root
        return r.pow_a(self.s * k) - r.pow_b(self.s * k)

    def x_bracket(self, k: int) -> Quaternion:
        """(alpha^{sk} - beta^{sk}) Th_a Th_b + alpha^{sk} [Th_b, Th_a]."""
        got = self._xbr.get(k)
        if got is None:
            got = self.theta_ab.scale(self.da(k)) + self.comm.scale(self.root.pow_a(self.s * k))
            self._xbr[k] = got
        return got

    # -- cached prefactors ------------------------------------------------------

    @cached_property
    def cat_pref(self) -> QuadExt:
        """A B / (A alpha^s - B beta^s)^2."""
        r = self.root
        return (r.A * r.B) * r.inv_denom_w2

    @cached_property
    def doc_pref(self) -> QuadExt:
        """A B (alpha^s - beta^s) / (A alpha^s - B beta^s)^2."""
        return self.cat_pref * self.root.denom_u

    @cached_property
    def mixed_pref(self) -> QuadExt:
        """(alpha - beta) W_0 / (A alpha^s - B beta^s)."""
        r = self.root
        return (r.sqrt_d * self.tab.w0) * r.inv_denom_w

    @cached_property
    def binet_term_a(self) -> Quaternion:
        """A Th_a / (A alpha^s - B beta^s)."""
        r = self.root
        return self.theta_alpha.scale(r.A * r.inv_denom_w)

    @cached_property
    def binet_term_b(self) -> Quaternion:
        r = self.root
        return self.theta_beta.scale(r.B * r.inv_denom_w)

    @cached_property
    def binet_u_term_a(self) -> Quaternion:
        return self.theta_alpha.scale(self.root.inv_denom_u)

    @cached_property
    def binet_u_term_b(self) -> Quaternion:
        return self.theta_beta.scale(self.root.inv_denom_u)

    # norm pieces: Phi_a = 1 + l1l2 a^{2s} + l1l3 a^{4s} + l2l3 a^{6s}, etc.

    @cached_property
    def phi_alpha(self) -> QuadExt:
        r = self.root
        s = self.s
        return (
            r.one
            + self.l12 * r.pow_a(2 * s)
            + self.l13 * r.pow_a(4 * s)
            + self.l23 * r.pow_a(6 * s)
        )

    @cached_property
    def phi_beta(self) -> QuadExt:
        return self.phi_alpha.conjugate()

    @cached_property
    def phi_ab(self):
        """1 + l1l2 q^s + l1l3 q^{2s} + l2l3 q^{3s}, rational."""
        tab = self.tab
        return 1 + self.l12 * tab.qs_pow(1) + self.l13 * tab.qs_pow(2) + self.l23 * tab.qs_pow(3)

    @cached_property
    def _norm_a(self) -> QuadExt:
        r = self.root
        return (r.A * r.A * self.phi_alpha) * r.inv_denom_w2

    @cached_property
    def _norm_b(self) -> QuadExt:
        r = self.root
        return (r.B * r.B * self.phi_beta) * r.inv_denom_w2

    @cached_property
    def _norm_ab(self) -> QuadExt:
        r = self.root
        return (r.A * r.B * self.phi_ab) * r.inv_denom_w2

    # summation pieces

    @cached_property
    def inv_sum_denom(self):
        if self.tab.sum_denom == 0:
            raise DegenerateDenominator("q^s - V_s + 1 = 0")
        return 1 / self.tab.sum_denom

    @cached_property
    def sigma_pi(self) -> Quaternion:
        """sigma(s) (1 + i + j + k) with sigma(s) = W_1(s) + (1 - V_s) W_0(s)."""
        tab = self.tab
        sigma = tab.ws(1) + (1 - tab.vs) * tab.ws(0)
        return Quaternion(sigma, sigma, sigma, sigma, self.lam)

    @cached_property
    def phi_offset(self) -> Quaternion:
        """W_0(s) i + (W_0(s)+W_1(s)) j + ((1-q^s) W_0(s) + (1+V_s) W_1(s)) k."""
        tab = self.tab
        ws0, ws1 = tab.ws(0), tab.ws(1)
        return Quaternion(
            0, ws0, ws0 + ws1, (1 - tab.qs) * ws0 + (1 + tab.vs) * ws1, self.lam
        )

    @cached_property
    def h_quat(self) -> Mat2:
        """H(s) with entries promoted to scalar quaternions."""
        lam = self.lam
        return Mat2(
            Quaternion.scalar(self.vs, lam),
            Quaternion.scalar(-self.qs, lam),
            Quaternion.scalar(1, lam),
            Quaternion.scalar(0, lam),
        )


# -- sequence values ------------------------------------------------------------


def qw(ctx: QuatSeqContext, n: int) -> Quaternion:
    """QW_n(s), coefficients W_n(s) .. W_{n+3}(s)."""
    return ctx.qw(n)


def qu(ctx: QuatSeqContext, n: int) -> Quaternion:
    """QU_n(s), coefficients U_n(s) .. U_{n+3}(s)."""
    return ctx.qu(n)


def qw_binet(ctx: QuatSeqContext, n: int) -> Quaternion:
    """[A a^{sn} Th_a - B b^{sn} Th_b] / (A a^s - B b^s), in Q(sqrt(D))."""
    _check_index(n)
    r = ctx.root
    k = ctx.s * n
    return ctx.binet_term_a.scale(r.pow_a(k)) - ctx.binet_term_b.scale(r.pow_b(k))


def qu_binet(ctx: QuatSeqContext, n: int) -> Quaternion:
    """[a^{sn} Th_a - b^{sn} Th_b] / (a^s - b^s)."""
    _check_index(n)
    r = ctx.root
    k = ctx.s * n
    return ctx.binet_u_term_a.scale(r.pow_a(k)) - ctx.binet_u_term_b.scale(r.pow_b(k))


# -- identity sides ---------------------------------------------------------------


def qw_recurrence_sides(ctx: QuatSeqContext, n: int):
    """QW_{n+2}(s) vs V_s QW_{n+1}(s) - q^s QW_n(s)."""
    _check_index(n)
    lhs = ctx.qw(n + 2)
    rhs = ctx.qw(n + 1).scale(ctx.vs) - ctx.qw(n).scale(ctx.qs)
    return lhs, rhs


def qw_recurrence_check(ctx: QuatSeqContext, n: int) -> bool:
    lhs, rhs = qw_recurrence_sides(ctx, n)
    return lhs == rhs


def qw_norm_sides(ctx: QuatSeqContext, n: int):
    """norm(QW_n(s)) vs [A^2 a^{2sn} Phi_a - 2AB q^{sn} Phi_ab + B^2 b^{2sn} Phi_b] / (A a^s - B b^s)^2."""
    _check_index(n)
    direct = ctx.qw(n).norm()
    r = ctx.root
    k = 2 * ctx.s * n
    closed = (
        ctx._norm_a * r.pow_a(k)
        + ctx._norm_b * r.pow_b(k)
        - (2 * ctx.tab.qs_pow(n)) * ctx._norm_ab
    )
    return direct, closed


qw_norm_check = qw_norm_sides


def qw_binet_sides(ctx: QuatSeqContext, n: int):
    return ctx.qw(n), qw_binet(ctx, n)


def qu_binet_sides(ctx: QuatSeqContext, n: int):
    return ctx.qu(n), qu_binet(ctx, n)


def theta_products(ctx: QuatSeqContext):
    """(Th_a Th_b, Th_b Th_a) by direct multiplication."""
    return ctx.theta_ab, ctx.theta_ba


def theta_products_closed(ctx: QuatSeqContext):
    """The same two products from their closed forms.

    Shared part: [1 - l1l2 q^s - l1l3 q^{2s} - l2l3 q^{3s}]
                 + V_s-type power sums on i, j, k;
    the products differ by -/+ q^s (a^s - b^s) (l3 q^s i - l2 V_s j + l1 k).
    """
    r = ctx.root
    s = ctx.s
    tab = ctx.tab
    scalar0 = 1 - ctx.l12 * tab.qs_pow(1) - ctx.l13 * tab.qs_pow(2) - ctx.l23 * tab.qs_pow(3)
    sym = Quaternion(
        QuadExt.from_rational(scalar0, r.disc),
        r.pow_a(s) + r.pow_b(s),
        r.pow_a(2 * s) + r.pow_b(2 * s),
        r.pow_a(3 * s) + r.pow_b(3 * s),
        ctx.lam,
    )
    skew = ctx.twist.scale(ctx.qs * r.denom_u)
    return sym - skew, sym + skew


def theta_products_sides(ctx: QuatSeqContext):
    direct = theta_products(ctx)
    closed = theta_products_closed(ctx)
    return [direct[0], direct[1]], [closed[0], closed[1]]


def theta_commutator(ctx: QuatSeqContext) -> Quaternion:
    """[Th_b, Th_a] = 2 q^s (a^s - b^s) (l3 q^s i - l2 V_s j + l1 k)."""
    return ctx.twist.scale(2 * ctx.qs * ctx.root.denom_u)


def theta_commutator_sides(ctx: QuatSeqContext):
    return ctx.comm, theta_commutator(ctx)


def catalan_sides(ctx: QuatSeqContext, n: int, m: int):
    """QW_n(s)^2 - QW_{n-m}(s) QW_{n+m}(s) vs its Catalan closed form."""
    _require_nm(n, m)
    lhs = ctx.qw_prod(n, n) - ctx.qw_prod(n - m, n + m)
    factor = ctx.cat_pref * ctx.tab.qs_pow(n - m) * ctx.da(m)
    rhs = ctx.x_bracket(m).scale(factor)
    return lhs, rhs


catalan_check = catalan_sides


def cassini_sides(ctx: QuatSeqContext, n: int):
    """The m = 1 Catalan case, evaluated from the specialized statement."""
    if n < 1:
        raise ValueError("Cassini form needs n >= 1")
    lhs = ctx.qw_prod(n, n) - ctx.qw_prod(n - 1, n + 1)
    factor = ctx.cat_pref * ctx.tab.qs_pow(n - 1) * ctx.root.denom_u
    rhs = ctx.x_bracket(1).scale(factor)
    return lhs, rhs


def docagne_sides(ctx: QuatSeqContext, n: int, m: int):
    """QW_{m+1}(s) QW_n(s) - QW_m(s) QW_{n+1}(s) vs its closed form."""
    _require_nm(n, m)
    lhs = ctx.qw_prod(m + 1, n) - ctx.qw_prod(m, n + 1)
    rhs = ctx.x_bracket(n - m).scale(ctx.doc_pref * ctx.tab.qs_pow(m))
    return lhs, rhs


docagne_check = docagne_sides


def docagne_diag_sides(ctx: QuatSeqContext, n: int):
    """The m = n case: the anti-commutation defect of consecutive terms."""
    _check_index(n)
    lhs = ctx.qw_prod(n + 1, n) - ctx.qw_prod(n, n + 1)
    rhs = ctx.comm.scale(ctx.doc_pref * ctx.tab.qs_pow(n))
    return lhs, rhs


def qw_sum_sides(ctx: QuatSeqContext, n: int):
    """Partial sum of QW_r(s) vs the closed form over q^s - V_s + 1."""
    _check_index(n)
    inv = ctx.inv_sum_denom
    lhs = ctx.qw_cumsum(n)
    rhs = (ctx.qw(n).scale(ctx.qs) - ctx.qw(n + 1) + ctx.sigma_pi).scale(inv) - ctx.phi_offset
    return lhs, rhs


qw_sum_check = qw_sum_sides


def mixed_product_sides(ctx: QuatSeqContext, n: int, m: int):
    """QW_m(s) QU_n(s) - QU_m(s) QW_n(s) vs its closed form."""
    _require_nm(n, m)
    lhs = ctx.wu_prod(m, n) - ctx.uw_prod(m, n)
    r = ctx.root
    inner = ctx.theta_ab.scale(ctx.tab.us(n - m)) + ctx.twist.scale(
        2 * (r.pow_a(ctx.s * (n - m + 1)) * r.pow_b(ctx.s))
    )
    rhs = inner.scale(ctx.mixed_pref * ctx.tab.qs_pow(m))
    return lhs, rhs


mixed_product_check = mixed_product_sides


def mixed_product_diag_sides(ctx: QuatSeqContext, n: int):
    """The m = n case: 2 (a-b) W_0 q^{s(n+1)} / (A a^s - B b^s) times the twist."""
    _check_index(n)
    lhs = ctx.wu_prod(n, n) - ctx.uw_prod(n, n)
    rhs = ctx.twist.scale(ctx.mixed_pref * (2 * ctx.tab.qs_pow(n + 1)))
    return lhs, rhs


def qw_ogf_sides(ctx: QuatSeqContext, trunc: int):
    """Coefficients of (sum QW_n(s) x^n)(1 - V_s x + q^s x^2) vs the closed numerator.

    The numerator is [A Th_a - B Th_b - (A b^s Th_a - B a^s Th_b) x] over
    (A a^s - B b^s): degree 1, so the lists are [c0, c1, 0, ..., 0] through
    degree trunc - 1.
    """
    if trunc < 1:
        raise ValueError("truncation order must be >= 1")
    coeffs = [ctx.qw(r) for r in range(trunc + 1)]
    lhs = []
    for t in range(trunc):
        d = coeffs[t]
        if t >= 1:
            d = d - coeffs[t - 1].scale(ctx.vs)
        if t >= 2:
            d = d + coeffs[t - 2].scale(ctx.qs)
        lhs.append(d)
    r = ctx.root
    num0 = ctx.binet_term_a - ctx.binet_term_b
    num1 = ctx.binet_term_b.scale(r.pow_a(ctx.s)) - ctx.binet_term_a.scale(r.pow_b(ctx.s))
    zero = Quaternion.zero(ctx.lam)
    rhs = [num0, num1] + [zero] * (trunc - 2)
    return lhs, rhs[:trunc]


def qw_ogf_check(ctx: QuatSeqContext, trunc: int) -> bool:
    lhs, rhs = qw_ogf_sides(ctx, trunc)
    return lhs == rhs


def qu_ogf_sides(ctx: QuatSeqContext, trunc: int):
    """Same as `qw_ogf_sides` for QU_n(s) with denominator a^s - b^s."""
    if trunc < 1:
        raise ValueError("truncation order must be >= 1")
    coeffs = [ctx.qu(r) for r in range(trunc + 1)]
    lhs = []
    for t in range(trunc):
        d = coeffs[t]
        if t >= 1:
            d = d - coeffs[t - 1].scale(ctx.vs)
        if t >= 2:
            d = d + coeffs[t - 2].scale(ctx.qs)
        lhs.append(d)
    r = ctx.root
    num0 = ctx.binet_u_term_a - ctx.binet_u_term_b
    num1 = ctx.binet_u_term_b.scale(r.pow_a(ctx.s)) - ctx.binet_u_term_a.scale(r.pow_b(ctx.s))
    zero = Quaternion.zero(ctx.lam)
    rhs = [num0, num1] + [zero] * (trunc - 2)
    return lhs, rhs[:trunc]


def qu_ogf_check(ctx: QuatSeqContext, trunc: int) -> bool:
    lhs, rhs = qu_ogf_sides(ctx, trunc)
    return lhs == rhs


def qw_egf_sides(ctx: QuatSeqContext, n: int):
    """Coefficient of x^n/n! in the exponential generating function.

    Extracting that coefficient from [A Th_a e^{a^s x} - B Th_b e^{b^s x}]
    over (A a^s - B b^s) gives back the closed form at index n, so the check
    is exact with no transcendental evaluation.
    """
    return ctx.qw(n), qw_binet(ctx, n)


def qw_egf_check(ctx: QuatSeqContext, n: int) -> bool:
    lhs, rhs = qw_egf_sides(ctx, n)
    return lhs == rhs


def qw_matrix_sides(ctx: QuatSeqContext, n: int):
    """[[QW_{n+1}, -q^s QW_n], [QW_n, -q^s QW_{n-1}]] vs the seed matrix times H(s)^{n-1}."""
    if n < 1:
        raise ValueError("need n >= 1")
    lhs = Mat2(
        ctx.qw(n + 1),
        ctx.qw(n).scale(-ctx.qs),
        ctx.qw(n),
        ctx.qw(n - 1).scale(-ctx.qs),
    )
    t = ctx._t54
    if len(t) == 1:
        t.append(
            Mat2(
                ctx.qw(2),
                ctx.qw(1).scale(-ctx.qs),
                ctx.qw(1),
                ctx.qw(0).scale(-ctx.qs),
            )
        )
    while len(t) <= n:
        t.append(t[-1] * ctx.h_quat)
    return lhs, t[n]


def qw_matrix_check(ctx: QuatSeqContext, n: int) -> bool:
    lhs, rhs = qw_matrix_sides(ctx, n)
    return lhs == rhs


def index_shift_sides(ctx: QuatSeqContext, n: int, m: int):
    """QW_{n+m+1}(s) vs QW_2(s) U_{n+m}(s) - q^s QW_1(s) U_{n+m-1}(s)."""
    _check_index(n)
    if m < 1:
        raise ValueError("need m >= 1")
    lhs = ctx.qw(n + m + 1)
    rhs = ctx.qw(2).scale(ctx.tab.us(n + m)) - ctx.qw(1).scale(ctx.qs * ctx.tab.us(n + m - 1))
    return lhs, rhs


def double_index_sides(ctx: QuatSeqContext, n: int):
    """QW_{2n}(s) vs QW_1(s) U_{2n}(s) - q^s QW_0(s) U_{2n-1}(s)."""
    if n < 1:
        raise ValueError("need n >= 1")
    lhs = ctx.qw(2 * n)
    rhs = ctx.qw(1).scale(ctx.tab.us(2 * n)) - ctx.qw(0).scale(ctx.qs * ctx.tab.us(2 * n - 1))
    return lhs, rhs


def index_reduction_checks(ctx: QuatSeqContext, n: int, m: int) -> bool:
    """Both index-reduction identities (the second applies when n >= 1)."""
    lhs, rhs = index_shift_sides(ctx, n, m)
    if lhs != rhs:
        return False
    if n >= 1:
        lhs, rhs = double_index_sides(ctx, n)
        if lhs != rhs:
            return False
    return True
