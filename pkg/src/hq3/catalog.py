"""The identity catalog: every verifiable identity, with metadata and a runner.

Each entry's runner returns (lhs, rhs).  Values are rationals, QuadExt
elements, quaternions, 2x2 matrices, or lists of those; `values_equal`
compares them exactly and `serialize_value` renders them for reports.
`bump_value` adds 1 to one designated scalar slot of a value — the negative
control used by --perturb to prove the harness can fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from gmpy2 import mpq

from . import horadam_core as hc
from . import quat_sequences as qseq
from .errors import UnknownIdentity
from .exact_arith import QuadExt
from .pgq_algebra import Quaternion
from .quat_sequences import Mat2


def values_equal(lhs, rhs) -> bool:
    if isinstance(lhs, (list, tuple)):
        return len(lhs) == len(rhs) and all(values_equal(a, b) for a, b in zip(lhs, rhs))
    return lhs == rhs


def bump_value(value):
    """Return the value with 1 added to its leading scalar slot."""
    if isinstance(value, (list, tuple)):
        return [bump_value(value[0])] + list(value[1:])
    if isinstance(value, Quaternion):
        return Quaternion(value.x0 + 1, value.x1, value.x2, value.x3, value.lam)
    if isinstance(value, Mat2):
        return Mat2(bump_value(value.e00), value.e01, value.e10, value.e11)
    return value + 1


def serialize_value(value):
    if isinstance(value, (list, tuple)):
        return [serialize_value(v) for v in value]
    if isinstance(value, (Quaternion, QuadExt)):
        return value.to_json()
    if isinstance(value, Mat2):
        return {"rows": [[serialize_value(e) for e in row] for row in value.entries]}
    return str(value)


@dataclass(frozen=True)
class IdentityDef:
    """One verifiable identity.

    group "scalar" runners take a SequenceTables, group "quaternion" runners a
    QuatSeqContext.  arity: "point" (no indices), "n", "nm" (0 <= m <= n),
    "nm-free" (independent ranges), "series" (single truncation-order check).
    """

    ident: str
    group: str
    arity: str
    run: Callable
    title: str
    statement: str
    hypotheses: str
    where: str
    needs_w: bool = False
    needs_u: bool = False
    needs_sum: bool = False
    n_min: int = 0
    m_min: int = 0


_BASE_HYP = "q != 0, p^2 - 4q != 0"

_DEFS = [
    # -- scalar identities ------------------------------------------------------
    IdentityDef(
        "cassini-w", "scalar", "n", hc.cassini_w_sides,
        title="Cassini identity for W_n(s)",
        statement="W_n(s)^2 - W_{n-1}(s) W_{n+1}(s) = AB q^{s(n-1)} (U_s / W_s)^2",
        hypotheses=f"{_BASE_HYP}, W_s != 0, n >= 1",
        where="first displayed identity of the introduction",
        needs_w=True, n_min=1,
    ),
    IdentityDef(
        "catalan-w", "scalar", "nm", hc.catalan_w_sides,
        title="Catalan identity for W_n(s)",
        statement="W_n(s)^2 - W_{n-m}(s) W_{n+m}(s) = AB q^{s(n-m)} (U_{sm} / W_s)^2",
        hypotheses=f"{_BASE_HYP}, W_s != 0, n >= m >= 0",
        where="second displayed identity of the introduction",
        needs_w=True,
    ),
    IdentityDef(
        "docagne-w", "scalar", "nm", hc.docagne_w_sides,
        title="d'Ocagne identity for W_n(s)",
        statement="W_{m+1}(s) W_n(s) - W_m(s) W_{n+1}(s) = AB q^{sm} U_s U_{s(n-m)} / W_s^2",
        hypotheses=f"{_BASE_HYP}, W_s != 0, n >= m >= 0",
        where="third displayed identity of the introduction",
        needs_w=True,
    ),
    IdentityDef(
        "cassini-u", "scalar", "n", hc.cassini_u_sides,
        title="Cassini identity for U_n(s)",
        statement="U_n(s)^2 - U_{n-1}(s) U_{n+1}(s) = q^{s(n-1)}",
        hypotheses=f"{_BASE_HYP}, U_s != 0, n >= 1",
        where="fourth displayed identity of the introduction",
        needs_u=True, n_min=1,
    ),
    IdentityDef(
        "catalan-u", "scalar", "nm", hc.catalan_u_sides,
        title="Catalan identity for U_n(s)",
        statement="U_n(s)^2 - U_{n-m}(s) U_{n+m}(s) = q^{s(n-m)} U_m(s)^2",
        hypotheses=f"{_BASE_HYP}, U_s != 0, n >= m >= 0",
        where="fifth displayed identity of the introduction",
        needs_u=True,
    ),
    IdentityDef(
        "docagne-u", "scalar", "nm", hc.docagne_u_sides,
        title="d'Ocagne identity for U_n(s)",
        statement="U_{m+1}(s) U_n(s) - U_m(s) U_{n+1}(s) = q^{sm} U_{n-m}(s)",
        hypotheses=f"{_BASE_HYP}, U_s != 0, n >= m >= 0",
        where="sixth displayed identity of the introduction",
        needs_u=True,
    ),
    IdentityDef(
        "id1", "scalar", "n", hc.sum_w_sides,
        title="Partial-sum formula for W_n(s)",
        statement="sum_{r<=n} W_r(s) = [q^s W_n(s) - W_{n+1}(s) + W_1(s) + (1 - V_s) W_0(s)] / (q^s - V_s + 1)",
        hypotheses=f"{_BASE_HYP}, W_s != 0, q^s - V_s + 1 != 0",
        where="identity (id1)",
        needs_w=True, needs_sum=True,
    ),
    IdentityDef(
        "id2", "scalar", "series", hc.ogf_w_sides,
        title="Ordinary generating function of W_n(s)",
        statement="sum W_n(s) x^n = [W_0(s) + (W_1(s) - V_s W_0(s)) x] / [1 - V_s x + q^s x^2]",
        hypotheses=f"{_BASE_HYP}, W_s != 0 (coefficient comparison through the truncation order)",
        where="identity (id2)",
        needs_w=True,
    ),
    IdentityDef(
        "id3", "scalar", "n", hc.decompose_sides,
        title="Decomposition of W_n(s) over U_n(s)",
        statement="W_n(s) = W_0(s) U_{n+1}(s) + [1 - V_s W_0(s)] U_n(s)",
        hypotheses=f"{_BASE_HYP}, W_s != 0, U_s != 0",
        where="identity (id3)",
        needs_w=True, needs_u=True,
    ),
    IdentityDef(
        "thm5.3", "scalar", "n", qseq.h_power_sides,
        title="Powers of the companion matrix H(s)",
        statement="H(s)^n = [[U_{n+1}(s), -q^s U_n(s)], [U_n(s), -q^s U_{n-1}(s)]], H(s) = [[V_s, -q^s], [1, 0]]",
        hypotheses=f"{_BASE_HYP}, U_s != 0, n >= 1",
        where="Theorem 5.3",
        needs_u=True, n_min=1,
    ),
    # -- quaternion identities -----------------------------------------------------
    IdentityDef(
        "thm2.1", "quaternion", "n", qseq.qw_recurrence_sides,
        title="Order-s recurrence for QW_n(s)",
        statement="QW_{n+2}(s) = V_s QW_{n+1}(s) - q^s QW_n(s)",
        hypotheses=f"{_BASE_HYP}, W_s != 0",
        where="Theorem 2.1",
        needs_w=True,
    ),
    IdentityDef(
        "thm2.2", "quaternion", "n", qseq.qw_norm_sides,
        title="Norm of QW_n(s)",
        statement=(
            "QW_n(s) QW_n(s)^dag = [A^2 a^{2sn} Phi_a - 2AB q^{sn} Phi_ab + B^2 b^{2sn} Phi_b]"
            " / (A a^s - B b^s)^2, Phi_x = 1 + l1l2 x^{2s} + l1l3 x^{4s} + l2l3 x^{6s}"
        ),
        hypotheses=f"{_BASE_HYP}, W_s != 0",
        where="Theorem 2.2",
        needs_w=True,
    ),
    IdentityDef(
        "thm2.3", "quaternion", "n", qseq.qw_binet_sides,
        title="Closed form of QW_n(s)",
        statement="QW_n(s) = [A a^{sn} Th_a(s) - B b^{sn} Th_b(s)] / (A a^s - B b^s)",
        hypotheses=f"{_BASE_HYP}, W_s != 0",
        where="Theorem 2.3",
        needs_w=True,
    ),
    IdentityDef(
        "cor2.3", "quaternion", "n", qseq.qu_binet_sides,
        title="Closed form of QU_n(s)",
        statement="QU_n(s) = [a^{sn} Th_a(s) - b^{sn} Th_b(s)] / (a^s - b^s)",
        hypotheses=f"{_BASE_HYP}, U_s != 0",
        where="corollary of Theorem 2.3",
        needs_u=True,
    ),
    IdentityDef(
        "theta-prod", "quaternion", "point", qseq.theta_products_sides,
        title="Products of the root quaternions",
        statement=(
            "Th_a Th_b and Th_b Th_a share scalar part 1 - l1l2 q^s - l1l3 q^{2s} - l2l3 q^{3s}"
            " and power-sum i/j/k parts, differing by -/+ q^s (a^s - b^s) (l3 q^s i - l2 V_s j + l1 k)"
        ),
        hypotheses=_BASE_HYP,
        where="displayed products opening the Catalan section",
    ),
    IdentityDef(
        "eq-c", "quaternion", "point", qseq.theta_commutator_sides,
        title="Commutator of the root quaternions",
        statement="[Th_b, Th_a] = 2 q^s (a^s - b^s) (l3 q^s i - l2 V_s j + l1 k)",
        hypotheses=_BASE_HYP,
        where="commutator formula (c)",
    ),
    IdentityDef(
        "thm3.1", "quaternion", "nm", qseq.catalan_sides,
        title="Catalan identity for QW_n(s)",
        statement=(
            "QW_n(s)^2 - QW_{n-m}(s) QW_{n+m}(s) = [AB q^{s(n-m)} (a^{sm} - b^{sm}) / (A a^s - B b^s)^2]"
            " {(a^{sm} - b^{sm}) Th_a Th_b + a^{sm} [Th_b, Th_a]}"
        ),
        hypotheses=f"{_BASE_HYP}, W_s != 0, n >= m >= 0",
        where="Theorem 3.1",
        needs_w=True,
    ),
    IdentityDef(
        "cor3.1", "quaternion", "n", qseq.cassini_sides,
        title="Cassini identity for QW_n(s)",
        statement=(
            "QW_n(s)^2 - QW_{n-1}(s) QW_{n+1}(s) = [AB q^{s(n-1)} (a^s - b^s) / (A a^s - B b^s)^2]"
            " {(a^s - b^s) Th_a Th_b + a^s [Th_b, Th_a]}"
        ),
        hypotheses=f"{_BASE_HYP}, W_s != 0, n >= 1",
        where="corollary of Theorem 3.1",
        needs_w=True, n_min=1,
    ),
    IdentityDef(
        "thm3.2", "quaternion", "nm", qseq.docagne_sides,
        title="d'Ocagne identity for QW_n(s)",
        statement=(
            "QW_{m+1}(s) QW_n(s) - QW_m(s) QW_{n+1}(s) = [AB q^{sm} (a^s - b^s) / (A a^s - B b^s)^2]"
            " {(a^{s(n-m)} - b^{s(n-m)}) Th_a Th_b + a^{s(n-m)} [Th_b, Th_a]}"
        ),
        hypotheses=f"{_BASE_HYP}, W_s != 0, n >= m >= 0",
        where="Theorem 3.2",
        needs_w=True,
    ),
    IdentityDef(
        "cor3.2", "quaternion", "n", qseq.docagne_diag_sides,
        title="Anti-commutation defect of consecutive QW terms",
        statement=(
            "QW_{n+1}(s) QW_n(s) - QW_n(s) QW_{n+1}(s) = [AB q^{sn} (a^s - b^s) / (A a^s - B b^s)^2]"
            " [Th_b, Th_a]"
        ),
        hypotheses=f"{_BASE_HYP}, W_s != 0",
        where="corollary of Theorem 3.2",
        needs_w=True,
    ),
    IdentityDef(
        "thm4.1", "quaternion", "n", qseq.qw_sum_sides,
        title="Partial-sum formula for QW_n(s)",
        statement=(
            "sum_{r<=n} QW_r(s) = [q^s QW_n(s) - QW_{n+1}(s) + sigma(s) (1+i+j+k)] / (q^s - V_s + 1) - Phi,"
            " sigma(s) = W_1(s) + (1 - V_s) W_0(s),"
            " Phi = W_0(s) i + (W_0(s)+W_1(s)) j + ((1-q^s) W_0(s) + (1+V_s) W_1(s)) k"
        ),
        hypotheses=f"{_BASE_HYP}, W_s != 0, q^s - V_s + 1 != 0",
        where="Theorem 4.1",
        needs_w=True, needs_sum=True,
    ),
    IdentityDef(
        "thm4.2", "quaternion", "nm", qseq.mixed_product_sides,
        title="Mixed product of QW and QU",
        statement=(
            "QW_m(s) QU_n(s) - QU_m(s) QW_n(s) = [(a - b) W_0 q^{sm} / (A a^s - B b^s)]"
            " {U_{n-m}(s) Th_a Th_b + 2 a^{s(n-m+1)} b^s (l3 q^s i - l2 V_s j + l1 k)}"
        ),
        hypotheses=f"{_BASE_HYP}, W_s != 0, U_s != 0, n >= m >= 0",
        where="Theorem 4.2",
        needs_w=True, needs_u=True,
    ),
    IdentityDef(
        "cor4.2", "quaternion", "n", qseq.mixed_product_diag_sides,
        title="Commutation defect of QW against QU",
        statement=(
            "QW_n(s) QU_n(s) - QU_n(s) QW_n(s) = [2 (a - b) W_0 q^{s(n+1)} / (A a^s - B b^s)]"
            " (l3 q^s i - l2 V_s j + l1 k)"
        ),
        hypotheses=f"{_BASE_HYP}, W_s != 0, U_s != 0",
        where="corollary of Theorem 4.2",
        needs_w=True, needs_u=True,
    ),
    IdentityDef(
        "thm5.1", "quaternion", "series", qseq.qw_ogf_sides,
        title="Ordinary generating function of QW_n(s)",
        statement=(
            "sum QW_n(s) x^n = {A Th_a - B Th_b - [A b^s Th_a - B a^s Th_b] x}"
            " / {(A a^s - B b^s) [1 - V_s x + q^s x^2]}"
        ),
        hypotheses=f"{_BASE_HYP}, W_s != 0 (coefficient comparison through the truncation order)",
        where="Theorem 5.1",
        needs_w=True,
    ),
    IdentityDef(
        "cor5.1", "quaternion", "series", qseq.qu_ogf_sides,
        title="Ordinary generating function of QU_n(s)",
        statement=(
            "sum QU_n(s) x^n = {Th_a - Th_b - [b^s Th_a - a^s Th_b] x}"
            " / {(a^s - b^s) [1 - V_s x + q^s x^2]}"
        ),
        hypotheses=f"{_BASE_HYP}, U_s != 0 (coefficient comparison through the truncation order)",
        where="corollary of Theorem 5.1",
        needs_u=True,
    ),
    IdentityDef(
        "thm5.2", "quaternion", "n", qseq.qw_egf_sides,
        title="Exponential generating function of QW_n(s)",
        statement=(
            "sum QW_n(s) x^n / n! = [A Th_a e^{a^s x} - B Th_b e^{b^s x}] / (A a^s - B b^s),"
            " verified coefficientwise at each n"
        ),
        hypotheses=f"{_BASE_HYP}, W_s != 0",
        where="Theorem 5.2",
        needs_w=True,
    ),
    IdentityDef(
        "thm5.4", "quaternion", "n", qseq.qw_matrix_sides,
        title="Matrix identity for QW windows",
        statement=(
            "[[QW_{n+1}, -q^s QW_n], [QW_n, -q^s QW_{n-1}]]"
            " = [[QW_2, -q^s QW_1], [QW_1, -q^s QW_0]] H(s)^{n-1}"
        ),
        hypotheses=f"{_BASE_HYP}, W_s != 0, n >= 1",
        where="Theorem 5.4",
        needs_w=True, n_min=1,
    ),
    IdentityDef(
        "cor5.4a", "quaternion", "nm-free", qseq.index_shift_sides,
        title="Index-shift reduction for QW",
        statement="QW_{n+m+1}(s) = QW_2(s) U_{n+m}(s) - q^s QW_1(s) U_{n+m-1}(s)",
        hypotheses=f"{_BASE_HYP}, W_s != 0, U_s != 0, n >= 0, m >= 1",
        where="first corollary of Theorem 5.4",
        needs_w=True, needs_u=True, m_min=1,
    ),
    IdentityDef(
        "cor5.4b", "quaternion", "n", qseq.double_index_sides,
        title="Even-index reduction for QW",
        statement="QW_{2n}(s) = QW_1(s) U_{2n}(s) - q^s QW_0(s) U_{2n-1}(s)",
        hypotheses=f"{_BASE_HYP}, W_s != 0, U_s != 0, n >= 1",
        where="second corollary of Theorem 5.4",
        needs_w=True, needs_u=True, n_min=1,
    ),
]

CATALOG: dict[str, IdentityDef] = {d.ident: d for d in _DEFS}

SCALAR_IDS = [d.ident for d in _DEFS if d.group == "scalar"]
QUATERNION_IDS = [d.ident for d in _DEFS if d.group == "quaternion"]
ALL_IDS = [d.ident for d in _DEFS]


def get_identity(ident: str) -> IdentityDef:
    try:
        return CATALOG[ident]
    except KeyError:
        raise UnknownIdentity(
            f"unknown identity {ident!r}; known ids: {', '.join(ALL_IDS)}"
        ) from None
