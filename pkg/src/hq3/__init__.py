"""Exact arithmetic for higher-order Horadam sequences and their
3-parameter generalized quaternions, with a zero-tolerance identity verifier."""

from .errors import (
    DegenerateDenominator,
    DegenerateRoots,
    DivisionByZero,
    Hq3Error,
    MismatchedDiscriminant,
    MismatchedParams,
    UndefinedSequence,
    UnknownIdentity,
    ZeroRoot,
)
from .exact_arith import QuadExt, Rational, embed_roots, rat, rat_str
from .pgq_algebra import HAMILTON, PgqParams, Quaternion, commutator
from .horadam_core import (
    HoradamParams,
    SequenceTables,
    ab_product,
    fib_u,
    higher_u,
    higher_u_ratio,
    higher_w_ratio,
    higher_w_rec,
    horadam_w,
    lucas_v,
    scalar_catalan_u,
    scalar_catalan_w,
    scalar_decompose_check,
    scalar_docagne_u,
    scalar_docagne_w,
    scalar_ogf_check,
    scalar_sum_w,
    tables_for,
    w0s_binet_form,
)
from .quat_sequences import (
    Mat2,
    QuatSeqContext,
    RootData,
    h_matrix,
    h_power,
    h_power_closed,
    qu,
    qu_binet,
    qw,
    qw_binet,
    theta_commutator,
    theta_products,
)
from .catalog import ALL_IDS, CATALOG, IdentityDef, get_identity
from .campaign import (
    CampaignResult,
    GridSpec,
    default_grid,
    load_grid,
    quick_grid,
    run_campaign,
)

__version__ = "0.1.0"
