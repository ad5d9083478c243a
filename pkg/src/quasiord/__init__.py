"""Exact irreducibility test for quasi-ordinary polynomials."""

from .polyring import (
    ContractError,
    DimensionError,
    MPoly,
    UndefinedOrderError,
    YPoly,
    discriminant_y,
    exp_lex,
    format_ypoly,
    initial_form,
    monomial_unit_split,
    resultant_y,
)
from .gadic import G_adic, approximate_root, g_adic, tschirnhausen
from .charseq import (
    CharData,
    ExponentVector,
    WeightSystem,
    formal_order,
    gcd_minors,
    lattice_contains,
    r_m_convert,
    semigroup_membership,
)
from .gnp import GNPolygon, Straightness, build_gnp, straightness
from .criterion import (
    Config,
    FailureKind,
    Report,
    Verdict,
    analyze,
    binomial_irreducible,
    check_order_bound,
)

__version__ = "0.1.0"
