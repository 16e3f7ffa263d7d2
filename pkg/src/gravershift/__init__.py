"""Graver bases of shifted 3-generated numerical semigroups.

Two independent routes to the same answer: a brute-force oracle (bounded
kernel enumeration plus conformal-minimality filtering) and a period
transport that carries orthant Hilbert bases from a small base shift to an
arbitrarily large one.
"""

from .analysis import (
    BoundsReport,
    CountRow,
    CountTable,
    DifferentialReport,
    PeriodLawReport,
    augment,
    count_scan,
    differential_test,
    empirical_bounds,
    exhaustive_optimum,
    verify_period_law,
)
from .core import (
    DerivedConstants,
    InternalConsistencyError,
    InvalidInputError,
    NoLengthTradeError,
    OrthantLabel,
    OutsideScopeError,
    SemigroupInstance,
    ShiftedFamily,
    Strip,
    Trade,
    TradeSet,
    canonical_rep,
    from_generators,
    in_orthant,
    in_strip,
    length,
    orthant_memberships,
)
from .oracle import (
    enumerate_trades,
    factorizations,
    graver_oracle,
    hilbert_oracle,
    is_conformal,
)
from .shift import (
    SegmentEndpoints,
    advance_npp,
    advance_pnp,
    advance_ppn,
    assemble_graver,
    base_decomposition,
    effective_base_bound,
    frobenius_two_gen,
    graver_shift,
    hilbert_shift,
    negative_segment,
    period_map,
    period_map_inverse,
    period_multiplier,
    positive_segment,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "CountRow",
    "CountTable",
    "DerivedConstants",
    "DifferentialReport",
    "InternalConsistencyError",
    "InvalidInputError",
    "NoLengthTradeError",
    "OrthantLabel",
    "OutsideScopeError",
    "PeriodLawReport",
    "SegmentEndpoints",
    "SemigroupInstance",
    "ShiftedFamily",
    "Strip",
    "Trade",
    "TradeSet",
    "advance_npp",
    "advance_pnp",
    "advance_ppn",
    "assemble_graver",
    "augment",
    "base_decomposition",
    "canonical_rep",
    "count_scan",
    "differential_test",
    "effective_base_bound",
    "empirical_bounds",
    "enumerate_trades",
    "exhaustive_optimum",
    "factorizations",
    "frobenius_two_gen",
    "from_generators",
    "graver_oracle",
    "graver_shift",
    "hilbert_oracle",
    "hilbert_shift",
    "in_orthant",
    "in_strip",
    "is_conformal",
    "length",
    "negative_segment",
    "orthant_memberships",
    "period_map",
    "period_map_inverse",
    "period_multiplier",
    "positive_segment",
    "verify_period_law",
]
