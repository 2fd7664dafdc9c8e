"""Exact theta lifts of discrete series representations of U(p,q).

The package decides, from the Harish-Chandra parameter alone, whether
the theta lift of a discrete series to a given target form vanishes,
and when it does not, computes the lift: a discrete series parameter
when the target is at most as large as the source, and the inducing
block data of a weakly fair derived-functor module when it is larger.
A second route through packet characters and their transfer serves as
an independent cross-check on every lift.
"""

from .core import (
    HCParam,
    HalfInt,
    LiftContext,
    Signature,
    conjugate_dual,
    half,
    make_regular_deformation,
    parse_half_list,
    split_abgd,
    validate_hc,
)
from .errors import (
    ChainNotPresent,
    ChamberAmbiguous,
    InternalLemmaMismatch,
    InternalWeaklyFairViolation,
    MalformedCharacter,
    NotCompactLevi,
    NotDominant,
    NotGoodRange,
    ParityMismatch,
    PatternMismatch,
    PreconditionViolation,
    RepeatedEntry,
    SignatureMismatch,
    ThetaLiftError,
    UnclassifiableZero,
    WrongParityClass,
)
from .ktypes import KType, correspond_ktype, split_mu
from .lifting import (
    AqBlock,
    AqLambdaData,
    LiftResult,
    aq_infinitesimal_character,
    aq_to_discrete_series,
    lift,
    lift_down,
    lift_up,
)
from .nonvanishing import (
    NVInvariants,
    TowerPosition,
    c_count,
    first_occurrence,
    invariants,
    li_sufficient,
    occurs,
)
from .packets import (
    AParameter,
    LParameter,
    SignCharacter,
    epsilon_of_signature,
    eta_from_pi,
    packet_members,
    pi_from_eta,
)
from .suites import EnumerationBounds, SUITES, iter_enumeration, run_suite
from .transfer import (
    GlobalizationReport,
    ZetaSigns,
    build_a_parameter,
    epsilon_phi_trivial,
    sigma_from_eta_prime,
    transfer_eta,
    verify_globalization,
    zeta_signs,
)

__all__ = [
    "AParameter",
    "AqBlock",
    "AqLambdaData",
    "ChainNotPresent",
    "ChamberAmbiguous",
    "EnumerationBounds",
    "GlobalizationReport",
    "HCParam",
    "HalfInt",
    "InternalLemmaMismatch",
    "InternalWeaklyFairViolation",
    "KType",
    "LParameter",
    "LiftContext",
    "LiftResult",
    "MalformedCharacter",
    "NVInvariants",
    "NotCompactLevi",
    "NotDominant",
    "NotGoodRange",
    "ParityMismatch",
    "PatternMismatch",
    "PreconditionViolation",
    "RepeatedEntry",
    "SUITES",
    "SignCharacter",
    "Signature",
    "SignatureMismatch",
    "ThetaLiftError",
    "TowerPosition",
    "UnclassifiableZero",
    "WrongParityClass",
    "ZetaSigns",
    "aq_infinitesimal_character",
    "aq_to_discrete_series",
    "build_a_parameter",
    "c_count",
    "conjugate_dual",
    "correspond_ktype",
    "epsilon_of_signature",
    "epsilon_phi_trivial",
    "eta_from_pi",
    "first_occurrence",
    "half",
    "invariants",
    "iter_enumeration",
    "lift",
    "lift_down",
    "lift_up",
    "li_sufficient",
    "make_regular_deformation",
    "occurs",
    "packet_members",
    "parse_half_list",
    "pi_from_eta",
    "run_suite",
    "sigma_from_eta_prime",
    "split_abgd",
    "split_mu",
    "transfer_eta",
    "validate_hc",
    "verify_globalization",
    "zeta_signs",
]
