"""Bridgeland stability conditions on the derived category of P^1."""

from ._config import EPS_PHASE
from .cells import CellLabel, cell_of, neighbors, representative, scan_path
from .derived_hom import hom_dim
from .errors import (
    InvalidConditionError,
    NotNormalizedError,
    NotSemistableError,
    P1StabError,
    ParseError,
    PoleError,
    RegimeError,
)
from .group_actions import GroupElement, act, equivalent, rebase
from .kclass import KClass, class_of, euler_form
from .moduli import (
    ReductionResult,
    Region,
    chart_X,
    identify_boundary,
    in_K,
    in_strip,
    normalize_to_X,
    reduce_to_K,
)
from .objects import DecomposedObject, LineBundle, Torsion, act_object, format_object, parse_object
from .stability import (
    CohShift,
    Exotic,
    HNFiltration,
    Pair,
    Regime,
    StabilityCondition,
    admits_slope_function,
    central_charge,
    heart_at,
    hn,
    is_semistable,
    make_condition,
    mass,
    phase_of,
    torsion_phase,
)

__version__ = "0.1.0"
