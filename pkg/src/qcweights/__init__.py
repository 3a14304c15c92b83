"""Weight distributions and orbit-count bounds for simple-root quasi-cyclic codes."""

from .analysis import AnalysisConfig, analyze_spec
from .bounds import (
    ConstituentArith,
    bound_single_full,
    bound_single_shift,
    bound_single_shift_scalar,
    bound_theorem1,
    bound_theorem2,
    bound_theorem3,
    corollary1,
    corollary2,
    corollary3,
    corollary3_pair_term,
    shift_scalar_orbit_count,
)
from .code import ConstituentSpec, QccSpec, QuasiCyclicCode, build_code, weight_distribution
from .config import parse_config
from .errors import (
    ConfigSyntaxError,
    DomainError,
    EnumerationLimitError,
    GroupNotApplicableError,
    InvalidInputError,
    QccError,
    TheoremNotApplicableError,
)
from .fields import FieldSpec, build_field
from .group import GroupKind, burnside_count, orbit_partition
from .numth import coset_of, cyclotomic_cosets
from .ring import RingContext, ring_context

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig",
    "ConfigSyntaxError",
    "ConstituentArith",
    "ConstituentSpec",
    "DomainError",
    "EnumerationLimitError",
    "FieldSpec",
    "GroupKind",
    "GroupNotApplicableError",
    "InvalidInputError",
    "QccError",
    "QccSpec",
    "QuasiCyclicCode",
    "RingContext",
    "TheoremNotApplicableError",
    "analyze_spec",
    "bound_single_full",
    "bound_single_shift",
    "bound_single_shift_scalar",
    "bound_theorem1",
    "bound_theorem2",
    "bound_theorem3",
    "build_code",
    "build_field",
    "burnside_count",
    "corollary1",
    "corollary2",
    "corollary3",
    "corollary3_pair_term",
    "coset_of",
    "cyclotomic_cosets",
    "orbit_partition",
    "parse_config",
    "ring_context",
    "shift_scalar_orbit_count",
    "weight_distribution",
]
