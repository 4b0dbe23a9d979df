"""Exact-rational Leibniz superalgebras: laws, invariants, adapted bases and degenerations."""
from .adapted import adapted_basis_zf, to_adapted, zf_relation_defects
from .algebra import (
    Diverges,
    GradedMap,
    GradedSubspace,
    GradedVector,
    ScalingFamily,
    SuperAlgebra,
    apply_basis_change,
    bracket,
    degeneration_limit,
    direct_sum,
    even_line,
    is_leibniz,
    is_lie,
    leibniz_defects,
    odd_line,
    operator_identity_defects,
)
from .errors import (
    AlgebraError,
    DimensionMismatch,
    GradingError,
    NotHomogeneous,
    NotNilpotentError,
    NotZeroFiliformError,
    SingularMapError,
)
from .invariants import (
    AnnihilatorKind,
    CharSequence,
    InvariantProfile,
    Obstruction,
    Shape,
    Witness,
    annihilator,
    central_series,
    char_sequence,
    classify_shape,
    closure_obstruction,
    distinguish,
    engel_flag,
    graded_central_series,
    invariant_profile,
    nilindex,
    s_nilindex,
)
from .lsa import Definition, ParseError, instantiate, parse, serialize

__version__ = "0.1.0"
