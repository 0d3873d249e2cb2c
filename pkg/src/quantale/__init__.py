"""Quantales, quantale-enriched categories, and classification of
aggregation maps as lax morphisms, with exact rational arithmetic and
brute-force verification on finite instances."""

from .arith import EXT_ZERO, INF, ExtNonNeg, ext
from .catalog import (
    chain,
    grid_unit_quantale,
    resolve,
    three_drastic,
    truncated_lawvere,
    two,
)
from .continuous import (
    LAWVERE,
    DDFQuantale,
    LawvereQuantale,
    PointwiseDDFQuantale,
    ProductQuantale,
    UnitIntervalQuantale,
    lawvere_power,
)
from .core import (
    AxiomReport,
    FiniteQuantale,
    Violation,
    leq,
    product_quantale,
    sup,
    tensor,
    validate_finite_quantale,
)
from .ddf import (
    UNIT_DDF,
    ZERO_DDF,
    StepDDF,
    ddf_convolve,
    ddf_eval,
    ddf_leq,
    ddf_pointwise_sup,
    ddf_pointwise_tnorm,
    level_step,
    unit_jump,
)
from .errors import (
    BridgeError,
    DDFError,
    DomainError,
    ParseError,
    QuantaleAxiomError,
    QuantaleError,
    SizeBudgetError,
    StructureError,
    UnsupportedOperationError,
)
from .morphisms import (
    FAILS,
    HOLDS_EXHAUSTIVE,
    HOLDS_ON_SAMPLES,
    AggregatorReport,
    ClassificationReport,
    EquivalenceSummary,
    MorphismSpec,
    Verdict,
    Witness,
    brute_force_preserving,
    check_left_continuity,
    classify,
    extend_aggregator,
    extend_rule,
    functor_preservation_primitive,
    gdelta_expressibility,
    identity_morphism,
    is_lax_morphism,
    lift_F_delta,
    preserves_asym_triplets,
    preserves_triplets,
    qpm_aggregator_verdict,
    rule_morphism,
    table_morphism,
    threshold_half_morphism,
    unit_fiber_singleton,
    verify_equivalences,
)
from .tnorms import tnorm_eval
from .vcat import (
    DistanceMatrix,
    FuzzyMetricFamily,
    VCategory,
    VCatViolation,
    aggregate_category,
    category_to_distance,
    category_to_fuzzy,
    check_fuzzy_qpm,
    check_quasi_pseudometric,
    check_vcategory,
    coordinate_category,
    diagonal_category,
    distance_matrix,
    fuzzy_bridge,
    fuzzy_family,
    is_separated,
    is_symmetric,
    make_category,
    preorder_bridge,
    product_category,
    qpm_bridge,
)

__version__ = "0.1.0"
