"""Green's relations, stability and subsemigroup inheritance for finite semigroups."""
from semigreen.core import (
    FiniteSemigroup,
    SubsemigroupEmbedding,
    adjoin_identity,
    closure,
    element_order_data,
    generate_from_maps,
    idempotents,
    is_regular_element,
    product,
    regular_set,
    validate_table,
)
from semigreen.elements import BooleanMatrix, PartialInjection, ReesMatrix, ReesTriple, Transformation
from semigreen.green import (
    EggboxDiagram,
    GreenStructure,
    compute_preorders,
    eggbox,
    green_classes,
    is_group_h_class,
)
from semigreen.inheritance import (
    enumerate_subsemigroups,
    inheritance_report,
    leqr_inheritance_check,
    reg_closed_check,
    thm_stable_check,
)
from semigreen.stability import (
    classify_simple,
    element_stability,
    is_group_bound,
    is_periodic,
    kw_stability,
    minimality_conditions,
    right_group_decomposition,
    stability_report,
)

__version__ = "0.1.0"
