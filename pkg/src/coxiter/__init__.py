"""Cox ring iteration for trinomial rings attached to complexity-one torus actions."""

from .classgroup import GradingData, class_group, torsion_free_cover, variable_degrees
from .criteria import (
    RationalityCase,
    admits_iteration,
    basic_platonic_triple,
    gcd_order,
    is_factorial,
    is_gcd_ordered,
    is_hyperplatonic,
    is_platonic_triple,
    is_rational,
    rationality_case,
)
from .errors import *  # noqa: F401,F403
from .iteration import (
    ChainFamily,
    IterationChain,
    classify_bpt_sequence,
    classify_chain,
    component_counts,
    cox_step,
    cox_step_ordered,
    enumerate_bpt_chains,
    iterate_chain,
    predicted_step_multiset,
    type1_to_type2,
)
from .linalg import (
    AbelianGroupInvariants,
    IntegerMatrix,
    cokernel_invariants,
    determinantal_divisor,
    hermite_normal_form,
    invariant_factors,
    smith_normal_form,
)
from .ring import RingDatum, block_gcds, build_p0, render_relations, validate_datum

__version__ = "0.1.0"
