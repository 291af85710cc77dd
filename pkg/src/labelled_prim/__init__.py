"""Primitive-ideal combinatorics of labelled graph spaces.

Builds the normal accommodating family of a finite labelled graph, the
lattice of hereditary saturated subfamilies, the maximal tails, and the
closure topology on them, with brute-force oracles for cross-checking.
"""

from .family import (
    AssumptionViolated,
    FamilyTooLarge,
    LabelledSpace,
    SpaceReport,
    SpaceUnverified,
    generate_family,
    make_space,
    verify_space,
)
from .graph import (
    InputError,
    LabelledGraph,
    UltimatelyPeriodicWord,
    build_graph,
    from_edges,
    load_graph,
    outgoing_labels,
    relative_range,
    validate_graph,
    word_range,
    word_source,
)
from .lattice import (
    HSLattice,
    enumerate_hs,
    feeds_into,
    hs_closure,
    is_hereditary,
    is_saturated,
    join,
    meet,
    quotient,
    saturate,
    sim_equiv,
)
from .tails import (
    enumerate_tails,
    family_sees,
    is_maximal_tail,
    is_prime_hs,
    lemma_br62_check,
    sees,
    tail_from_word,
    verify_prim_correspondence,
)
from .topology import (
    TailSpace,
    closed_sets,
    hull_kernel_closure,
    specialization_order,
    tail_closure,
    tail_space,
    verify_homeomorphism,
    verify_kuratowski,
)

__version__ = "0.1.0"
