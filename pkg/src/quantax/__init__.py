"""quantax: a finite-model workbench for quantum-axiomatic structures.

Builds finite lattices and state-property systems, checks the five axioms
of operational quantum axiomatics, decomposes systems into classical and
nonclassical parts, constructs the separated product of two systems via
biorthogonal closure, and verifies tensor-coupling conditions with exact
Gaussian-rational linear algebra.
"""

__version__ = "0.1.0"

from .lattice import (
    FiniteLattice,
    NoBounds,
    NotALattice,
    NotAPartialOrder,
    Orthocomplementation,
    build_lattice,
    check_atomistic,
    check_covering_law,
    check_orthocomplementation,
    check_weak_modularity,
    join_set,
    meet_set,
)
from .report import AxiomReport
from .errors import AxiomsNotSatisfied, QuantaxError
from .sps import (
    StatePropertySystem,
    axiom1_state_determination,
    axiom2_atomisticity,
    count_pairwise_orthogonal,
    make_sps,
    orthogonal_states,
    property_state_form,
)
from .decomposition import (
    classical_part,
    direct_union,
    nonclassical_components,
    verify_representation_part1,
)
from .sepprod import (
    biorthogonal_closure,
    product_orthogonality,
    separated_product,
    superselection_witnesses,
    verify_no_go,
)
