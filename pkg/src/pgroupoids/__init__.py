"""P-groupoids, P-quasigroups and edge decompositions of complete graphs."""
from .algebra import (
    PropertyReport,
    Verdict,
    automorphisms,
    enumerate_subgroupoids,
    find_isomorphism,
    is_p_groupoid,
    iter_isomorphisms,
    left_translation,
    property_report,
    right_translation,
    subgroupoid_closure,
)
from .constructions import (
    AffineSpec,
    denes_keedwell,
    left_translation_order,
    left_translation_power,
    medial_affine,
)
from .decomp import (
    AmalgamationMap,
    Decomposition,
    MultiGraph,
    amalgamate,
    decomposition_from_groupoid,
    decomposition_isomorphism,
    groupoid_from_decomposition,
    is_hamiltonian,
)
from .mlt import multiplication_groups
from .perm import (
    Permutation,
    PermutationGroup,
    generate_group,
    group_automorphisms,
    is_characteristic,
    is_dihedral,
)
from .search import SearchConstraints, canonical_form, count_models, search_p_groupoids
from .table import CayleyTable, parse_table

__version__ = "0.1.0"
