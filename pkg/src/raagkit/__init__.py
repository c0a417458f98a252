"""raagkit: exact computations in right-angled Artin groups.

Defining graphs, normal forms and cyclic reduction, the half-space calculus
of the universal cover (intervals, medians, nesting, chains), cyclic
inverse-overlap verification, certified lower bounds for stable commutator
length, and angled 2-complex curvature checks.  All arithmetic is exact.
"""

from .errors import (
    ChainTooShort,
    DuplicateVertex,
    EmptyWord,
    GraphMismatch,
    GraphSyntaxError,
    HullTooLarge,
    InconsistentComplex,
    LoopEdge,
    NotCyclicallyReduced,
    NotInContext,
    NotNested,
    NotReduced,
    RaagError,
    SideCountBelowFour,
    TooLargeForExact,
    TrivialElement,
    UnknownFace,
    UnknownGenerator,
    UnknownVertex,
    UnknownVertexInEdge,
    WordSyntaxError,
)
from .graphs import (
    Coloring,
    DefiningGraph,
    adjacent,
    chromatic_number,
    find_triangle,
    parse_graph,
)
from .words import (
    CyclicReduction,
    CyclicWord,
    Letter,
    Word,
    concat,
    cyclically_reduce,
    equal,
    exponent_vector,
    inverse,
    is_cyclically_reduced,
    is_reduced,
    normal_form,
    power,
    reduce,
)
from .cube import (
    Chain,
    HalfSpace,
    Interval,
    MaxChainsReport,
    SpecialAxiomsReport,
    act,
    all_longest_chains,
    ball,
    check_max_chains,
    check_special_axioms,
    crosses,
    halfspace_of_edge,
    hyperplanes_cross,
    in_a_g_plus,
    interval,
    longest_chain,
    median,
    member,
    midpoint,
    nested,
    nested_globally,
    tightly_nested,
    tightly_nested_globally,
)
from .overlap import (
    NoOverlapSearchReport,
    OverlapReport,
    Witness,
    core_of_power,
    max_inverse_overlap,
    projection_overlap_bound,
    search_prop_noov_violation,
    verify_key_lemma,
)
from .bounds import (
    BoundCertificate,
    is_scl_finite,
    reference_bounds,
    scl_lower_bound,
    verify_certificate,
)
from .complexes import (
    AngledComplex,
    Corner,
    curvature_face,
    curvature_vertex,
    euler_characteristic,
    gauss_bonnet_residual,
    genus_defect_from_faces,
    parse_complex,
)

__version__ = "0.1.0"

__all__ = [
    "AngledComplex",
    "BoundCertificate",
    "Chain",
    "ChainTooShort",
    "Coloring",
    "Corner",
    "CyclicReduction",
    "CyclicWord",
    "DefiningGraph",
    "DuplicateVertex",
    "EmptyWord",
    "GraphMismatch",
    "GraphSyntaxError",
    "HalfSpace",
    "HullTooLarge",
    "InconsistentComplex",
    "Interval",
    "Letter",
    "LoopEdge",
    "MaxChainsReport",
    "NoOverlapSearchReport",
    "NotCyclicallyReduced",
    "NotInContext",
    "NotNested",
    "NotReduced",
    "OverlapReport",
    "RaagError",
    "SideCountBelowFour",
    "SpecialAxiomsReport",
    "TooLargeForExact",
    "TrivialElement",
    "UnknownFace",
    "UnknownGenerator",
    "UnknownVertex",
    "UnknownVertexInEdge",
    "Witness",
    "Word",
    "WordSyntaxError",
    "act",
    "adjacent",
    "all_longest_chains",
    "ball",
    "check_max_chains",
    "check_special_axioms",
    "chromatic_number",
    "concat",
    "core_of_power",
    "crosses",
    "curvature_face",
    "curvature_vertex",
    "cyclically_reduce",
    "equal",
    "euler_characteristic",
    "exponent_vector",
    "find_triangle",
    "gauss_bonnet_residual",
    "genus_defect_from_faces",
    "halfspace_of_edge",
    "hyperplanes_cross",
    "in_a_g_plus",
    "interval",
    "inverse",
    "is_cyclically_reduced",
    "is_reduced",
    "is_scl_finite",
    "longest_chain",
    "max_inverse_overlap",
    "median",
    "member",
    "midpoint",
    "nested",
    "nested_globally",
    "normal_form",
    "parse_complex",
    "parse_graph",
    "power",
    "projection_overlap_bound",
    "reduce",
    "reference_bounds",
    "scl_lower_bound",
    "search_prop_noov_violation",
    "tightly_nested",
    "tightly_nested_globally",
    "verify_certificate",
    "verify_key_lemma",
]
