"""Symmetry-breaking invariants of small graphs.

Core objects: Graph (bitmask adjacency), Perm / PermGroup (explicit element
lists), Coloring. Core invariants: the automorphism group, the distinguishing
number D, the determining number Det, and the cost number rho, with witnesses.
On top of those: distinguishable equivalence of graphs, structural rule
checking for two-vertex determining sets, and deterministic corpus scans.
"""

from .autgroup import (
    automorphism_group,
    orbits,
    pointwise_stabilizer,
    setwise_stabilizer,
)
from .checks import (
    FamilyCheck,
    RuleReport,
    ScanOptions,
    ScanReport,
    check_pair_rules,
    check_restriction,
    check_shared_distinguishing_number,
    family_bounds_check,
    scan_corpus,
)
from .config import Budget, DEFAULT_BUDGET
from .equivalence import (
    distinguishably_equivalent,
    equivalence_classes,
    isomorphism,
    representations_equal,
)
from .errors import (
    BudgetExceededError,
    DegreeError,
    FamilySpecError,
    GroupTooLargeError,
    NotApplicableError,
    NotDeterminingPairError,
    ParseError,
    SymbreakError,
    UnsupportedSizeError,
)
from .graphs import (
    FamilySpec,
    Graph,
    complement,
    encode_graph6,
    enumerate_graphs,
    generate_family,
    induced_subgraph,
    neighbors,
    parse_graph6,
    permuted,
)
from .metrics import (
    Coloring,
    SymmetryReport,
    UNKNOWN,
    analyze,
    cost_number,
    determining_number,
    distinguishing_number,
    is_broken,
    is_determining_set,
    is_distinguishing,
    is_distinguishing_class,
    nn_pairs,
    preserves_coloring,
)
from .perms import Labeling, Perm, PermGroup, compose, cycle_type, inverse, relabel

__all__ = [
    "Budget",
    "BudgetExceededError",
    "Coloring",
    "DEFAULT_BUDGET",
    "DegreeError",
    "FamilyCheck",
    "FamilySpec",
    "FamilySpecError",
    "Graph",
    "GroupTooLargeError",
    "Labeling",
    "NotApplicableError",
    "NotDeterminingPairError",
    "ParseError",
    "Perm",
    "PermGroup",
    "RuleReport",
    "ScanOptions",
    "ScanReport",
    "SymbreakError",
    "SymmetryReport",
    "UNKNOWN",
    "UnsupportedSizeError",
    "analyze",
    "automorphism_group",
    "check_pair_rules",
    "check_restriction",
    "check_shared_distinguishing_number",
    "complement",
    "compose",
    "cost_number",
    "cycle_type",
    "determining_number",
    "distinguishably_equivalent",
    "distinguishing_number",
    "encode_graph6",
    "enumerate_graphs",
    "equivalence_classes",
    "family_bounds_check",
    "generate_family",
    "induced_subgraph",
    "inverse",
    "is_broken",
    "is_determining_set",
    "is_distinguishing",
    "is_distinguishing_class",
    "isomorphism",
    "neighbors",
    "nn_pairs",
    "orbits",
    "parse_graph6",
    "permuted",
    "pointwise_stabilizer",
    "preserves_coloring",
    "relabel",
    "representations_equal",
    "scan_corpus",
    "setwise_stabilizer",
]
