"""critgraph: exact enumeration of k-vertex-critical graphs in H-free
families, with certifying colourability decisions."""

from .graphs import (
    Graph,
    Graph6Error,
    GraphOrderError,
    add_vertex,
    complement,
    disjoint_union,
    emit_graph6,
    induced_subgraph,
    iter_graph6,
    mask_of,
    parse_graph6,
    relabel,
    without_vertex,
)
from .patterns import PatternError, antihole, catalog_order4, realize
from .iso import all_graphs, canonical_form, canonical_graph, is_isomorphic
from .search import (
    Embedding,
    FamilyViolation,
    family_violation,
    find_induced,
    is_family_member,
    mixed_vertices,
)
from .coloring import (
    Colouring,
    chromatic_number,
    clique_lower_bound,
    independence_number,
    k_colourable,
)
from .criticality import (
    comparable_cliques,
    comparable_pair,
    criticality_witnesses,
    is_k_vertex_critical,
)
from .enumeration import (
    EnumerationConfig,
    EnumerationReport,
    brute_force_critical,
    enumerate_critical,
    expand,
)
from .certify import (
    Certificate,
    Colourable,
    CriticalList,
    FamilyViolationError,
    IncompleteCriticalListError,
    NotColourable,
    NotInFamily,
    certify_colourable,
    colour_cogem_k4free,
    shipped_critical_list,
    verify_certificate,
)
from .claims import (
    SetFamily,
    bull_equivalence,
    check_p3_2p1_freeness,
    check_p3p1_freeness,
    conjecture_slice,
    max_antichain,
    sperner_bound,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Graph6Error",
    "GraphOrderError",
    "PatternError",
    "Embedding",
    "FamilyViolation",
    "Colouring",
    "EnumerationConfig",
    "EnumerationReport",
    "Certificate",
    "Colourable",
    "NotColourable",
    "NotInFamily",
    "CriticalList",
    "FamilyViolationError",
    "IncompleteCriticalListError",
    "SetFamily",
    "add_vertex",
    "all_graphs",
    "antihole",
    "brute_force_critical",
    "bull_equivalence",
    "canonical_form",
    "canonical_graph",
    "catalog_order4",
    "certify_colourable",
    "check_p3_2p1_freeness",
    "check_p3p1_freeness",
    "chromatic_number",
    "clique_lower_bound",
    "colour_cogem_k4free",
    "comparable_cliques",
    "comparable_pair",
    "complement",
    "conjecture_slice",
    "criticality_witnesses",
    "disjoint_union",
    "emit_graph6",
    "enumerate_critical",
    "expand",
    "family_violation",
    "find_induced",
    "independence_number",
    "induced_subgraph",
    "is_family_member",
    "is_isomorphic",
    "is_k_vertex_critical",
    "iter_graph6",
    "k_colourable",
    "mask_of",
    "max_antichain",
    "mixed_vertices",
    "parse_graph6",
    "realize",
    "relabel",
    "shipped_critical_list",
    "sperner_bound",
    "verify_certificate",
    "without_vertex",
]
