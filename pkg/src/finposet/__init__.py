"""Finite posets as finite topological spaces, with exact 2-dimension.

The central objects are the immutable Poset, certified Boolean-lattice
embeddings (CubeEmbedding, DimCertificate), and the homotopy toolkit of
beat points and cores that powers the constructive embedding routes.
"""

from .census import (
    CensusReport,
    CheckResult,
    census_check,
    enumerate_posets,
    random_poset,
)
from .constructions import (
    antichain,
    chain,
    cone,
    hypercube,
    join,
    sierpinski,
    standard_poset,
    suspension,
)
from .core import (
    MonotoneMap,
    Poset,
    StructureStats,
    build_poset,
    covers,
    disjoint_union,
    induced_subposet,
    is_initial_map,
    is_isomorphic,
    minimal_open_set,
    opposite,
    product,
    structure_stats,
    topology_census,
)
from .dimension import (
    CubeEmbedding,
    DimCertificate,
    canonical_embedding,
    contractible_embedding,
    exists_embedding,
    exists_embedding_naive,
    extend_embedding_at_beat_point,
    lower_bound,
    two_dimension,
    upper_bound,
    verify_embedding,
)
from .errors import (
    CycleError,
    EmptyPoset,
    FormatError,
    InvalidEmbedding,
    InvalidWitness,
    OutOfRange,
    PosetError,
    TooLarge,
    TooWide,
    UnknownCheck,
    UnknownElement,
)
from .family import construction_sequence, realize
from .homotopy import (
    BeatPointWitness,
    CoreTrace,
    beat_points,
    core,
    is_beat_point,
    is_contractible,
    remove_point,
)
from .io import (
    format_certificate,
    format_core_trace,
    format_embedding,
    format_poset,
    parse_embedding,
    parse_poset,
    to_dot,
)

__version__ = "0.1.0"

__all__ = [
    "BeatPointWitness",
    "CensusReport",
    "CheckResult",
    "CoreTrace",
    "CubeEmbedding",
    "CycleError",
    "DimCertificate",
    "EmptyPoset",
    "FormatError",
    "InvalidEmbedding",
    "InvalidWitness",
    "MonotoneMap",
    "OutOfRange",
    "Poset",
    "PosetError",
    "StructureStats",
    "TooLarge",
    "TooWide",
    "UnknownCheck",
    "UnknownElement",
    "antichain",
    "beat_points",
    "build_poset",
    "canonical_embedding",
    "census_check",
    "chain",
    "cone",
    "construction_sequence",
    "contractible_embedding",
    "core",
    "covers",
    "disjoint_union",
    "enumerate_posets",
    "exists_embedding",
    "exists_embedding_naive",
    "extend_embedding_at_beat_point",
    "format_certificate",
    "format_core_trace",
    "format_embedding",
    "format_poset",
    "hypercube",
    "induced_subposet",
    "is_beat_point",
    "is_contractible",
    "is_initial_map",
    "is_isomorphic",
    "join",
    "lower_bound",
    "minimal_open_set",
    "opposite",
    "parse_embedding",
    "parse_poset",
    "product",
    "random_poset",
    "realize",
    "remove_point",
    "sierpinski",
    "standard_poset",
    "structure_stats",
    "suspension",
    "to_dot",
    "topology_census",
    "two_dimension",
    "upper_bound",
    "verify_embedding",
]
