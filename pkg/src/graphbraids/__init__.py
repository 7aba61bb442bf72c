"""Graph braid groups at desk scale.

Builds discretized configuration spaces of graphs as cubical complexes,
computes their exact integer homology, runs the discrete Morse matching and
its generator count, decides which graph braid groups are classical braid
groups, and constructs/verifies embeddings of right-angled Artin groups into
classical pure braid groups.
"""

from .braids import (
    BraidWord,
    GarsideNormalForm,
    braid_to_text,
    is_identity,
    is_pure,
    parse_braid,
    permutation_image,
    psi,
)
from .classify import ClassificationResult, betti_cross_check, classify
from .complexes import (
    Cell,
    CubicalComplex,
    build_complex,
    connected_components,
    euler_characteristic,
)
from .embed import (
    EmbeddingMap,
    build_embedding,
    gbg_chain_target,
    strand_bound,
    verify_embedding,
)
from .errors import (
    CrossCheckError,
    DisconnectedGraphError,
    EmbeddingVerificationError,
    EmptyComplexError,
    GraphBraidError,
    GraphFormatError,
    InsufficientSubdivisionError,
    MatchingValidationError,
    WordFormatError,
)
from .graphs import (
    Graph,
    HomeoTag,
    HomeoType,
    MorseTree,
    count_distinct_paths,
    essential_vertices,
    homeomorphism_type,
    is_sufficiently_subdivided,
    line_graph,
    morse_spanning_tree,
    nonisomorphic_graphs,
    opposite_graph,
    parse_graph,
    sufficiently_subdivide,
)
from .hom import HomCandidate, check_relations, conclusion_check, exponent_profile
from .homology import (
    HomologySummary,
    IntegerMatrix,
    first_betti,
    homology,
    smith_normal_form,
)
from .morse import (
    MorseMatching,
    build_matching,
    morse_generator_count,
    principal_reduction,
    reduction_vertex_candidates,
)
from .raag import (
    RaagWord,
    cyclic_reduce,
    delete_generators,
    exponent_sum,
    link_of,
    parse_raag_word,
    pure_factors,
    split_h_hat,
    support,
    word_to_text,
    words_equal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
