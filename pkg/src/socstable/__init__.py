"""Maximum socially stable matchings: socGS, exact search, checkers and the
Independent Set reduction."""

from .altered import AlreadyPromoted, AlteredPrefState, altered_order, init_altered, promote
from .deferred_acceptance import Outcome, Proposal, SolveTrace, assert_da_properties, man_proposing_da
from .exact import InstanceTooLarge, enumerate_socially_stable, exact_max_socially_stable
from .generators import GenConfig, fixture, gen_random, gen_random_graph
from .model import (
    Agent,
    DuplicateAgent,
    DuplicateInPref,
    Instance,
    InstanceError,
    Matching,
    SelfSideEdge,
    Side,
    UnknownAgent,
    UnknownAgentInEdge,
    UnknownAgentInPref,
    make_instance,
    rank_of,
    validate_instance,
)
from .reduction import (
    Gadget,
    GraphTooLarge,
    NormalizationDiverged,
    NotIndependent,
    UndirectedGraph,
    brute_force_max_is,
    extract_independent_set,
    is_to_matching,
    normalize_matching,
    reduce_is_to_socstable,
)
from .socgs import SocGsResult, socgs, stable_baseline
from .stability import (
    blocking_pairs,
    cardinality,
    is_individually_rational,
    is_socially_stable,
    is_stable,
    social_blocking_pairs,
)

__version__ = "0.1.0"
