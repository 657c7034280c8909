"""scatterkit: scattered spaces, their ranks and their homeomorphism groups.

Exact, brute-force-verifiable tooling: Cantor normal form ordinal
arithmetic, classification of ordinal spaces up to homeomorphism,
Cantor-Bendixson data, finite Alexandrov spaces with full homeomorphism
group computation, the graph-to-space encoding, symbolic descriptors of
homeomorphism groups of ordinal spaces, and linear-order flows.
"""

from .classify import (
    ALEPH0,
    Family,
    SpaceClass,
    canonical,
    class_profile,
    classify,
    compactify,
    derived_order_type,
    homeomorphic,
    point_rank,
)
from .errors import (
    BoundExceededError,
    DomainError,
    InternalCheckError,
    OutOfSpaceError,
    ParseError,
    ScatterkitError,
    UnknownPointError,
    UnrepresentableProfileError,
    ValidationError,
)
from .finite import FiniteSpace, PermutationGroup, SimilarityPartition
from .graphs import Graph
from .groups import GroupDescriptor, UmfDescriptor, descriptor_of, groups_isomorphic
from .ordinal import OMEGA, ONE, ZERO, Kind, Ordinal, omega_power

__version__ = "0.1.0"

__all__ = [
    "Ordinal",
    "Kind",
    "ZERO",
    "ONE",
    "OMEGA",
    "omega_power",
    "Family",
    "SpaceClass",
    "ALEPH0",
    "classify",
    "canonical",
    "homeomorphic",
    "compactify",
    "point_rank",
    "derived_order_type",
    "class_profile",
    "FiniteSpace",
    "PermutationGroup",
    "SimilarityPartition",
    "Graph",
    "GroupDescriptor",
    "UmfDescriptor",
    "descriptor_of",
    "groups_isomorphic",
    "ScatterkitError",
    "ParseError",
    "DomainError",
    "ValidationError",
    "UnknownPointError",
    "OutOfSpaceError",
    "BoundExceededError",
    "UnrepresentableProfileError",
    "InternalCheckError",
    "__version__",
]
