"""Combinatorics of folded toric manifolds, over exact rational arithmetic.

The package models an origami template: a connected multigraph whose
vertices carry Delzant polytopes and whose edges name fold facets along
which neighboring polytopes superimpose.  On top of that sit validation,
the orbit-space face poset, moment (GKM) graph extraction, equivariant
class-space dimensions with Betti numbers, leaf cutting and radial
blow-up, JSON round-tripping, and a small CLI (``toric-origami``).
"""

from .cohomology import (
    BettiVector,
    ClassTuple,
    GradedPolySpace,
    HilbertFunction,
    MembershipResult,
    betti_numbers,
    check_membership,
    class_from_polynomials,
    generator_degrees,
    gkm_dimension,
    hilbert_function,
    monomial_basis,
)
from .exceptions import (
    ConditionOneViolation,
    ConditionTwoViolation,
    DegenerateInput,
    DimensionError,
    FaceMismatch,
    FreenessViolation,
    InternalConsistency,
    InvalidTemplate,
    MalformedTemplate,
    NoFixedPoints,
    NotALeaf,
    NotDelzant,
    NotSimple,
    OrigamiError,
    ParseError,
    ShapeError,
    Unsupported,
)
from .fileformat import (
    corpus_names,
    corpus_path,
    face_poset_dot,
    load_corpus,
    load_path,
    parse,
    serialize,
)
from .gkm import (
    FixedPoint,
    GkmEdge,
    MomentGraph,
    export_dot,
    fixed_points,
    moment_graph,
)
from .orbit_space import (
    FacePoset,
    GluedFacet,
    OrbitFace,
    face_poset,
    face_subgraph,
    glued_facets,
    is_face_acyclic,
)
from .polytope import (
    DelzantPolytope,
    Face,
    HalfSpace,
    agree_near_facet,
    facet_as_polytope,
)
from .template import (
    CutResult,
    OrigamiTemplate,
    TemplateGraph,
    ValidationReport,
    isomorphic,
    radial_blow_up,
)

__version__ = "0.1.0"

__all__ = [
    "BettiVector",
    "ClassTuple",
    "ConditionOneViolation",
    "ConditionTwoViolation",
    "CutResult",
    "DegenerateInput",
    "DelzantPolytope",
    "DimensionError",
    "Face",
    "FaceMismatch",
    "FacePoset",
    "FixedPoint",
    "FreenessViolation",
    "GkmEdge",
    "GluedFacet",
    "GradedPolySpace",
    "HalfSpace",
    "HilbertFunction",
    "InternalConsistency",
    "InvalidTemplate",
    "MalformedTemplate",
    "MembershipResult",
    "MomentGraph",
    "NoFixedPoints",
    "NotALeaf",
    "NotDelzant",
    "NotSimple",
    "OrbitFace",
    "OrigamiError",
    "OrigamiTemplate",
    "ParseError",
    "ShapeError",
    "TemplateGraph",
    "Unsupported",
    "ValidationReport",
    "agree_near_facet",
    "betti_numbers",
    "check_membership",
    "class_from_polynomials",
    "corpus_names",
    "corpus_path",
    "export_dot",
    "face_poset",
    "face_poset_dot",
    "face_subgraph",
    "facet_as_polytope",
    "fixed_points",
    "generator_degrees",
    "gkm_dimension",
    "glued_facets",
    "hilbert_function",
    "isomorphic",
    "load_corpus",
    "load_path",
    "monomial_basis",
    "moment_graph",
    "parse",
    "radial_blow_up",
    "serialize",
    "__version__",
]
