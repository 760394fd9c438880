"""Exception hierarchy shared by all modules of the toolkit."""


class OrigamiError(Exception):
    """Base class for every error raised by this package."""


class DegenerateInput(OrigamiError):
    """An input is degenerate where a nondegenerate one is required (e.g. a zero vector)."""


class DimensionError(OrigamiError):
    """Operands have incompatible or unexpected dimensions."""


class NotDelzant(OrigamiError):
    """Halfspace data does not describe a bounded, full-dimensional, irredundant polytope."""


class NotSimple(OrigamiError):
    """An operation that requires a simple polytope was given a non-simple one."""


class FaceMismatch(OrigamiError):
    """A face was used with a polytope or template it does not belong to."""


class MalformedTemplate(OrigamiError):
    """Template data is structurally broken (dangling references, bad indices)."""


class InvalidTemplate(OrigamiError):
    """An operation requiring a *valid* template was given one that fails validation."""


class NotALeaf(OrigamiError):
    """cut_leaf was pointed at a vertex whose degree is not exactly one."""


class Unsupported(OrigamiError):
    """The input is well-formed but outside the class this operation supports."""


class ConditionOneViolation(OrigamiError):
    """A proposed gluing fails the fold-facet agreement condition."""


class ConditionTwoViolation(OrigamiError):
    """A proposed gluing would make two fold facets at one vertex intersect."""


class NoFixedPoints(OrigamiError):
    """The template has no fixed points, so no moment graph exists."""


class InternalConsistency(OrigamiError):
    """A structural invariant the code relies on failed; indicates a bug or bad input."""


class FreenessViolation(OrigamiError):
    """The Betti extraction produced a negative value or a total that misses the fixed-point count."""


class ShapeError(OrigamiError):
    """A cohomology class tuple does not match the moment graph's shape."""


class ParseError(OrigamiError):
    """A template file could not be parsed; carries a location breadcrumb."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)
