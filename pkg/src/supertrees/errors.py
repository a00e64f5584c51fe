"""Exception hierarchy shared across the package."""


class SupertreeError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SupertreeError):
    """Input hypergraph data violates a structural invariant."""


class NonUniformEdgeError(ValidationError):
    """An edge does not contain exactly ``rank`` distinct vertices."""


class NonLinearError(ValidationError):
    """Two edges share more than one vertex."""


class DanglingVertexError(ValidationError):
    """An edge references a vertex that is not in the vertex set."""


class NoSuchEdgeError(SupertreeError):
    """The named edge is not present."""


class NoSuchVertexError(SupertreeError):
    """The named vertex is not present."""


class DiameterUndefinedError(SupertreeError):
    """Diameter requested for a disconnected hypergraph."""


class RankTooSmallError(SupertreeError):
    """Operation requires a larger edge rank."""


class RankNotTwoError(SupertreeError):
    """Operation requires an ordinary (2-uniform) graph input."""


class TargetInsideEdgeError(SupertreeError):
    """Edge-moving target vertex already lies inside a moved edge."""


class PivotNotInEdgeError(SupertreeError):
    """Edge-moving pivot vertex does not lie in its edge."""


class NonLinearResultError(SupertreeError):
    """A surgery operation would produce a non-linear hypergraph."""


class PendentEdgeError(SupertreeError):
    """Edge-releasing requires a non-pendent edge."""


class NotAcyclicError(SupertreeError):
    """Operation is only defined for superforests."""


class BadParamsError(SupertreeError):
    """Family parameters outside their admissible range."""


class TooLargeError(SupertreeError):
    """Instance exceeds the brute-force enumeration budget."""


class RankMismatchError(SupertreeError):
    """Operands have different edge ranks."""


class OrderMismatchError(SupertreeError):
    """Operands have different vertex counts."""


class NoPositiveRootError(SupertreeError):
    """Reduced matching polynomial has no positive root (corrupt input)."""


class DisconnectedError(SupertreeError):
    """Operation requires a connected hypergraph."""


class NotConvergedError(SupertreeError):
    """Iteration cap reached before meeting the tolerance."""


class BudgetExceededError(SupertreeError):
    """Enumeration request exceeds the configured budget."""


class PreconditionViolatedError(SupertreeError):
    """A theorem-verification precondition does not hold."""


class ParseError(SupertreeError):
    """Malformed input file."""
