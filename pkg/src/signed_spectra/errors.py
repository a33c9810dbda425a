"""Exception types raised across the package.

Every domain error derives from :class:`SignedGraphError`, which the CLI maps
to exit code 1 and reports by class name.
"""


class SignedGraphError(ValueError):
    pass


class DuplicateEdge(SignedGraphError):
    pass


class SelfLoop(SignedGraphError):
    pass


class VertexOutOfRange(SignedGraphError):
    pass


class UnderlyingGraphMismatch(SignedGraphError):
    pass


class NotBicyclic(SignedGraphError):
    pass


class Balanced(SignedGraphError):
    pass


class ConvergenceFailure(SignedGraphError):
    pass


class TooLarge(SignedGraphError):
    pass


class CycleRankTooHigh(SignedGraphError):
    pass


class NoRealRootInInterval(SignedGraphError):
    pass


class EdgeMissing(SignedGraphError):
    pass


class EdgeCollision(SignedGraphError):
    pass


class NotCutEdge(SignedGraphError):
    pass


class MultipleIndex(SignedGraphError):
    pass


class PendantEdge(SignedGraphError):
    pass


class EdgeInTriangle(SignedGraphError):
    pass


class NotSubtreeRoot(SignedGraphError):
    pass


class UnsupportedN(SignedGraphError):
    pass


class ReconstructionAmbiguous(SignedGraphError):
    pass


class OrderingViolated(SignedGraphError):
    pass


class ExclusionViolated(SignedGraphError):
    pass


class FormatError(SignedGraphError):
    pass
