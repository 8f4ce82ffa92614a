"""
Error types raised by the net analyses
"""
from typing import Optional


class NetError(ValueError):
    """Base class for all input and precondition errors"""


class InvalidNet(NetError):
    """Net construction violates the bipartite / identifier / uniqueness rules"""


class UnknownNode(NetError):
    """A node name is not declared in the net (or has the wrong kind)"""

    def __init__(self, node: str, expected: Optional[str] = None):
        self.node = node
        self.expected = expected
        what = f"{expected} " if expected else "node "
        super().__init__(f"unknown {what}'{node}'")


class InvalidMarking(NetError):
    """Marking does not match the net's place order or has negative counts"""


class CountOverflow(NetError):
    """A token count would exceed the 64-bit limit"""


class NotEnabled(NetError):
    """Transition fired at a marking where it is not enabled"""

    def __init__(self, transition: str):
        self.transition = transition
        super().__init__(f"transition '{transition}' is not enabled")


class NotEnabledAt(NetError):
    """A firing sequence fails at a given step"""

    def __init__(self, index: int, transition: str):
        self.index = index
        self.transition = transition
        super().__init__(f"step {index}: transition '{transition}' is not enabled")


class NotFreeChoice(NetError):
    """Operation requires a free-choice net"""


class InvalidAllocation(NetError):
    """Allocation does not pick a member of each cluster"""


class ClusterWithoutTransition(NetError):
    """A cluster has no transition, so no allocation exists"""


class ClusterWithoutPlace(NetError):
    """A cluster has no place, so no place-allocation exists"""


class UnreachableTargets(NetError):
    """Some node of the net has no path to the requested target set"""


class NotStronglyConnected(NetError):
    """Operation requires a strongly connected net"""


class DegenerateNet(NetError):
    """Operation requires at least one place and one transition"""


class IsolatedPlacePresent(NetError):
    """Operation requires a net without isolated places"""


class EnumerationOverflow(NetError):
    """An exhaustive enumeration would exceed its cap"""

    def __init__(self, cap: int, what: str = "items"):
        self.cap = cap
        super().__init__(f"enumeration of {what} exceeds cap {cap}")


class IncompleteGraph(NetError):
    """Reachability graph was truncated by the state cap"""


class ParseError(NetError):
    """Net document text is malformed"""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class CertificationError(RuntimeError):
    """A computed verdict failed its own re-classification check"""
