"""Exception hierarchy.

Every error carries the process exit code the CLI reports for it.
"""


class MCSError(Exception):
    exit_code = 3


# parse / usage (exit 2)
class ParseError(MCSError):
    exit_code = 2


class NotTwoCnf(ParseError):
    pass


class IoError(MCSError):
    exit_code = 2


# invalid instances or arguments (exit 3)
class InvalidInstance(MCSError):
    exit_code = 3


class DisconnectedGraph(InvalidInstance):
    pass


class SelfLoop(InvalidInstance):
    pass


class DuplicateEdge(InvalidInstance):
    pass


class ColorGap(InvalidInstance):
    pass


class InvalidVertex(InvalidInstance):
    pass


class EmptySubset(InvalidInstance):
    pass


class NotATree(InvalidInstance):
    pass


class NonCanonicalKey(InvalidInstance):
    pass


class KOutOfRange(InvalidInstance):
    pass


class MTooSmall(InvalidInstance):
    pass


class BadAssignmentLength(InvalidInstance):
    pass


class MalformedSolution(InvalidInstance):
    pass


class NotCubic(InvalidInstance):
    pass


class NotACover(InvalidInstance):
    pass


class ContainsUniversalInterval(InvalidInstance):
    pass


class PartialGadget(InvalidInstance):
    pass


class NotACoverAfterDecode(InvalidInstance):
    pass


# resource caps (exit 4)
class ResourceLimit(MCSError):
    exit_code = 4


class InstanceTooLarge(ResourceLimit):
    pass


class BudgetExhausted(ResourceLimit):
    pass


class ColorCapExceeded(ResourceLimit):
    pass
