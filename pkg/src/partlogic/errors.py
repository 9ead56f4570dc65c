"""Exception hierarchy shared by every module."""


class PartitionLogicError(ValueError):
    """Base class for all validation and domain errors raised by partlogic."""


class IndexOutOfRange(PartitionLogicError):
    pass


class OverlappingBlocks(PartitionLogicError):
    pass


class EmptyBlock(PartitionLogicError):
    pass


class IncompleteCover(PartitionLogicError):
    pass


class UniverseMismatch(PartitionLogicError):
    pass


class UniverseTooLarge(PartitionLogicError):
    pass


class InvalidUniverse(PartitionLogicError):
    pass


class EmptyList(PartitionLogicError):
    pass


class EmptySet(PartitionLogicError):
    pass


class ZeroProbabilityEvent(PartitionLogicError):
    pass


class DimensionMismatch(PartitionLogicError):
    pass


class InvalidDensity(PartitionLogicError):
    pass


class NotAConformalPair(PartitionLogicError):
    """An entry of the decohered matrix is neither the original entry nor zero."""


class BasisMismatch(PartitionLogicError):
    pass


class NotNormalized(PartitionLogicError):
    pass


class ZeroVector(PartitionLogicError):
    pass


class EigensolveFailure(PartitionLogicError):
    pass


class NotACSCO(PartitionLogicError):
    pass


class NotSubnormalized(PartitionLogicError):
    pass


class BadBinCount(PartitionLogicError):
    pass


class ParseError(PartitionLogicError):
    pass
