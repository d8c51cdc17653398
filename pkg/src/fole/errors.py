"""Exception hierarchy shared by every module."""

from __future__ import annotations


class FoleError(Exception):
    """Base class for all library errors."""


class UnknownType(FoleError, LookupError):
    pass


class DomainMismatch(FoleError):
    """A map is not total on its domain or leaves its codomain."""


class PartialMap(DomainMismatch):
    pass


class InvalidInfomorphism(FoleError):
    pass


class IllTypedTuple(FoleError):
    pass


class TupleSpaceTooLarge(FoleError):
    pass


class EndpointMismatch(FoleError):
    pass


class CarrierMismatch(FoleError):
    pass


class InvalidStructure(FoleError):
    def __init__(self, message: str, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class InvalidMorphism(FoleError):
    def __init__(self, message: str, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class InvalidInput(FoleError):
    pass


class NotUnifiedModel(FoleError):
    def __init__(self, message: str, offending=()):
        super().__init__(message)
        self.offending = tuple(offending)


class ReferentialViolation(FoleError):
    def __init__(self, message: str, offending=()):
        super().__init__(message)
        self.offending = tuple(offending)


class InconsistentQuads(FoleError):
    pass


class ParseError(FoleError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ValidationError(FoleError):
    pass


class InvalidEndpoint(InvalidStructure):
    pass
