"""
Exceptions raised by PyLocus.
DomainError: the inputs are well-formed but the algorithm cannot produce an answer (exit code 1 in the drivers).
InputError: a file, row, or config value is malformed (exit code 2 in the drivers).
Both derive from ValueError.
"""


class LocusError(ValueError):
    pass


class DomainError(LocusError):
    pass


class InputError(LocusError):
    pass


# ------------ DOMAIN ERRORS -------------- #

class InvalidPosition(DomainError):
    pass


class DuplicateAnchor(DomainError):
    pass


class UnknownAnchor(DomainError):
    pass


class TooFewSamples(DomainError):
    pass


class NonPositiveDistance(DomainError):
    pass


class NonPositiveExponent(DomainError):
    pass


class ModelOutOfRange(DomainError):
    pass


class EmptySequence(DomainError):
    pass


class TooFewAnchors(DomainError):
    pass


class DegenerateGeometry(DomainError):
    pass


class DuplicatePosition(DomainError):
    pass


class EmptySurvey(DomainError):
    pass


class NoCommonAnchors(DomainError):
    pass


class InsufficientMatches(DomainError):
    pass


class EmptyList(DomainError):
    pass


class EmptyTestSet(DomainError):
    pass


class EmptySeries(DomainError):
    pass


class MissingPositionLabel(DomainError):
    pass


# ------------ INPUT ERRORS -------------- #

class RowError(InputError):
    """An input error tied to a line of a text file (1-based, header is line 1)."""
    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = "%s (line %d)" % (message, line_no)
        super().__init__(message)


class InvalidRssi(RowError):
    pass


class MalformedRow(RowError):
    pass


class UnknownColumns(RowError):
    pass


class DatabaseFormatError(RowError):
    pass


class ConfigInvalid(InputError):
    pass


class InvalidAnchorId(InputError):
    pass
