"""Exception hierarchy shared by all semdiff modules."""


class SemdiffError(Exception):
    """Base class for all semdiff errors."""


class DimensionMismatch(SemdiffError):
    pass


class NonFiniteInput(SemdiffError):
    pass


class EmptyTrainingSet(SemdiffError):
    pass


class EmptyModel(SemdiffError):
    pass


class LengthMismatch(SemdiffError):
    pass


class UnknownLabel(SemdiffError):
    pass


class EmptyMatrix(SemdiffError):
    pass


class EmptyRuns(SemdiffError):
    pass


class LabelSetMismatch(SemdiffError):
    pass


class InsufficientClassSize(SemdiffError):
    pass


class ParseError(SemdiffError):
    """Malformed input file; message carries the line number where known."""


class DuplicateId(SemdiffError):
    pass


class MissingClass(SemdiffError):
    pass


class InvariantViolation(SemdiffError):
    pass
