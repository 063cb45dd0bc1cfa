"""Exception hierarchy shared by the engine and the command line."""


class TightClosureError(Exception):
    """Base class for every error raised by this package."""


class ParseError(TightClosureError, ValueError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")


class FieldMismatchError(TightClosureError, TypeError):
    pass


class NonHomogeneousError(TightClosureError, ValueError):
    pass


class ResourceExhaustedError(TightClosureError):
    """A configured computation cap (pair queue, denominator search) was hit."""


class NotPrimaryError(TightClosureError):
    pass


class NotARelationError(TightClosureError, ValueError):
    pass


class BasisNotFreeError(TightClosureError):
    pass


class SingularCurveError(TightClosureError):
    pass


class NoMonicCoordinateError(TightClosureError):
    pass


class SplittingNotEstablishedError(TightClosureError):
    pass
