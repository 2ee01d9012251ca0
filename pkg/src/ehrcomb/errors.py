"""Exception types raised across the package."""


class EhrcombError(ValueError):
    """Base class for all domain errors."""


class DuplicateNode(EhrcombError):
    pass


class NegativeDegree(EhrcombError):
    pass


class NegativeIndex(EhrcombError):
    pass


class IndexTooSmall(EhrcombError):
    pass


class EmptyWord(EhrcombError):
    pass


class IncompatibleUniformity(EhrcombError):
    pass


class NotUniform(EhrcombError):
    pass


class InvalidPoset(EhrcombError):
    pass


class InvalidLabeling(EhrcombError):
    pass


class NonIntegral(EhrcombError):
    pass


class ZeroDimension(EhrcombError):
    pass


class BadHZero(EhrcombError):
    pass


class SizeExceeded(EhrcombError):
    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap} (use --unsafe-cap to override)")
        self.size = size
        self.cap = cap


class ParseError(EhrcombError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos
