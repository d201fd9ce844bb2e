"""Exception hierarchy shared by all nnfcodes modules."""


class NnfCodesError(Exception):
    """Base class for every error raised by this package."""


class IntegerOverflow(NnfCodesError, ArithmeticError):
    """A checked 64-bit integer operation would have wrapped around."""

    def __init__(self, message: str = "signed 64-bit overflow", phase: str | None = None):
        self.phase = phase
        if phase:
            message = f"{message} (during {phase})"
        super().__init__(message)


class InvalidVariableSet(NnfCodesError, ValueError):
    pass


class RaggedInput(NnfCodesError, ValueError):
    pass


class EmptyInput(NnfCodesError, ValueError):
    pass


class NotPowerOfTwo(NnfCodesError, ValueError):
    pass


class NotBoolean(NnfCodesError, ValueError):
    pass


class TooFewWords(NnfCodesError, ValueError):
    pass


class EmptyAfterExclusion(NnfCodesError, ValueError):
    pass


class KTooLarge(NnfCodesError, ValueError):
    pass


class ParseError(NnfCodesError, ValueError):
    pass
