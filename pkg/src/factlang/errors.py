"""Exception hierarchy shared by every layer of the package."""


class FactlangError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetError(FactlangError):
    """A symbol is outside the session alphabet, or two operands carry
    different session alphabets."""


class ParseError(FactlangError):
    """Expression text could not be parsed.  Carries the 0-based offset of
    the offending character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EmptyLanguageError(FactlangError):
    """The empty language arrived where a nonempty one is required."""


class NotFactorialError(FactlangError):
    """A language that is not factor-closed arrived where a factorial
    language is required."""


class CanonicityError(FactlangError):
    """A decomposition that fails the minimality audit was passed where a
    canonical decomposition is required."""


class StateLimitError(FactlangError):
    """Determinization exceeded the configured state budget."""


class GenerationError(FactlangError):
    """Random language generation exhausted its retry budget."""
