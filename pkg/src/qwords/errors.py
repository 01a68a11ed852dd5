"""Exception types shared across the package."""


class QwordsError(Exception):
    """Base class for domain errors raised by this package."""


class AlphabetError(QwordsError):
    """A word contains symbols outside the expected alphabet."""


class ParseError(QwordsError):
    """A polynomial or word could not be parsed."""


class ReconstructionError(QwordsError):
    """Letter polynomials do not describe any word."""
