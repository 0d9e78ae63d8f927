class CoverError(ValueError):
    """Base class for errors raised by the toolkit."""


class CoincidentLinesError(CoverError):
    """Two lines that were expected to be distinct are proportional."""


class InvalidCharacterError(CoverError):
    """Character data failed validation against its arrangement."""

    def __init__(self, message: str, failures: list[str] | None = None):
        super().__init__(message)
        self.failures = failures or []


class ChartError(CoverError):
    """No usable affine chart, or a chart that puts a singular point at infinity."""


class UnsupportedInputError(CoverError):
    """Input outside the supported class (non-prime p, points of multiplicity >= 4, ...)."""


class InputFileError(CoverError):
    """Malformed arrangement or character file."""


class NumerologyError(CoverError):
    """Domain or integrality violation in a closed-form invariant."""
