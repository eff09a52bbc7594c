"""Exception hierarchy shared across the package."""


class WavefeatError(Exception):
    """Base class for all package-specific errors."""


class InvalidInputError(WavefeatError, ValueError):
    """Raised when operation inputs violate a documented precondition."""


class UnsupportedWaveletError(InvalidInputError):
    """Raised when a (family, order) pair is not in the filter registry."""


class InvalidConfigError(WavefeatError, ValueError):
    """Raised for inconsistent pipeline / grid configurations."""


class DataFormatError(WavefeatError, ValueError):
    """Base class for dataset ingestion problems."""


class ParseError(DataFormatError):
    """Dataset file could not be parsed."""


class GridMismatchError(DataFormatError):
    """Samples in a dataset do not share one wavenumber grid."""


class MissingLabelError(DataFormatError):
    """Dataset rows lack class labels."""


class NumericalError(WavefeatError, RuntimeError):
    """A numerical routine failed to produce a usable result."""
