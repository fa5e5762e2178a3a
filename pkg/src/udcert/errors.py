"""Exception types raised across the package."""


class UdcertError(Exception):
    """Base class for all package-specific errors."""


class ContractError(UdcertError, ValueError):
    """An argument violates an operation precondition (dims, ranges, finiteness)."""


class FormatError(ContractError):
    """Malformed Pauli label or observable payload."""


class DegenerateParameterError(ContractError):
    """Variational parameters collapse to an unusable point (zero eigenvalue vector)."""


class SchemeLoadError(UdcertError):
    """A scheme file failed to parse or validate; message names the offending index."""


class SearchPreconditionError(UdcertError):
    """The initial scheme handed to the shrinking search does not certify."""


class UndefinedAlphaError(UdcertError):
    """Stability coefficient has a zero denominator (noiseless exact recovery)."""


class MissingDeltaError(UdcertError):
    """A certification decided via the kernel shortcut carries no optimizer state."""
