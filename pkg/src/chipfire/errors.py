"""Exception types shared across the package."""


class ChipfireError(Exception):
    """Base class for all errors raised by chipfire."""


class InputError(ChipfireError, ValueError):
    """Malformed or out-of-contract input (bad vertex, bad file, bad matrix)."""


class NotConnectedError(ChipfireError):
    """A group-level operation was asked about a disconnected graph."""


class SizeError(ChipfireError):
    """Input exceeds the admissible size of a brute-force operation."""
