"""Exception types shared across the package."""


class UnsupportedSizeError(ValueError):
    """Input exceeds a size cap (pattern too large, search regime exceeded)."""


class CapExceededError(RuntimeError):
    """A resource cap was hit (e.g. too many maximal cliques to enumerate)."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug or a violated hypothesis."""
