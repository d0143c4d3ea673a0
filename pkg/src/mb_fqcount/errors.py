"""Application error type shared by every layer."""


class FqCountError(Exception):
    """Application-level error carrying a machine-readable code."""

    def __init__(self, code: str, message: str) -> None:
        """Initialize with a machine-readable code and a human-readable message.

        Args:
            code: Machine-readable error code (e.g. "not_prime").
            message: Human-readable error description.

        """
        super().__init__(message)
        self.code = code
        self.message = message
