"""Base exception hierarchy.

Every failure the library reports carries a stable kebab-case ``code``; the
command line prints it as ``ERROR <code>: <message>``.
"""


class GraphVolError(Exception):
    """Base exception for domain errors."""

    code: str = "error"

    def __init__(
        self,
        message: str,
        code: str | None = None,
        original_error: Exception | None = None,
    ):
        """Initialize domain error."""
        self.message = message
        if code is not None:
            self.code = code
        self.original_error = original_error
        super().__init__(f"[{self.code}] {message}")
