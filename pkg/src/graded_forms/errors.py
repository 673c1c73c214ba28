"""Exception types shared by every module.

Each error carries a short machine-readable ``code`` that the CLI reports
verbatim in its ``{"error": code, "detail": ...}`` object.
"""


class GradedFormsError(Exception):
    code = "error"

    def __init__(self, detail, code=None):
        super().__init__(detail)
        self.detail = detail
        if code is not None:
            self.code = code


class PreconditionError(GradedFormsError, ValueError):
    code = "precondition"


class InsufficientPrecision(GradedFormsError):
    """Raised when a q-expansion or X-truncation is too short for a check."""

    code = "insufficient_precision"
