"""Exception hierarchy shared by the library and the CLI."""


class ArrangementError(Exception):
    """Base class for all errors raised by arrenv."""


class NotSimpleError(ArrangementError):
    """An operation that needs a simple arrangement was given a degenerate one."""


class GuardrailError(ArrangementError):
    """Input size exceeds the interactive-size guardrails."""


class ParseError(ArrangementError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"{message} at line {line}" if line is not None else message)


class AuditError(ArrangementError):
    """A proven statement failed on a concrete arrangement; this indicates a bug."""
