"""Error taxonomy shared by the engines and the CLI exit codes."""


class IdealParseError(Exception):
    """Malformed input file or flags (CLI exit 1)."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}" + (f", column {column}" if column else "") + f": {message}"
        super().__init__(message)


class HypothesisError(Exception):
    """A theorem hypothesis required by the requested computation fails (exit 2)."""


class GenericityError(Exception):
    """Randomized seed trials failed to agree (exit 3)."""


class OracleDisagreementError(Exception):
    """Two routes that must agree did not; a bug or a discovery (exit 4)."""
