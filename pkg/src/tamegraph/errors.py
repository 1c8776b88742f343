"""Exception hierarchy shared by all modules."""


class GraphInputError(ValueError):
    """Malformed graph, vertex set or argument."""


class ParseError(GraphInputError):
    """A graph document could not be decoded."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OracleLimitError(GraphInputError):
    """A brute-force oracle was asked to scan a graph above its size limit."""


class BoundViolationError(RuntimeError):
    """A structural bound that must hold for the given clique bound was exceeded."""


class LemmaViolationError(RuntimeError):
    """A structural guarantee failed; the input does not satisfy its hypothesis.

    ``certificate`` holds whatever concrete objects demonstrate the failure.
    """

    def __init__(self, message, **certificate):
        self.certificate = certificate
        super().__init__(message)
