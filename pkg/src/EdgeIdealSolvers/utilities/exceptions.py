from typing import Optional


class ParameterError(ValueError):
    """Invalid arguments: family parameters, ambient mismatch, unknown check id, bad field."""


class DomainError(ValueError):
    """The operation is not defined for this ideal (zero or unit where a proper nonzero ideal is required)."""


class CapabilityError(RuntimeError):
    """Request is well-formed but beyond what this tool does (e.g. enumeration of graphs with more than 6 vertices)."""


class GraphParseError(ValueError):
    """
    Malformed graph input. graph6 errors carry the byte offset, edge list errors the (1-based) line number.
    """
    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        elif line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
