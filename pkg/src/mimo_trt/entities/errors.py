class TrtError(Exception):
    """Base exception for throughput-reliability tradeoff failures."""


class InvalidArgumentError(TrtError, ValueError):
    """Raised when an operation is called outside its preconditions."""


class InsufficientDataError(TrtError):
    """Raised when a measured curve does not carry enough usable points."""


class ResultParseError(TrtError):
    """Raised when a result table row cannot be parsed.

    Attributes:
        line_number: 1-based line of the offending row (the header is line 1).
    """

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
