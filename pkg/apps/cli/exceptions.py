from apps.ratlinalg.exceptions import PJJError


class FormatError(PJJError):
    """Malformed input file; `line` is the 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f'line {line}: {message}' if line else message)


class ParseError(FormatError):
    pass


class DuplicateEntry(ParseError):
    pass


class IndexOutOfRange(ParseError):
    pass


class ZeroDenominator(ParseError):
    pass
