"""Exception hierarchy shared by the library and the command line."""


class NetdualError(Exception):
    """Base class for errors raised by netdual."""


class ParseError(NetdualError, ValueError):
    """Malformed input file. Carries a 1-based line and column when known."""

    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
            if column is not None:
                where += f"{column}:"
        super().__init__(f"{where} {message}" if where else message)


class SizeLimitError(NetdualError):
    """A computation was refused because the input exceeds a size cap."""


class CrossCheckError(NetdualError):
    """Two independent computations of the same quantity disagree."""
