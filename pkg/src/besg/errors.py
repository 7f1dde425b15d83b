"""Shared exception types. CLI exit codes: 2 for parse/input errors, 3 for
violated operation preconditions."""


class BesgError(Exception):
    pass


class ParseError(BesgError):
    def __init__(self, msg, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}" + (f", col {col}" if col is not None else "")
            where = f" ({where})"
        super().__init__(f"{msg}{where}")


class PreconditionError(BesgError):
    pass
