"""Exception hierarchy shared by the library and the command line front end."""


class QccError(Exception):
    """Base class for every error raised by qcweights."""

    exit_code = 1


class InvalidInputError(QccError, ValueError):
    """Arguments violate a documented precondition."""


class DomainError(QccError, ArithmeticError):
    """A mathematically undefined operation, e.g. division by zero."""


class InternalError(QccError, RuntimeError):
    """An invariant that should hold by construction was violated."""


class EnumerationLimitError(QccError):
    """The code has more codewords than the configured enumeration limit."""

    exit_code = 2

    def __init__(self, size: int, limit: int):
        super().__init__(f"code has {size} codewords, enumeration limit is {limit}")
        self.size = size
        self.limit = limit


class GroupNotApplicableError(QccError):
    """The requested automorphism group does not act on the code."""

    exit_code = 3


class TheoremNotApplicableError(QccError):
    """A closed-form count was requested for data outside its hypotheses."""


class ConfigSyntaxError(InvalidInputError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
