"""Error types shared by every module.

Both derive from ValueError so callers who don't care about the split can
catch one thing.  The CLI maps ParseError to exit code 2 and DomainError to
exit code 1.
"""


class ParseError(ValueError):
    """A text literal could not be parsed."""


class DomainError(ValueError):
    """A well-formed input violates an operation's preconditions."""
