"""Errors shared across the package.

Both are ValueError subclasses so library users who do not care about the
distinction can catch one thing.  The CLI and the HTTP service do care:
ParseError means the input text was malformed (exit code 2, HTTP 400),
DomainError means the input was well formed but outside the domain of the
requested operation (exit code 3, HTTP 422).
"""


class ParseError(ValueError):
    """Input text could not be parsed."""


class DomainError(ValueError):
    """Operation precondition violated by otherwise well-formed input."""
