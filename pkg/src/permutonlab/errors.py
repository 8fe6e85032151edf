"""Exception types shared across the package.

The split mirrors the CLI exit-code contract: input errors (malformed text,
bad files) exit 2, precondition errors (structurally valid input that the
operation cannot accept, e.g. a pattern longer than the permutation) exit 3.
"""


class InputError(ValueError):
    """Malformed input: unparseable text, invalid values, bad file content."""


class PreconditionError(ValueError):
    """Valid input that violates an operation's precondition."""


class BoundaryError(PreconditionError):
    """A fiber was requested at a piece/cell boundary (a null-set x).

    Raised instead of silently adopting a left/right convention so the
    caller decides how to resolve the ambiguity.
    """
