"""Exception types shared by the library and mapped to CLI exit codes."""


class PreconditionError(ValueError):
    """Input is well-formed but violates an operation's precondition."""


class TheoremViolation(AssertionError):
    """A computed quantity contradicts a proven identity; indicates a bug."""
