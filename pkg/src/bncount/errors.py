class PreconditionError(ValueError):
    """Raised when an input violates an operation's precondition.

    The message is a single line naming the violated condition; the CLI
    prints it verbatim and exits with status 2.
    """
