"""Exception hierarchy.

Every error raised on bad input derives from :class:`P1StabError`, which is
a :class:`ValueError`; the CLI maps it to exit code 2.
"""


class P1StabError(ValueError):
    pass


class ParseError(P1StabError):
    """Malformed object literal. ``pos`` is the 0-based offending offset."""

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}")


class InvalidConditionError(P1StabError):
    pass


class NotSemistableError(P1StabError):
    pass


class RegimeError(P1StabError):
    """Operation undefined in the condition's regime."""


class NotNormalizedError(P1StabError):
    pass


class PoleError(P1StabError):
    pass
