"""Exception types carrying stable machine-readable reason codes.

Every error raised by the library has a kebab-case ``code`` that scripts can
match on, plus a human message. The CLI maps the three families to distinct
exit statuses (2 usage, 3 precondition, 4 verification failure).
"""


class FactorLangError(Exception):

    exit_status = 1

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code

    def __str__(self) -> str:
        return f"{self.code}: {self.args[0]}"


class WordSpecError(FactorLangError):
    """The word-spec string does not parse (a usage-level mistake)."""

    exit_status = 2


class PreconditionError(FactorLangError):
    """An operation was invoked outside its contract."""

    exit_status = 3


class VerificationError(FactorLangError):
    """A property the run was supposed to establish came out false."""

    exit_status = 4
