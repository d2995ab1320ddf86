"""Exception hierarchy shared by all binomlcm modules.

Three failure kinds are distinguished because callers react differently:
bad arguments are the caller's fault, cap overruns are a sizing problem,
and internal-consistency failures indicate a bug in this library itself
(two redundant computation paths disagreed where mathematics says they
cannot).
"""


class DomainError(ValueError):
    """An argument lies outside an operation's mathematical domain."""


class ResourceCapError(RuntimeError):
    """A request exceeds a configured resource cap (see binomlcm.caps)."""


class InternalConsistencyError(RuntimeError):
    """Two redundant internal computation paths disagreed.

    This is never expected; it means binomlcm itself is wrong, not the
    caller. Verification failures of the checked identities are reported
    as data (a report with holds == False), not via this exception.
    """
