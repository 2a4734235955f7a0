"""Exception types shared across the package."""


class BlocklabError(Exception):
    pass


class NotAGroup(BlocklabError):
    """A Cayley table failed one of the group axioms."""


class TooLarge(BlocklabError):
    """Element enumeration exceeded the configured cap."""


class NotNormal(BlocklabError):
    pass


class GroupFileError(BlocklabError):
    """Malformed group file (bad header, non-bijective generator, ...)."""


class GroupMismatch(BlocklabError):
    pass


class NotAlgebraicInteger(BlocklabError):
    pass


class NotIntegral(BlocklabError):
    pass


class NotPPowerRoot(BlocklabError):
    pass


class LiftFailure(BlocklabError):
    """Dixon lift produced an inconsistent table. Always a bug."""


class TheoremViolation(BlocklabError):
    """A classical theorem checked on concrete data came out false.

    Never expected; raised so that it cannot be silently ignored.
    """
