"""Exception hierarchy shared by every module in the package."""


class BtdistError(Exception):
    """Base class for all errors raised by this package."""


class InputError(BtdistError, ValueError):
    """Malformed input: a bad permutation word, invalid cut points, a corrupt table file."""


class PreconditionError(InputError):
    """Structurally valid input that lies outside the documented domain of an operation."""


class CapabilityError(BtdistError):
    """The request is well posed but beyond what this implementation computes."""


class ContractError(BtdistError):
    """An internal guarantee failed.  Indicates a bug, not a caller mistake."""


class VerificationError(BtdistError):
    """A certificate, suite or constructed object did not validate."""


class OracleRefutationError(VerificationError):
    """Brute-force recomputation contradicted a constructed result."""
