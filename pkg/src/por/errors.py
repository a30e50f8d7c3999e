"""Exception hierarchy shared across the package."""


class PorError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInput(PorError):
    pass


class SourceExhausted(PorError):
    pass


class IoFailure(PorError):
    pass


class PoolTooShort(PorError):
    pass


class BlockLenInvalid(PorError):
    pass


class IndivisiblePool(PorError):
    pass


class EmptyPieces(PorError):
    pass


class ClockInvariantViolated(PorError):
    pass


class EmptyRound(PorError):
    pass


class DuplicateNode(PorError):
    pass


class MixedRounds(PorError):
    pass


class NoValidContributions(PorError):
    pass


class RevealMismatch(PorError):
    pass


class HeightMismatch(PorError):
    pass


class ParseFailure(PorError):
    """Malformed chain/key/config file. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class ConfigInvalid(PorError):
    pass


class GateFailed(PorError):
    pass


class DegenerateInput(PorError):
    pass


class PointNotOnCurve(PorError):
    pass


class MessageTooLong(PorError):
    pass


class EncodingFailed(PorError):
    pass


class KeyLengthMismatch(PorError):
    pass
