"""Exception types. Each carries a stable ``code`` used by the CLI."""


class BezoutLabError(Exception):
    @property
    def code(self) -> str:
        return type(self).__name__


class ParseError(BezoutLabError):
    pass


class NotPrime(BezoutLabError):
    pass


class RingMismatch(BezoutLabError):
    pass


class InfiniteRing(BezoutLabError):
    pass


class NotAUnit(BezoutLabError):
    pass


class NoSolution(BezoutLabError):
    pass


class NotCoprime(BezoutLabError):
    pass


class WitnessNotFound(BezoutLabError):
    pass


class NotInvertible(BezoutLabError):
    pass


class NotSupported(BezoutLabError):
    pass


class NotNeat(BezoutLabError):
    pass


class UnsupportedRing(BezoutLabError):
    pass


class PreconditionViolated(BezoutLabError):
    pass


class ConstructionFailed(BezoutLabError):
    pass


class BoundExceeded(BezoutLabError):
    pass


class CertificateMismatch(BezoutLabError):
    pass


ERROR_CODES = frozenset(
    cls.__name__
    for cls in (
        ParseError, NotPrime, RingMismatch, InfiniteRing, NotAUnit, NoSolution,
        NotCoprime, WitnessNotFound, NotInvertible, NotSupported, NotNeat,
        UnsupportedRing, PreconditionViolated, ConstructionFailed,
        BoundExceeded, CertificateMismatch,
    )
)
