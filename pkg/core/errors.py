from typing import Optional


class TorsionError(Exception):
    """Base class for every error raised by the library."""

    code = "torsion-error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)
        self.message = message or self.code

    def __str__(self) -> str:
        return self.message


class UnknownGenerator(TorsionError):
    code = "unknown-generator"

    def __init__(self, token: str):
        super().__init__(f"unknown generator {token!r}")
        self.token = token


class SchemeMismatch(TorsionError):
    code = "scheme-mismatch"


class TrivialElement(TorsionError):
    code = "trivial-element"

    def __init__(self, message: str = "element is the identity"):
        super().__init__(message)


class NonpositiveBound(TorsionError):
    code = "nonpositive-bound"

    def __init__(self, bound: int):
        super().__init__(f"search bound must be positive, got {bound}")
        self.bound = bound


class NotParabolic(TorsionError):
    code = "not-parabolic"


class NotHyperbolic(TorsionError):
    code = "not-hyperbolic"


class NotElliptic(TorsionError):
    code = "not-elliptic"


class InvalidCertificate(TorsionError):
    code = "invalid-certificate"


class ParseError(TorsionError):
    code = "parse-error"

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InvalidInvariant(TorsionError):
    code = "invalid-invariant"


class UnsupportedBase(TorsionError):
    code = "unsupported-base"


class UnknownSuite(TorsionError):
    code = "unknown-suite"

    def __init__(self, suite: str):
        super().__init__(f"unknown sweep suite {suite!r}")
        self.suite = suite


class MalformedCertificate(TorsionError):
    code = "malformed-certificate"


class InternalInconsistency(TorsionError):
    """A certificate built by the library failed its own re-validation."""

    code = "internal-inconsistency"
