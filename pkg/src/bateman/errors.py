"""
Exceptions raised by the bateman package.
"""


class BatemanError(Exception):
    pass


class QuadratureError(BatemanError):
    pass


class InvalidBoundsError(QuadratureError):
    pass


class OmegaZeroError(QuadratureError):
    pass


class NoPrincipalValueError(QuadratureError):
    pass


class UnstableDerivativeError(QuadratureError):
    pass


class DivergentIntegralError(QuadratureError):
    pass


class NonConvergedError(QuadratureError):
    """Raised by `EvalResult.check()` for a result whose error estimate missed its tolerance."""


class DomainError(BatemanError, ValueError):
    pass


class PoleError(DomainError):
    pass


class SingularError(DomainError):
    pass


class ParameterPoleError(DomainError):
    pass


class UnsupportedError(BatemanError, NotImplementedError):
    pass


class UnsupportedOrderError(UnsupportedError):
    pass


class UnsupportedPairError(UnsupportedError):
    pass


class UnknownIdError(BatemanError, KeyError):
    pass


class ConfigError(BatemanError, ValueError):
    pass
