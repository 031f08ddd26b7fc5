"""Exception types raised across the package."""


class TwinfluxError(Exception):
    """Base class for all package errors."""


class OutOfTransparencyRange(TwinfluxError):
    """Wavelength outside the declared validity range of a dispersion fit."""


class InvalidGeometry(TwinfluxError):
    """Non-positive surface or mode section."""


class NegativeIntensity(TwinfluxError):
    """Pump intensity below zero."""


class NoRootInBracket(TwinfluxError):
    """Phase mismatch has no sign change inside the search bracket."""


class MultipleRootsInBracket(TwinfluxError):
    """More than one sign change in the bracket; configuration is suspect."""


class MaxIterationsExceeded(TwinfluxError):
    """Root solver did not converge within the iteration cap."""


class DegenerateAcceptance(TwinfluxError):
    """Acceptance slope is zero; spectral acceptance formally infinite."""


class DegenerateGroupIndices(TwinfluxError):
    """Signal and idler group indices coincide; linear branch singular."""


class WrongRegime(TwinfluxError):
    """Asymptotic branch evaluated outside its regime of validity."""


class QuadratureNotConverged(TwinfluxError):
    """Spectral integration did not reach the requested relative tolerance."""


class StepCountTooSmall(TwinfluxError):
    """ODE step-halving check exceeded the convergence tolerance."""


class ParseError(TwinfluxError):
    """Configuration or crystal file could not be parsed."""


class ValidationError(TwinfluxError):
    """A configuration value is missing, unknown, or out of range."""

    def __init__(self, key: str, message: str = ""):
        self.key = key
        super().__init__(f"{key}: {message}" if message else key)


class MissingModel(TwinfluxError):
    """A reference row names a model that was not computed."""
