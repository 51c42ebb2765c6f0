"""Exception hierarchy shared across the package.

ConfigurationError maps to CLI exit code 2, NumericalError (and its
subclasses) to exit code 3.
"""


class RadInfoError(Exception):
    """Base class for all package errors."""


class ConfigurationError(RadInfoError):
    """Invalid configuration, parameters, or experiment spec."""


class NumericalError(RadInfoError):
    """A numerical routine failed to meet its contract."""


class ModelError(NumericalError):
    """A statistical model is inconsistent (e.g. non-PSD correlation)."""
