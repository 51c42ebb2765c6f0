"""Errors raised by plotkit."""


class PlotkitError(Exception):
    """Base class for plotkit failures."""


class SchemaError(PlotkitError):
    """A CSV input is missing, empty, or has the wrong columns."""
