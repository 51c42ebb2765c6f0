"""plotkit: render radar-information experiment CSVs as figures."""

__version__ = "0.1.0"

from .errors import PlotkitError, SchemaError
from .figures import KINDS, FigureJob, render

__all__ = ["PlotkitError", "SchemaError", "KINDS", "FigureJob", "render",
           "__version__"]
