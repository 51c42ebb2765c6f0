"""Range-Doppler information and Doppler scattering information for
multipulse radar measurements."""

__version__ = "0.1.0"

from .errors import ConfigurationError, ModelError, NumericalError, RadInfoError
from .sigmodel import (PulseTrainConfig, SpreadConstants, ambiguity,
                       spread_constants, steering_vector)
from .posterior import (NoiseSpec, PosteriorGrid, PriorRect, posterior_entropy,
                        posterior_grid, synth_received)
from .infometrics import (EEResult, InfoEstimate, doppler_info_bound, ee_split,
                          entropy_error, mi_monte_carlo, mi_upper_bound,
                          range_info_bound)
from .scatterinfo import (CorrelationMatrix, EigenSpectrum, ScatteringModel,
                          autocorr, build_correlation_matrix,
                          hermitian_eigenvalues, scattering_info,
                          scattering_info_rate)

__all__ = [name for name in dir() if not name.startswith("_")]
