"""Bessel functions of complex order, and Neumann series of Bessel
functions, through Fourier-type trigonometric integral representations,
cross-validated against independent power-series evaluations.

The integral kernel couples three ingredients that the subpackages keep
separate: branch-aware order decomposition (:mod:`.orders`), the
incomplete-gamma family in Tricomi's entire form (:mod:`.gammafn`), and
endpoint-aware quadrature (:mod:`.quadrature`).  On top of those sit the
Gegenbauer representations (:mod:`.gegenbauer`), the Bessel routes
(:mod:`.bessel`), the classical expansions recovered by Fourier inversion
(:mod:`.expansions`), and the Neumann-series engine with its Lommel and
Kelvin instances (:mod:`.neumann`).  ``python -m besselfourier.cli`` or
the ``besselfourier`` script expose evaluation, cross-method comparison
and benchmarking.
"""

__version__ = "0.1.0"

from .errors import (
    BesselFourierError,
    ConvergenceError,
    DivergenceError,
    DomainError,
    IntegrandError,
    PoleError,
    RangeError,
    UnsupportedError,
)
from .orders import ComplexOrder, decompose_order, i_power, principal_power, sign
from .summation import SeriesEvaluation, sum_adaptive
from .gammafn import (
    GammaValue,
    P_recurrence_shift,
    gamma_fn,
    lower_incomplete_gamma,
    reciprocal_gamma,
    regularized_P,
    regularized_P_eval,
    tricomi_evaluator,
    tricomi_gamma_star,
    tricomi_gamma_star_series,
)
from .quadrature import (
    QuadratureResult,
    QuadratureSpec,
    Singularity,
    fresnel_F,
    integrate,
    integrate_fourier_coefficient,
    integrate_periodic,
    left_endpoint,
    right_endpoint,
)
from .gegenbauer import (
    chebyshev_t,
    gegenbauer_integral_arc,
    gegenbauer_integral_vilenkin,
    gegenbauer_recurrence,
    h_norm,
)
from .bessel import (
    BesselEval,
    bessel_i_connection,
    bessel_i_integral,
    bessel_j_classical,
    bessel_j_integral,
    bessel_j_series,
    evaluate_j,
    frakJ_fourier_coefficient,
    kernel_frakJ,
    spherical_j,
)
from .expansions import (
    ExpansionResult,
    erf_bessel_alternating,
    erf_bessel_general,
    erf_bessel_sum,
    erf_maclaurin,
    erfgamma_sine_form,
    fresnel_bessel,
    incgamma_half_expansion,
    inv3_reconstruction,
    jacobi_anger,
    modified_i,
)
from .neumann import (
    CoefficientSequence,
    NeumannKernelParams,
    delta_sequence,
    evaluate_neumann,
    geometric_sequence,
    kelvin_ber_bei,
    kelvin_sequence,
    lommel_sequence,
    lommel_u,
    lommel_v,
    neumann_direct,
    neumann_integral,
    neumann_integral_halfrange,
    neumann_kernel_K,
    sequence_from_name,
)

__all__ = [name for name in dir() if not name.startswith("_")]
