"""Exact distance-Laplacian and distance-signless-Laplacian spectra of joins
of regular graphs and generalized wheels, with integer-spectrum
classification cross-validated by a Jacobi eigensolver."""

from .closed_forms import (
    InvalidRegularPartError,
    RegularPart,
    adjacency_spectrum_complete,
    adjacency_spectrum_copies,
    adjacency_spectrum_cycle,
    complete_part,
    copies_part,
    cycle_part,
    dl_join_spectrum,
    dq_join_spectrum,
    gw_dl_spectrum,
    gw_dq_spectrum,
)
from .eigenvalues import (
    CosineTerm,
    Eigenvalue,
    IntegerValue,
    Spectrum,
    Surd,
    cosine_term,
    numeric_value,
    spectrum_of,
    surd,
)
from .graphs import (
    Graph,
    GraphNotConnectedError,
    MAX_ORDER,
    WheelParams,
    adjacency_matrix,
    complete,
    copies,
    cycle,
    distance_matrix,
    dl_matrix,
    dq_matrix,
    generalized_wheel,
    is_connected,
    join,
    regular_degree,
    transmission_matrix,
)
from .integrality import (
    FAMILY_LABEL,
    AlphaSolution,
    ClassificationResult,
    DqClassification,
    DqWitness,
    classify_all_dq,
    classify_gw1_dq,
    dq_discriminant,
    enumerate_alpha_solutions,
    gcd,
    is_dq_integral,
    is_gw_dl_integral,
    is_join_dl_integral,
    is_perfect_square,
    isqrt,
    m_upper_bound,
    parity_check,
)
from .oracle import (
    ConvergenceError,
    MatchReport,
    NumericSpectrum,
    available_kernels,
    compare_spectra,
    default_kernel,
    eigenvalues_symmetric,
    numeric_is_integral,
)

__version__ = "0.1.0"
