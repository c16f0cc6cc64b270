"""Discrete Weyl-Wigner transforms on odd-prime-dimensional Hilbert spaces.

The package builds the c-parametrized family of phase-space representations:
prime-field coordinates, clock/shift operators, the N+1 mutually unbiased
bases, line geometry in the b-m plane, line operators, forward and inverse
transforms, Radon marginals, and a MUB-tomography pipeline.
"""

from .errors import (
    CompositeDimensionError,
    DimensionMismatchError,
    FileFormatError,
    IdenticalLinesError,
    InvalidDensityMatrixError,
    MixedParametersError,
    ModulusMismatchError,
    NonHermitianInputError,
    NonUnitaryInputError,
    UnknownBasisError,
    UnsupportedDimensionError,
    WrongBasisKindError,
    ZeroInverseError,
)
from .gf import GfElement, check_dimension, gf, half
from .lines import (
    Line,
    PhaseParam,
    PhasePoint,
    enumerate_lines,
    line_intersection,
    line_points,
    line_value,
    phase_param,
    phase_point,
)
from .mub import (
    BasisLabel,
    MubState,
    all_basis_labels,
    basis_kets,
    eigen_check,
    mub_state,
    overlap_magnitude_sq,
    parse_basis_label,
    reference_basis,
    xz_basis,
)
from .schwinger import (
    SchwingerPair,
    build_schwinger,
    momentum_ket,
    momentum_op,
    op_power,
    position_op,
)
from .tomography import (
    MeasurementRecord,
    check_density_matrix,
    reconstruct,
    sample_probs,
    simulate_probs,
    wigner_from_probs,
)
from .wigner import (
    LineOperator,
    WignerTable,
    inverse_wwt,
    line_operator_closed,
    line_operator_mub,
    line_operator_stack,
    overlap,
    parity_op,
    radon,
    wwt_mub,
    wwt_schwinger,
    wwt_trace,
)
from .estimator import DiscreteWignerTransform, MubTomography, record_from_array

__version__ = "1.0.0"

__all__ = [
    "BasisLabel",
    "CompositeDimensionError",
    "DimensionMismatchError",
    "DiscreteWignerTransform",
    "FileFormatError",
    "GfElement",
    "IdenticalLinesError",
    "InvalidDensityMatrixError",
    "Line",
    "LineOperator",
    "MeasurementRecord",
    "MixedParametersError",
    "ModulusMismatchError",
    "MubState",
    "MubTomography",
    "NonHermitianInputError",
    "NonUnitaryInputError",
    "PhaseParam",
    "PhasePoint",
    "SchwingerPair",
    "UnknownBasisError",
    "UnsupportedDimensionError",
    "WignerTable",
    "WrongBasisKindError",
    "ZeroInverseError",
    "all_basis_labels",
    "basis_kets",
    "build_schwinger",
    "check_density_matrix",
    "check_dimension",
    "eigen_check",
    "enumerate_lines",
    "gf",
    "half",
    "inverse_wwt",
    "line_intersection",
    "line_operator_closed",
    "line_operator_mub",
    "line_operator_stack",
    "line_points",
    "line_value",
    "momentum_ket",
    "momentum_op",
    "mub_state",
    "op_power",
    "overlap",
    "overlap_magnitude_sq",
    "parity_op",
    "parse_basis_label",
    "phase_param",
    "phase_point",
    "position_op",
    "radon",
    "reconstruct",
    "record_from_array",
    "reference_basis",
    "sample_probs",
    "simulate_probs",
    "wigner_from_probs",
    "wwt_mub",
    "wwt_schwinger",
    "wwt_trace",
    "xz_basis",
]
