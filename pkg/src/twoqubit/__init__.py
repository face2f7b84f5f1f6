"""Exact synthesis of two-qubit unitaries into ry/rz/cnot circuits.

Three backends turn an arbitrary 4x4 unitary into an explicit gate list
with a tracked global phase: a four-cnot canonical form, a Givens
elimination, and an entangler sandwich that keeps the diagonal core
visible. Supporting pieces (the linear algebra kernels, single-line
Euler factorization, diagonal circuits, text serialization) are public
as well.
"""

from .diag import split_diag_tensor, synth_diag, tensor_invariant
from .errors import (
    CircuitFormatError,
    DecompositionFailed,
    DetMismatch,
    FormatError,
    MatrixFormatError,
    NonCommutingInput,
    NonSymmetricInput,
    NotSpecialOrthogonal,
    NotSymmetricUnitary,
    NotTensorDecomposable,
    NotTensorSplittable,
    NotUnitary,
    SynthesisError,
)
from .gates import (
    Circuit,
    Gate,
    GateCounts,
    SynthesisReport,
    build_report,
    cnot,
    concat,
    count_gates,
    eval_circuit,
    gate_matrix,
    phase_distance,
    rotation_y,
    rotation_z,
    ry,
    rz,
    simplify,
)
from .kak import KakFactors, kak_decompose, synth_kak, synth_sandwich
from .magic import (
    disentangler_circuit,
    disentangler_matrix,
    entangler_circuit,
    entangler_matrix,
    magic_conjugate,
    so4_to_tensor,
)
from .matcore import (
    det4,
    haar_special_orthogonal,
    haar_unitary,
    is_special_orthogonal,
    is_unitary,
    jacobi_eigen_sym4,
    joint_diag_commuting,
    spectral_symmetric_unitary,
    sqrt_with_det,
    unitary_polar,
)
from .qr import GivensStep, givens_to_gates, qr_reduce, synth_qr
from .su2 import (
    ZyzAngles,
    controlled_v_gates,
    one_qubit_gates,
    zyz_decompose,
    zyz_matrix,
    zyz_to_gates,
)
from .textio import format_circuit, format_matrix, parse_circuit, parse_matrix

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "CircuitFormatError",
    "DecompositionFailed",
    "DetMismatch",
    "FormatError",
    "Gate",
    "GateCounts",
    "GivensStep",
    "KakFactors",
    "MatrixFormatError",
    "NonCommutingInput",
    "NonSymmetricInput",
    "NotSpecialOrthogonal",
    "NotSymmetricUnitary",
    "NotTensorDecomposable",
    "NotTensorSplittable",
    "NotUnitary",
    "SynthesisError",
    "SynthesisReport",
    "ZyzAngles",
    "build_report",
    "cnot",
    "concat",
    "controlled_v_gates",
    "count_gates",
    "det4",
    "disentangler_circuit",
    "disentangler_matrix",
    "entangler_circuit",
    "entangler_matrix",
    "eval_circuit",
    "format_circuit",
    "format_matrix",
    "gate_matrix",
    "givens_to_gates",
    "haar_special_orthogonal",
    "haar_unitary",
    "is_special_orthogonal",
    "is_unitary",
    "jacobi_eigen_sym4",
    "joint_diag_commuting",
    "kak_decompose",
    "magic_conjugate",
    "one_qubit_gates",
    "parse_circuit",
    "parse_matrix",
    "phase_distance",
    "qr_reduce",
    "rotation_y",
    "rotation_z",
    "ry",
    "rz",
    "simplify",
    "so4_to_tensor",
    "spectral_symmetric_unitary",
    "split_diag_tensor",
    "sqrt_with_det",
    "synth_diag",
    "synth_kak",
    "synth_qr",
    "synth_sandwich",
    "unitary_polar",
    "zyz_decompose",
    "zyz_matrix",
    "zyz_to_gates",
]
