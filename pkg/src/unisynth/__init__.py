"""Compile arbitrary unitaries into X gates and fully-controlled rotations."""

from .circuit import (
    Circuit,
    Gate,
    GateKind,
    ZYZAngles,
    matrix_to_circuit,
    normalize_angle,
    r1_matrix,
    ry_matrix,
    rz_matrix,
    two_level_to_gates,
    zyz_decompose,
    zyz_reconstruct,
)
from .emitters import (
    CircuitFormatError,
    emit_json,
    emit_qasm3,
    emit_qsharp,
    parse_json,
)
from .matrix import (
    DimensionError,
    MatrixFormatError,
    UnitarityError,
    haar_random_unitary,
    is_unitary,
    ket_string,
    load_matrix,
    num_qubits,
    parse_ket,
    save_matrix,
    validate_unitary,
)
from .optimizer import cancel_x_pairs, drop_identity_gates, optimize
from .simulator import (
    VerificationReport,
    circuit_matrix,
    gate_block,
    gate_matrix,
    verify,
)
from .twolevel import (
    TwoLevelUnitary,
    eliminate_entry,
    gray_code,
    gray_conjugate,
    gray_permutation,
    reconstruct_matrix,
    two_level_decompose,
)
from .cli import GateCensus, census

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "CircuitFormatError",
    "DimensionError",
    "Gate",
    "GateCensus",
    "GateKind",
    "MatrixFormatError",
    "TwoLevelUnitary",
    "UnitarityError",
    "VerificationReport",
    "ZYZAngles",
    "cancel_x_pairs",
    "census",
    "circuit_matrix",
    "drop_identity_gates",
    "eliminate_entry",
    "emit_json",
    "emit_qasm3",
    "emit_qsharp",
    "gate_block",
    "gate_matrix",
    "gray_code",
    "gray_conjugate",
    "gray_permutation",
    "haar_random_unitary",
    "is_unitary",
    "ket_string",
    "load_matrix",
    "matrix_to_circuit",
    "normalize_angle",
    "num_qubits",
    "optimize",
    "parse_json",
    "parse_ket",
    "r1_matrix",
    "reconstruct_matrix",
    "ry_matrix",
    "rz_matrix",
    "save_matrix",
    "two_level_decompose",
    "two_level_to_gates",
    "validate_unitary",
    "verify",
    "zyz_decompose",
    "zyz_reconstruct",
    "__version__",
]
