"""Dense circuit simulation and decomposition verification.

``circuit_matrix`` folds gates into an identity matrix one at a time.  Each
gate touches only row pairs whose indices satisfy the controls and differ in
the target bit, so application is a vectorized 2x2 update over the selected
rows; X and FCX are exact row swaps with no float arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, Gate, GateKind, r1_matrix, ry_matrix, rz_matrix
from .matrix import DimensionError


def gate_block(gate: Gate) -> np.ndarray:
    """The 2x2 matrix a gate applies on its target pair."""
    if gate.kind in (GateKind.X, GateKind.FCX):
        return np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
    if gate.kind is GateKind.FCRY:
        return ry_matrix(gate.angle)
    if gate.kind is GateKind.FCRZ:
        return rz_matrix(gate.angle)
    return r1_matrix(gate.angle)


def _selected_rows(gate: Gate, dim: int) -> np.ndarray:
    """Row indices with target bit 0 and every control bit 1."""
    idx = np.arange(dim)
    mask = (idx >> gate.target) & 1 == 0
    for q in gate.controls:
        mask &= (idx >> q) & 1 == 1
    return idx[mask]


def _apply_gate(m: np.ndarray, gate: Gate) -> None:
    s0 = _selected_rows(gate, m.shape[0])
    s1 = s0 | (1 << gate.target)
    # fancy indexing copies, so reads below are safe against the writes
    if gate.kind in (GateKind.X, GateKind.FCX):
        low = m[s0]
        m[s0] = m[s1]
        m[s1] = low
        return
    block = gate_block(gate)
    low = m[s0]
    high = m[s1]
    m[s0] = block[0, 0] * low + block[0, 1] * high
    m[s1] = block[1, 0] * low + block[1, 1] * high


def gate_matrix(gate: Gate, n: int) -> np.ndarray:
    """Full 2**n matrix of a single gate."""
    Circuit(n, (gate,))  # bounds-check the gate's qubits against n
    m = np.eye(1 << n, dtype=np.complex128)
    _apply_gate(m, gate)
    return m


def circuit_matrix(circuit: Circuit) -> np.ndarray:
    """Full matrix of a circuit, gates applied in list order."""
    m = np.eye(1 << circuit.n, dtype=np.complex128)
    for gate in circuit.gates:
        _apply_gate(m, gate)
    return m


def default_verification_tol(n: int) -> float:
    """Frobenius tolerance for verification: 1e-8 up to n=6, 1e-6 beyond."""
    return 1e-8 if n <= 6 else 1e-6


@dataclass(frozen=True)
class VerificationReport:
    """Distance between a target unitary and a circuit's matrix."""

    passed: bool
    frobenius_error: float
    max_abs_entry_error: float
    gate_count: int


def verify(
    matrix: np.ndarray, circuit: Circuit, tol: float | None = None
) -> VerificationReport:
    """Compare a circuit against a target matrix by dense simulation.

    Args:
        matrix: target, must be ``2**circuit.n`` on a side.
        tol: Frobenius pass threshold (default scales with ``circuit.n``).
    """
    target = np.asarray(matrix, dtype=np.complex128)
    dim = 1 << circuit.n
    if target.shape != (dim, dim):
        raise DimensionError(
            f"matrix shape {target.shape} does not match a {circuit.n}-qubit circuit"
        )
    if tol is None:
        tol = default_verification_tol(circuit.n)
    diff = circuit_matrix(circuit) - target
    frobenius = float(np.linalg.norm(diff))
    max_abs = float(np.abs(diff).max())
    return VerificationReport(
        passed=frobenius <= tol,
        frobenius_error=frobenius,
        max_abs_entry_error=max_abs,
        gate_count=len(circuit.gates),
    )
