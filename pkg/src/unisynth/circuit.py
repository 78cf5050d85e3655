"""Gate-level circuit representation and two-level-to-gate synthesis.

The gate set is single-qubit X plus fully-controlled Ry, Rz and R1 rotations
(and fully-controlled X as a special case).  Rotation conventions, chosen so
a two-level block factors with real rotation matrices in the middle:

    Ry(a) = [[cos(a/2),  sin(a/2)], [-sin(a/2), cos(a/2)]]
    Rz(a) = [[exp(i a/2), 0], [0, exp(-i a/2)]]
    R1(a) = [[1, 0], [0, exp(i a)]]

Angles are stored normalized: Ry/Rz to (-2*pi, 2*pi] (periodic modulo 4*pi)
and R1 to (-pi, pi] (periodic modulo 2*pi).

A two-level unitary on states (s1, s2) differing in bit r becomes a rotation
chain targeting qubit r, controlled on every other qubit, wrapped in X gates
on the qubits where s1 has a 0 bit so the controls all test for 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NamedTuple

import numpy as np

from .matrix import (
    DimensionError,
    UnitarityError,
    is_unitary,
    num_qubits,
    validate_unitary,
)
from .twolevel import X_BLOCK, TwoLevelUnitary, two_level_decompose

TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi

# Rotations with a normalized angle at or below this magnitude act as the
# identity and are dropped.
IDENTITY_ANGLE_TOL = 1e-12


class GateKind(str, Enum):
    X = "x"
    FCX = "fcx"
    FCRY = "fcry"
    FCRZ = "fcrz"
    FCR1 = "fcr1"


ROTATION_KINDS = frozenset({GateKind.FCRY, GateKind.FCRZ, GateKind.FCR1})


def normalize_angle(angle: float, period: float) -> float:
    """Map an angle into (-period/2, period/2]."""
    reduced = math.remainder(angle, period)
    if reduced == -period / 2.0:
        reduced = period / 2.0
    return reduced


def _angle_period(kind: GateKind) -> float:
    return TWO_PI if kind is GateKind.FCR1 else FOUR_PI


@dataclass(frozen=True)
class Gate:
    """One gate: a kind, a target qubit, sorted control qubits, an angle.

    X and FCX carry no angle; rotation kinds require one, normalized into
    the kind's canonical range at construction.
    """

    kind: GateKind
    target: int
    controls: tuple[int, ...] = ()
    angle: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", GateKind(self.kind))
        object.__setattr__(self, "target", int(self.target))
        if self.target < 0:
            raise ValueError(f"target must be nonnegative, got {self.target}")
        controls = tuple(sorted(int(q) for q in self.controls))
        if len(set(controls)) != len(controls):
            raise ValueError(f"duplicate control qubits: {controls}")
        if self.target in controls:
            raise ValueError(f"target {self.target} appears in controls")
        if any(q < 0 for q in controls):
            raise ValueError(f"control qubits must be nonnegative: {controls}")
        object.__setattr__(self, "controls", controls)
        if self.kind is GateKind.X and controls:
            raise ValueError("kind 'x' takes no controls; use 'fcx'")
        if self.kind in ROTATION_KINDS:
            if self.angle is None:
                raise ValueError(f"kind {self.kind.value!r} requires an angle")
            normalized = normalize_angle(float(self.angle), _angle_period(self.kind))
            object.__setattr__(self, "angle", normalized)
        elif self.angle is not None:
            raise ValueError(f"kind {self.kind.value!r} takes no angle")


@dataclass(frozen=True)
class Circuit:
    """An ordered gate sequence on ``n`` qubits; gates apply left to right."""

    n: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"qubit count must be positive, got {self.n}")
        gates = tuple(self.gates)
        for gate in gates:
            used = (gate.target, *gate.controls)
            if any(q >= self.n for q in used):
                raise ValueError(
                    f"gate touches qubit {max(used)} but circuit has n={self.n}"
                )
        object.__setattr__(self, "gates", gates)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)


def ry_matrix(angle: float) -> np.ndarray:
    half = angle / 2.0
    return np.array(
        [[math.cos(half), math.sin(half)], [-math.sin(half), math.cos(half)]],
        dtype=np.complex128,
    )


def rz_matrix(angle: float) -> np.ndarray:
    half = angle / 2.0
    return np.array(
        [[cmath.exp(1j * half), 0.0], [0.0, cmath.exp(-1j * half)]],
        dtype=np.complex128,
    )


def r1_matrix(angle: float) -> np.ndarray:
    return np.array([[1.0, 0.0], [0.0, cmath.exp(1j * angle)]], dtype=np.complex128)


class ZYZAngles(NamedTuple):
    """Factorization U = R1(phi) Rz(lam+mu) Ry(2*theta) Rz(lam-mu)."""

    phi: float
    theta: float
    lam: float
    mu: float


def zyz_decompose(matrix: np.ndarray) -> ZYZAngles:
    """Factor a 2x2 unitary into the R1/Rz/Ry/Rz angle tuple.

    phi is the determinant phase; the remaining angles come from the special
    unitary R1(-phi) @ U.  Zero entries yield zero phase angles, so diagonal
    and antidiagonal inputs produce canonical forms.
    """
    u = np.asarray(matrix, dtype=np.complex128)
    if u.shape != (2, 2):
        raise DimensionError(f"expected a 2x2 matrix, got shape {u.shape}")
    if not is_unitary(u, 1e-10):
        raise UnitarityError("zyz_decompose requires a unitary matrix")
    det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
    phi = cmath.phase(det)
    su = u.copy()
    su[1, :] *= cmath.exp(-1j * phi)
    theta = math.acos(min(1.0, abs(su[0, 0])))
    lam = cmath.phase(su[0, 0])
    mu = cmath.phase(su[0, 1])
    return ZYZAngles(phi, theta, lam, mu)


def zyz_reconstruct(angles: ZYZAngles) -> np.ndarray:
    """Multiply the factorization back out (inverse of ``zyz_decompose``)."""
    return (
        r1_matrix(angles.phi)
        @ rz_matrix(angles.lam + angles.mu)
        @ ry_matrix(2.0 * angles.theta)
        @ rz_matrix(angles.lam - angles.mu)
    )


def two_level_to_gates(element: TwoLevelUnitary, n: int) -> list[Gate]:
    """Realize one two-level unitary as fully-controlled gates plus X wraps.

    The rotation chain targets the changed bit ``r`` with all other qubits
    as controls.  Qubits where ``s1`` has a 0 bit get an X before (ascending
    order) and after (descending order) so every control tests for 1.  A
    block that is exactly X becomes a single FCX (plain X when ``n == 1``);
    otherwise the chain is Rz, Ry, Rz, R1 with identity-angle links skipped.
    """
    if element.s2 >= (1 << n):
        raise ValueError(f"state {element.s2} out of range for {n} qubits")
    r = element.changed_bit
    controls = tuple(q for q in range(n) if q != r)
    flips = [q for q in controls if not (element.s1 >> q) & 1]
    before = [Gate(GateKind.X, q) for q in flips]
    after = [Gate(GateKind.X, q) for q in reversed(flips)]
    if np.array_equal(element.block, X_BLOCK):
        kind = GateKind.FCX if controls else GateKind.X
        return before + [Gate(kind, r, controls)] + after
    angles = zyz_decompose(element.block)
    chain = [
        (GateKind.FCRZ, angles.lam - angles.mu),
        (GateKind.FCRY, 2.0 * angles.theta),
        (GateKind.FCRZ, angles.lam + angles.mu),
        (GateKind.FCR1, angles.phi),
    ]
    core = []
    for kind, angle in chain:
        gate = Gate(kind, r, controls, angle)
        if abs(gate.angle) > IDENTITY_ANGLE_TOL:
            core.append(gate)
    return before + core + after


def matrix_to_circuit(
    matrix: np.ndarray, optimize: bool = True, tol: float | None = None
) -> Circuit:
    """Compile a unitary into an X / fully-controlled-rotation circuit.

    Args:
        matrix: unitary of dimension ``2**n`` with ``n <= 9``.
        optimize: run the peephole passes on the result (default True).
        tol: unitarity tolerance override for input validation.

    Returns:
        A circuit whose matrix equals the input up to float round-off.
    """
    from . import optimizer

    m = validate_unitary(matrix, tol)
    n = num_qubits(m.shape[0])
    gates: list[Gate] = []
    for element in two_level_decompose(m, tol):
        gates.extend(two_level_to_gates(element, n))
    circuit = Circuit(n, tuple(gates))
    if optimize:
        circuit = optimizer.optimize(circuit)
    return circuit
