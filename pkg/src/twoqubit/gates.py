"""Gate and circuit primitives on two qubit lines.

Line 0 is the top wire and owns the first tensor factor, line 1 the
bottom wire. A circuit stores gates in application order (the first gate
acts first) together with an explicit global phase, so evaluating a
circuit reproduces its target matrix exactly rather than up to phase.
"""

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi

_KINDS = ("ry", "rz", "cnot")

_I2 = np.eye(2, dtype=complex)
# control on line 0: flips line 1 when line 0 is set
_CNOT_TOP = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)
# control on line 1: flips line 0 when line 1 is set
_CNOT_BOTTOM = np.array(
    [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex
)


@dataclass(frozen=True)
class Gate:
    """One elementary gate.

    ``line`` is the rotation target, or the control line for a cnot.
    Rotation angles are reduced modulo 4 pi at construction; that is the
    true period of the rotation matrices, so the reduction is exact.
    """

    kind: str
    line: int
    angle: float = 0.0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.line not in (0, 1):
            raise ValueError("line must be 0 or 1")
        if self.kind == "cnot":
            object.__setattr__(self, "angle", 0.0)
        else:
            value = float(self.angle)
            if not math.isfinite(value):
                raise ValueError("rotation angle must be finite")
            object.__setattr__(self, "angle", value % FOUR_PI)


def ry(line: int, angle: float) -> Gate:
    return Gate("ry", line, angle)


def rz(line: int, angle: float) -> Gate:
    return Gate("rz", line, angle)


def cnot(control: int) -> Gate:
    return Gate("cnot", control)


def rotation_y(angle: float) -> np.ndarray:
    """2x2 rotation about y: [[cos, sin], [-sin, cos]] at half the angle."""
    c = math.cos(0.5 * angle)
    s = math.sin(0.5 * angle)
    return np.array([[c, s], [-s, c]], dtype=complex)


def rotation_z(angle: float) -> np.ndarray:
    """2x2 rotation about z: diag(exp(-i a/2), exp(i a/2))."""
    return np.array(
        [[cmath.exp(-0.5j * angle), 0.0], [0.0, cmath.exp(0.5j * angle)]]
    )


def gate_matrix(g: Gate) -> np.ndarray:
    """The 4x4 matrix of a single gate."""
    if g.kind == "cnot":
        return (_CNOT_TOP if g.line == 0 else _CNOT_BOTTOM).copy()
    r = rotation_y(g.angle) if g.kind == "ry" else rotation_z(g.angle)
    if g.line == 0:
        return np.kron(r, _I2)
    return np.kron(_I2, r)


@dataclass(frozen=True)
class Circuit:
    """A gate list in application order plus an explicit global phase."""

    gates: tuple = ()
    global_phase: complex = 1.0 + 0.0j

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "global_phase", complex(self.global_phase))

    def __len__(self):
        return len(self.gates)


def concat(*circuits: Circuit) -> Circuit:
    """Join circuits left to right; phases multiply."""
    gates = []
    phase = complex(1.0)
    for c in circuits:
        gates.extend(c.gates)
        phase *= c.global_phase
    return Circuit(tuple(gates), phase)


def eval_circuit(c: Circuit) -> np.ndarray:
    """Multiply out a circuit. The first gate is the rightmost factor."""
    m = np.eye(4, dtype=complex)
    for g in c.gates:
        m = gate_matrix(g) @ m
    return c.global_phase * m


def phase_distance(a, b) -> float:
    """Frobenius distance between two matrices minimized over a global phase.

    Zero exactly when a = exp(i t) b for some real t. The minimizing
    phase is the argument of the trace overlap; rotating b by it and
    subtracting entrywise keeps the result accurate down to machine
    precision, where expanding the square would lose half the digits.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    overlap = np.vdot(a, b)
    if abs(overlap) > 0.0:
        b = (overlap.conjugate() / abs(overlap)) * b
    return float(np.linalg.norm(a - b))


class GateCounts(NamedTuple):
    total: int
    cnots: int
    rotations: int


def count_gates(c: Circuit) -> GateCounts:
    cnots = sum(1 for g in c.gates if g.kind == "cnot")
    return GateCounts(len(c.gates), cnots, len(c.gates) - cnots)


_ZERO_TOL = 1e-10


def simplify(c: Circuit) -> Circuit:
    """Shrink a circuit without changing its matrix.

    Rules, applied until none fires: rotations by a multiple of 4 pi are
    dropped; rotations by 2 pi are dropped while negating the global
    phase; equal adjacent cnots cancel; same-kind rotations on the same
    line merge, hopping over rotations on the other line (which commute
    exactly) but never over a cnot.
    """
    gates = list(c.gates)
    phase = complex(c.global_phase)
    changed = True
    while changed:
        changed = False

        kept = []
        for g in gates:
            if g.kind != "cnot":
                a = g.angle
                if a <= _ZERO_TOL or FOUR_PI - a <= _ZERO_TOL:
                    changed = True
                    continue
                if abs(a - TWO_PI) <= _ZERO_TOL:
                    phase = -phase
                    changed = True
                    continue
            kept.append(g)
        gates = kept

        kept = []
        i = 0
        while i < len(gates):
            if (
                i + 1 < len(gates)
                and gates[i].kind == "cnot"
                and gates[i + 1] == gates[i]
            ):
                i += 2
                changed = True
                continue
            kept.append(gates[i])
            i += 1
        gates = kept

        i = 0
        while i < len(gates):
            g = gates[i]
            if g.kind == "cnot":
                i += 1
                continue
            merged = False
            j = i + 1
            while j < len(gates):
                h = gates[j]
                if h.kind == "cnot":
                    break
                if h.line == g.line:
                    if h.kind == g.kind:
                        gates[i] = Gate(g.kind, g.line, g.angle + h.angle)
                        del gates[j]
                        changed = True
                        merged = True
                    break
                j += 1
            if not merged:
                i += 1

    return Circuit(tuple(gates), phase)


@dataclass(frozen=True)
class SynthesisReport:
    """Counts and reconstruction quality for one synthesized circuit."""

    backend: str
    circuit: Circuit
    total: int
    cnots: int
    rotations: int
    reconstruction_error: float


def build_report(backend: str, target, circuit: Circuit) -> SynthesisReport:
    counts = count_gates(circuit)
    err = phase_distance(eval_circuit(circuit), target)
    return SynthesisReport(
        backend=backend,
        circuit=circuit,
        total=counts.total,
        cnots=counts.cnots,
        rotations=counts.rotations,
        reconstruction_error=err,
    )
