"""Plain-text serialization for matrices and circuits.

Matrix files carry four rows of eight reals, the real and imaginary
parts of each entry in order. Circuit files carry one gate per line,
``ry <line> <angle>``, ``rz <line> <angle>`` or ``cnot <control>
<target>``, preceded by a ``# phase <re> <im>`` header. Blank lines and
``#`` comments are ignored on input. Numbers round-trip at full double
precision.
"""

import math

import numpy as np

from .errors import CircuitFormatError, MatrixFormatError
from .gates import TWO_PI, Circuit, Gate

_FMT = "%.17g"


def format_matrix(m) -> str:
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise MatrixFormatError("expected a 4x4 matrix")
    lines = []
    for row in m:
        parts = []
        for entry in row:
            parts.append(_FMT % entry.real)
            parts.append(_FMT % entry.imag)
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        data = raw.split("#", 1)[0].strip()
        if not data:
            continue
        parts = data.split()
        if len(parts) != 8:
            raise MatrixFormatError(
                f"line {lineno}: expected 8 numbers, got {len(parts)}"
            )
        try:
            vals = [float(p) for p in parts]
        except ValueError as exc:
            raise MatrixFormatError(f"line {lineno}: {exc}") from None
        rows.append([complex(vals[2 * k], vals[2 * k + 1]) for k in range(4)])
    if len(rows) != 4:
        raise MatrixFormatError(f"expected 4 data rows, got {len(rows)}")
    return np.array(rows, dtype=complex)


def format_circuit(c: Circuit) -> str:
    """Serialize a circuit, folding rotation angles into [0, 2 pi).

    A rotation by a + 2 pi equals minus the rotation by a, so the fold
    negates the written phase and the file still evaluates to the same
    matrix exactly.
    """
    phase = complex(c.global_phase)
    body = []
    for g in c.gates:
        if g.kind == "cnot":
            body.append(f"cnot {g.line} {1 - g.line}")
            continue
        angle = g.angle
        if angle >= TWO_PI:
            angle -= TWO_PI
            phase = -phase
        body.append("%s %d %s" % (g.kind, g.line, _FMT % angle))
    header = "# phase %s %s" % (_FMT % phase.real, _FMT % phase.imag)
    return "\n".join([header] + body) + "\n"


def parse_circuit(text: str) -> Circuit:
    phase = complex(1.0)
    gates = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            tokens = stripped[1:].split()
            if tokens and tokens[0] == "phase":
                if len(tokens) != 3:
                    raise CircuitFormatError(
                        f"line {lineno}: phase header needs two numbers"
                    )
                try:
                    phase = complex(float(tokens[1]), float(tokens[2]))
                except ValueError as exc:
                    raise CircuitFormatError(f"line {lineno}: {exc}") from None
            continue
        data = raw.split("#", 1)[0].strip()
        if not data:
            continue
        parts = data.split()
        kind = parts[0]
        if kind == "cnot":
            if len(parts) != 3:
                raise CircuitFormatError(f"line {lineno}: cnot needs two lines")
            try:
                control, target = int(parts[1]), int(parts[2])
            except ValueError as exc:
                raise CircuitFormatError(f"line {lineno}: {exc}") from None
            if control not in (0, 1) or target != 1 - control:
                raise CircuitFormatError(
                    f"line {lineno}: cnot lines must be 0 1 or 1 0"
                )
            gates.append(Gate("cnot", control))
        elif kind in ("ry", "rz"):
            if len(parts) != 3:
                raise CircuitFormatError(
                    f"line {lineno}: {kind} needs a line and an angle"
                )
            try:
                line = int(parts[1])
                angle = float(parts[2])
            except ValueError as exc:
                raise CircuitFormatError(f"line {lineno}: {exc}") from None
            if line not in (0, 1):
                raise CircuitFormatError(f"line {lineno}: line must be 0 or 1")
            if not math.isfinite(angle):
                raise CircuitFormatError(f"line {lineno}: angle must be finite")
            gates.append(Gate(kind, line, angle))
        else:
            raise CircuitFormatError(f"line {lineno}: unknown gate {kind!r}")
    return Circuit(tuple(gates), phase)
