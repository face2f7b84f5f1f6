"""Euler-angle factorization of single qubit gates and circuits built on it.

Every 2x2 unitary u can be written exp(i delta) Rz(alpha) Ry(theta)
Rz(beta). The angles come from the entries of the special unitary part
of u; when a row entry vanishes the z rotations collapse into one and
alpha is fixed to zero.
"""

import cmath
import math
from typing import NamedTuple

import numpy as np

from .errors import NotUnitary
from .gates import FOUR_PI, TWO_PI, Circuit, Gate, cnot, rotation_y, rotation_z
from .matcore import is_unitary

_DEGENERATE = 1e-12


class ZyzAngles(NamedTuple):
    delta: float
    alpha: float
    theta: float
    beta: float


def zyz_decompose(u, tol: float = 1e-9) -> ZyzAngles:
    """Angles (delta, alpha, theta, beta) with u = e^(i delta) Rz Ry Rz."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2) or not is_unitary(u, tol):
        raise NotUnitary("zyz_decompose expects a 2x2 unitary")
    det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
    delta = 0.5 * cmath.phase(det)
    su = u * cmath.exp(-1j * delta)
    a = su[0, 0]
    b = su[0, 1]
    theta = 2.0 * math.atan2(abs(b), abs(a))
    if abs(a) <= _DEGENERATE:
        alpha = 0.0
        beta = 2.0 * cmath.phase(b)
    elif abs(b) <= _DEGENERATE:
        alpha = 0.0
        beta = -2.0 * cmath.phase(a)
    else:
        alpha = -(cmath.phase(a) + cmath.phase(b))
        beta = cmath.phase(b) - cmath.phase(a)
    return ZyzAngles(delta, alpha, theta, beta)


def zyz_matrix(angles: ZyzAngles) -> np.ndarray:
    """Rebuild the 2x2 unitary from its angles."""
    return (
        cmath.exp(1j * angles.delta)
        * rotation_z(angles.alpha)
        @ rotation_y(angles.theta)
        @ rotation_z(angles.beta)
    )


def append_rotation(gates: list, kind: str, line: int, angle: float) -> complex:
    """Append a rotation unless it reduces to the identity or minus it.

    Returns the scalar the skipped gate contributes, so callers fold it
    into their global phase. A rotation by 2 pi is minus the identity.
    """
    a = float(angle) % FOUR_PI
    if a <= _DEGENERATE or FOUR_PI - a <= _DEGENERATE:
        return 1.0
    if abs(a - TWO_PI) <= _DEGENERATE:
        return -1.0
    gates.append(Gate(kind, line, a))
    return 1.0


def zyz_to_gates(angles: ZyzAngles, line: int) -> Circuit:
    """At most three rotations realizing the unitary on one line."""
    gates = []
    ph = 1.0
    ph *= append_rotation(gates, "rz", line, angles.beta)
    ph *= append_rotation(gates, "ry", line, angles.theta)
    ph *= append_rotation(gates, "rz", line, angles.alpha)
    return Circuit(tuple(gates), cmath.exp(1j * angles.delta) * ph)


def one_qubit_gates(u, line: int, tol: float = 1e-9) -> Circuit:
    """Synthesize a 2x2 unitary on the given line, phase included."""
    return zyz_to_gates(zyz_decompose(u, tol), line)


def controlled_v_gates(v, control: int = 0, tol: float = 1e-9) -> Circuit:
    """Controlled application of a 2x2 unitary, exact in the global phase.

    Builds the standard two-cnot realization: with v = e^(i d) Rz(al)
    Ry(th) Rz(be), the conjugating halves A = Rz(al) Ry(th/2),
    B = Ry(-th/2) Rz(-(al+be)/2), C = Rz((be-al)/2) satisfy ABC = 1 and
    A X B X C = v up to the phase d, which lands on the control line as
    an Rz plus a scalar. Eight gates at most, exactly two cnots.
    """
    if control not in (0, 1):
        raise ValueError("control must be 0 or 1")
    ang = zyz_decompose(v, tol)
    target = 1 - control
    gates = []
    ph = 1.0
    ph *= append_rotation(gates, "rz", target, 0.5 * (ang.beta - ang.alpha))
    gates.append(cnot(control))
    ph *= append_rotation(gates, "rz", target, -0.5 * (ang.alpha + ang.beta))
    ph *= append_rotation(gates, "ry", target, -0.5 * ang.theta)
    gates.append(cnot(control))
    ph *= append_rotation(gates, "ry", target, 0.5 * ang.theta)
    ph *= append_rotation(gates, "rz", target, ang.alpha)
    ph *= append_rotation(gates, "rz", control, ang.delta)
    return Circuit(tuple(gates), cmath.exp(0.5j * ang.delta) * ph)
