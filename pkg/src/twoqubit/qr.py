"""Synthesis by Givens elimination.

A unitary is brought to diagonal form by six 2x2 rotations acting on
adjacent row pairs, sweeping column by column from the bottom left.
Each rotation embeds into the two-line space as a controlled gate, plain
or conjugated depending on which rows it touches, and the leftover
diagonal gets its own small circuit.
"""

import math
from dataclasses import dataclass

import numpy as np

from .diag import synth_diag
from .errors import DecompositionFailed, NotUnitary
from .gates import Circuit, cnot, concat, ry, rz, simplify
from .matcore import is_unitary
from .su2 import controlled_v_gates

_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)

# entries to eliminate, as 0-based (row, col), column-major bottom-up;
# each one pairs the row with the one above it
_TARGETS = ((3, 0), (2, 0), (1, 0), (3, 1), (2, 1), (3, 2))

_IDENTITY_TOL = 1e-12


@dataclass(frozen=True)
class GivensStep:
    """One factor of the elimination: a 2x2 unitary on adjacent rows.

    ``pair`` holds the 0-based row indices. ``rotation`` is the inverse
    of the eliminator, so the input equals the steps multiplied left to
    right in recorded order, times the final diagonal.
    """

    pair: tuple
    rotation: np.ndarray


def qr_reduce(u, tol: float = 1e-9):
    """Reduce a 4x4 unitary to diagonal form by adjacent-row rotations.

    Returns ``(steps, diagonal)``. Eliminating the lower triangle of a
    unitary leaves a triangular unitary, which is already diagonal, so
    six steps suffice. Steps whose target entry is already zero record
    an identity rotation and synthesize to nothing.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (4, 4) or not is_unitary(u, tol):
        raise NotUnitary("qr_reduce expects a 4x4 unitary")
    work = u.copy()
    steps = []
    for row, col in _TARGETS:
        x = work[row - 1, col]
        y = work[row, col]
        if abs(y) <= _IDENTITY_TOL:
            rot = np.eye(2, dtype=complex)
        else:
            norm = math.hypot(abs(x), abs(y))
            elim = np.array([[x.conjugate(), y.conjugate()], [-y, x]]) / norm
            work[row - 1 : row + 1, :] = elim @ work[row - 1 : row + 1, :]
            work[row, col] = 0.0
            rot = elim.conj().T
        steps.append(GivensStep((row - 1, row), rot))
    diagonal = np.diag(work).copy()
    if float(np.max(np.abs(work - np.diag(diagonal)))) > 1e-7:
        raise DecompositionFailed("elimination did not reach a diagonal")
    return steps, diagonal


def givens_to_gates(step: GivensStep, tol: float = 1e-9) -> Circuit:
    """Embed one 2x2 rotation on adjacent rows as a two-line circuit.

    Rows (2, 3) are the lower block, a plain top-controlled gate. Rows
    (0, 1) are the same block conjugated by X on the top line. Rows
    (1, 2) straddle the middle; conjugating by a bottom-controlled cnot
    moves the block to the corner at the price of an X on the rotation.
    Identity rotations produce the empty circuit.
    """
    v = np.asarray(step.rotation, dtype=complex)
    if float(np.max(np.abs(v - np.eye(2)))) <= _IDENTITY_TOL:
        return Circuit((), 1.0)
    pair = tuple(step.pair)
    if pair == (2, 3):
        return controlled_v_gates(v, control=0, tol=tol)
    if pair == (0, 1):
        inner = controlled_v_gates(v, control=0, tol=tol)
        x_top = (ry(0, math.pi), rz(0, math.pi))
        gates = x_top + inner.gates + x_top
        return Circuit(gates, -inner.global_phase)
    if pair == (1, 2):
        inner = controlled_v_gates(_X @ v @ _X, control=0, tol=tol)
        gates = (cnot(1),) + inner.gates + (cnot(1),)
        return Circuit(gates, inner.global_phase)
    raise ValueError(f"rows {pair} are not adjacent within a 4x4 matrix")


def synth_qr(u, tol: float = 1e-9, optimize: bool = True) -> Circuit:
    """Synthesize a 4x4 unitary by Givens elimination.

    At most 61 gates and 18 cnots before simplification. The diagonal
    circuit comes first, then the steps in reverse recorded order, which
    multiplies back to the input exactly.
    """
    steps, diagonal = qr_reduce(u, tol)
    parts = [synth_diag(diagonal, tol=max(tol, 1e-8))]
    for step in reversed(steps):
        parts.append(givens_to_gates(step, tol))
    c = concat(*parts)
    if optimize:
        c = simplify(c)
    return c
