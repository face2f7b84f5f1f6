"""The magic basis and the SO(4) to tensor-product correspondence.

The entangler is the 4x4 unitary

    E = sqrt(1/2) * [[1,  i, 0,  0],
                     [0,  0, i,  1],
                     [0,  0, i, -1],
                     [1, -i, 0,  0]]

Conjugating by it turns real special orthogonal matrices into tensor
products of two special unitaries and back, which is what lets a 4x4
problem fall apart into single-line pieces.
"""

import cmath
import math

import numpy as np

from .errors import NotSpecialOrthogonal, NotTensorDecomposable
from .gates import Circuit, cnot, ry, rz
from .matcore import is_special_orthogonal

_E = math.sqrt(0.5) * np.array(
    [
        [1, 1j, 0, 0],
        [0, 0, 1j, 1],
        [0, 0, 1j, -1],
        [1, -1j, 0, 0],
    ],
    dtype=complex,
)


def entangler_matrix() -> np.ndarray:
    return _E.copy()


def disentangler_matrix() -> np.ndarray:
    return _E.conj().T


def magic_conjugate(u) -> np.ndarray:
    """E* u E, the basis change into the magic frame."""
    return _E.conj().T @ np.asarray(u, dtype=complex) @ _E


def entangler_circuit() -> Circuit:
    """Seven gates evaluating to the entangler exactly, phase included.

    Four cnots and three rotations; the phase is e^(3 i pi / 4).
    """
    gates = (
        cnot(1),
        rz(0, 0.5 * math.pi),
        cnot(1),
        ry(1, 0.5 * math.pi),
        rz(1, math.pi),
        cnot(0),
        cnot(1),
    )
    return Circuit(gates, cmath.exp(0.75j * math.pi))


def disentangler_circuit() -> Circuit:
    """The inverse circuit: reversed gates, negated angles, conjugate phase."""
    gates = (
        cnot(1),
        cnot(0),
        rz(1, -math.pi),
        ry(1, -0.5 * math.pi),
        cnot(1),
        rz(0, -0.5 * math.pi),
        cnot(1),
    )
    return Circuit(gates, cmath.exp(-0.75j * math.pi))


def so4_to_tensor(o, tol: float = 1e-7):
    """Factor E o E* into a tensor product of two special unitaries.

    Returns ``(u1, u2)`` with ``kron(u1, u2) = E o E*`` and both factors
    of determinant one. The 2x2 blocks of the conjugated matrix are all
    scalar multiples of u2; the block of largest norm fixes u2 (its
    scalar is pinned by forcing det one), then every block's scalar is
    read off by projection onto u2.
    """
    o = np.asarray(o)
    if not is_special_orthogonal(o, tol):
        raise NotSpecialOrthogonal("input must be real orthogonal with det one")
    m = _E @ o.astype(complex) @ _E.conj().T

    best = None
    best_norm = -1.0
    for i in (0, 1):
        for j in (0, 1):
            blk = m[2 * i : 2 * i + 2, 2 * j : 2 * j + 2]
            n = float(np.linalg.norm(blk))
            if n > best_norm:
                best_norm = n
                best = blk
    det_blk = best[0, 0] * best[1, 1] - best[0, 1] * best[1, 0]
    scale = cmath.sqrt(det_blk)
    u2 = best / scale

    u1 = np.empty((2, 2), dtype=complex)
    for i in (0, 1):
        for j in (0, 1):
            blk = m[2 * i : 2 * i + 2, 2 * j : 2 * j + 2]
            u1[i, j] = 0.5 * np.trace(blk @ u2.conj().T)

    if float(np.max(np.abs(np.kron(u1, u2) - m))) > 10.0 * tol:
        raise NotTensorDecomposable("conjugated matrix is not a tensor product")
    return u1, u2
