"""Circuits for diagonal two qubit unitaries."""

import cmath

import numpy as np

from .errors import NotTensorSplittable, NotUnitary
from .gates import Circuit, cnot, rz
from .su2 import append_rotation

_CORE_TOL = 1e-9


def tensor_invariant(z) -> complex:
    """z1*z4 / (z2*z3) for the diagonal (z1, z2, z3, z4).

    Equals one exactly when the diagonal splits as a tensor product of
    two single-line diagonals, and is unchanged by any such product.
    """
    z = np.asarray(z, dtype=complex).reshape(4)
    return z[0] * z[3] / (z[1] * z[2])


def _as_diag(z, tol: float) -> np.ndarray:
    z = np.asarray(z, dtype=complex).reshape(4)
    if float(np.max(np.abs(np.abs(z) - 1.0))) > tol:
        raise NotUnitary("diagonal entries must have unit modulus")
    return z


def split_diag_tensor(z, tol: float = 1e-9):
    """Split a diagonal into top and bottom line factors.

    Returns ``(top, bottom)`` with ``kron(diag(top), diag(bottom))``
    equal to ``diag(z)``. The bottom factor is gauged to start at one.
    Raises NotTensorSplittable when the invariant is off one.
    """
    z = _as_diag(z, tol)
    if abs(tensor_invariant(z) - 1.0) > tol:
        raise NotTensorSplittable("diagonal does not factor across the lines")
    t1 = cmath.phase(z[0])
    t2 = cmath.phase(z[2])
    t4 = cmath.phase(z[1] * z[0].conjugate())
    top = np.array([cmath.exp(1j * t1), cmath.exp(1j * t2)])
    bottom = np.array([1.0, cmath.exp(1j * t4)], dtype=complex)
    return top, bottom


def synth_diag(z, orientation: str = "left", tol: float = 1e-9) -> Circuit:
    """Exact circuit for a diagonal unitary given by its four entries.

    A cnot pair around an Rz on the top line produces the diagonal
    (e^(-i phi/4), e^(i phi/4), e^(i phi/4), e^(-i phi/4)) with
    phi = -arg of the tensor invariant; that cancels the entangling part,
    and what remains splits into one Rz per line. At most five gates and
    two cnots, at most two gates when the invariant is already one.

    ``orientation`` picks whether the cnot core precedes ("left") or
    follows ("flipped") the single-line rotations; diagonals commute, so
    both orders give the same matrix, but the flipped form puts a cnot on
    the outside where a neighbouring circuit may cancel it.
    """
    if orientation not in ("left", "flipped"):
        raise ValueError(f"unknown orientation {orientation!r}")
    z = _as_diag(z, tol)

    phi = -cmath.phase(tensor_invariant(z))
    core = []
    if abs(phi) > _CORE_TOL:
        core.append(cnot(1))
        core.append(rz(0, 0.5 * phi))
        core.append(cnot(1))
        core_diag = np.exp(0.25j * phi * np.array([-1.0, 1.0, 1.0, -1.0]))
    else:
        core_diag = np.ones(4, dtype=complex)

    residual = z / core_diag
    top, bottom = split_diag_tensor(residual, max(tol, 1e-8))
    t1 = cmath.phase(top[0])
    t2 = cmath.phase(top[1])
    t4 = cmath.phase(bottom[1])

    rest = []
    ph = cmath.exp(0.5j * (t1 + t2)) * cmath.exp(0.5j * t4)
    ph *= append_rotation(rest, "rz", 0, t2 - t1)
    ph *= append_rotation(rest, "rz", 1, t4)

    gates = core + rest if orientation == "left" else rest + core
    return Circuit(tuple(gates), ph)
