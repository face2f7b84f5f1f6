"""Canonical decomposition of 4x4 unitaries and the circuits built from it.

The route: normalize the determinant away, conjugate into the magic
basis, split off a real rotation by a polar-style factorization, and
diagonalize the symmetric unitary part over a real eigenbasis. The
pieces map back to single-line unitaries around a diagonal core, which
admits either a four-cnot circuit or an entangler sandwich.
"""

import cmath
from dataclasses import dataclass

import numpy as np

from .diag import synth_diag
from .errors import DecompositionFailed, NotUnitary
from .gates import Circuit, cnot, concat, rotation_y, rotation_z, simplify
from .magic import (
    disentangler_circuit,
    entangler_circuit,
    magic_conjugate,
    so4_to_tensor,
)
from .matcore import (
    det4,
    is_special_orthogonal,
    is_unitary,
    spectral_symmetric_unitary,
    sqrt_with_det,
)
from .su2 import append_rotation, controlled_v_gates, one_qubit_gates, zyz_decompose


@dataclass(frozen=True)
class KakFactors:
    """The pieces of one decomposition.

    The normalized input factors as
    ``(u1 x u2) @ E @ diag(sqrt_d) @ E* @ (u5 x u6)`` where E is the
    entangler; multiply by ``phase`` to recover the original matrix.
    ``k2`` and ``k1`` are the real rotations behind the tensor factors,
    and ``u3``, ``u4`` describe the diagonal core conjugated back into
    the computational basis: it is controlled-u3 after u4 on the bottom
    line, inside a cnot pair.
    """

    k2: np.ndarray
    sqrt_d: np.ndarray
    k1: np.ndarray
    u1: np.ndarray
    u2: np.ndarray
    u3: np.ndarray
    u4: np.ndarray
    u5: np.ndarray
    u6: np.ndarray
    phase: complex


def kak_decompose(u, tol: float = 1e-9) -> KakFactors:
    """Factor a 4x4 unitary through the magic basis.

    Steps: divide out the principal fourth root of the determinant, so
    the rest happens in SU(4); form m = E* u E and its symmetric square
    m m^T; take the eigenbasis k2 and the determinant-matched square
    roots of the eigenvalues; the leftover k1 = conj(p) m is then a real
    rotation, and both k2 and k2^T k1 pull back to tensor products.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (4, 4) or not is_unitary(u, tol):
        raise NotUnitary("kak_decompose expects a 4x4 unitary")

    det = det4(u)
    phase = abs(det) ** 0.25 * cmath.exp(0.25j * cmath.phase(det))
    un = u / phase

    m = magic_conjugate(un)
    p2 = m @ m.T
    mu = complex(np.trace(p2)) / 4.0
    if float(np.max(np.abs(p2 - mu * np.eye(4)))) <= 1e-11:
        # scalar symmetric square, the signature of a tensor-product
        # input: every basis is an eigenbasis, and taking the identity
        # keeps the outer single-line factors trivial instead of letting
        # rounding noise pick an arbitrary rotation
        k2 = np.eye(4)
        delta = np.full(4, mu)
    else:
        k2, delta = spectral_symmetric_unitary(p2, max(4.0 * tol, 1e-9))
    rt = sqrt_with_det(delta, det4(un))
    p = k2 @ np.diag(rt) @ k2.T
    k1 = p.conj() @ m
    if not is_special_orthogonal(k1, 1e-7):
        raise DecompositionFailed("residual factor is not a real rotation")
    k1 = k1.real

    u1, u2 = so4_to_tensor(k2)
    u5, u6 = so4_to_tensor(k2.T @ k1)

    a, b, c, d = rt
    u4 = 0.5 * np.array([[a + b, a - b], [a - b, a + b]])
    bblk = 0.5 * np.array([[c + d, c - d], [c - d, c + d]])
    u3 = bblk @ u4.conj().T

    return KakFactors(
        k2=k2, sqrt_d=rt, k1=k1,
        u1=u1, u2=u2, u3=u3, u4=u4, u5=u5, u6=u6,
        phase=complex(phase),
    )


def _core_merged(f: KakFactors) -> Circuit:
    """The diagonal core in nine or fewer gates with u4 absorbed.

    Writing the core as cnot (controlled-u3 after u4 on line 1) cnot,
    the controlled gate opens into its two-cnot form; the closing half A
    of w = u4* u3 u4 then merges with u4 into a single unitary u7 on the
    bottom line, saving a full rotation block.
    """
    bblk = f.u3 @ f.u4
    w = f.u4.conj().T @ bblk
    ang = zyz_decompose(w)

    gates = [cnot(1)]
    ph = 1.0
    ph *= append_rotation(gates, "rz", 1, 0.5 * (ang.beta - ang.alpha))
    gates.append(cnot(0))
    ph *= append_rotation(gates, "rz", 1, -0.5 * (ang.alpha + ang.beta))
    ph *= append_rotation(gates, "ry", 1, -0.5 * ang.theta)
    gates.append(cnot(0))
    ph *= append_rotation(gates, "rz", 0, ang.delta)

    closing = rotation_z(ang.alpha) @ rotation_y(0.5 * ang.theta)
    u7 = f.u4 @ closing
    tail = one_qubit_gates(u7, 1)
    gates.extend(tail.gates)
    gates.append(cnot(1))

    phase = cmath.exp(0.5j * ang.delta) * ph * tail.global_phase
    return Circuit(tuple(gates), phase)


def _core_plain(f: KakFactors) -> Circuit:
    """The diagonal core spelled out: u4 on line 1, then controlled-u3."""
    return concat(
        Circuit((cnot(1),)),
        one_qubit_gates(f.u4, 1),
        controlled_v_gates(f.u3, control=0),
        Circuit((cnot(1),)),
    )


def synth_kak(u, tol: float = 1e-9, optimize: bool = True,
              merge_u4: bool = True) -> Circuit:
    """Synthesize a 4x4 unitary with four cnots.

    At most 23 gates with ``merge_u4`` (19 rotations and 4 cnots), 25
    without. ``optimize`` runs the matrix-preserving simplifier, which
    is what lets structured inputs collapse; with it a tensor product
    comes out with no cnots at all.
    """
    f = kak_decompose(u, tol)
    core = _core_merged(f) if merge_u4 else _core_plain(f)
    c = concat(
        one_qubit_gates(f.u5, 0),
        one_qubit_gates(f.u6, 1),
        core,
        one_qubit_gates(f.u1, 0),
        one_qubit_gates(f.u2, 1),
    )
    c = Circuit(c.gates, c.global_phase * f.phase)
    if optimize:
        c = simplify(c)
    return c


def synth_sandwich(u, tol: float = 1e-9, optimize: bool = True) -> Circuit:
    """Synthesize through an explicit entangler sandwich.

    The diagonal core stays a diagonal: disentangler circuit, diagonal
    circuit, entangler circuit, wrapped in the single-line factors. With
    ``optimize`` the junction between the diagonal and the entangler
    cancels a cnot pair and merges two rotations, landing at 28 gates
    and 8 cnots at most; without it the raw emission is 31 gates.
    """
    f = kak_decompose(u, tol)
    c = concat(
        one_qubit_gates(f.u5, 0),
        one_qubit_gates(f.u6, 1),
        disentangler_circuit(),
        synth_diag(f.sqrt_d, orientation="flipped"),
        entangler_circuit(),
        one_qubit_gates(f.u1, 0),
        one_qubit_gates(f.u2, 1),
    )
    c = Circuit(c.gates, c.global_phase * f.phase)
    if optimize:
        c = simplify(c)
    return c
