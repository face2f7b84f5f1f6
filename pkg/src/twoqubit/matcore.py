"""Dense linear algebra kernels for 4x4 synthesis.

The routines here are small and deterministic. Eigensolvers are cyclic
Jacobi sweeps rather than LAPACK calls so that the eigenvector bases they
return are real rotations by construction, which the rest of the package
relies on. Everything operates on plain numpy arrays.
"""

import math

import numpy as np

from .errors import (
    DecompositionFailed,
    DetMismatch,
    NonCommutingInput,
    NonSymmetricInput,
    NotSymmetricUnitary,
    NotUnitary,
)


def is_unitary(m, tol: float = 1e-9) -> bool:
    """True when ``m`` is square and ``m* m`` is the identity within ``tol``."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    eye = np.eye(m.shape[0])
    return float(np.max(np.abs(m.conj().T @ m - eye))) <= tol


def is_special_orthogonal(m, tol: float = 1e-9) -> bool:
    """True when ``m`` is real orthogonal with determinant one within ``tol``."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    if np.iscomplexobj(m):
        if float(np.max(np.abs(m.imag))) > tol:
            return False
        m = m.real
    n = m.shape[0]
    if float(np.max(np.abs(m.T @ m - np.eye(n)))) > tol:
        return False
    d = det4(m) if m.shape == (4, 4) else np.linalg.det(m)
    return abs(d - 1.0) <= 10.0 * tol


def det4(m) -> complex:
    """Determinant of a 4x4 matrix.

    Expands along the first two rows: the six 2x2 minors taken from rows
    one and two are paired with the complementary minors from rows three
    and four. Thirty multiplications, no pivoting, and exact for the
    dtype given, which keeps the value reproducible across platforms.
    """
    a = np.asarray(m)
    if a.shape != (4, 4):
        raise ValueError("det4 expects a 4x4 matrix")
    p12 = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    p13 = a[0, 0] * a[1, 2] - a[0, 2] * a[1, 0]
    p14 = a[0, 0] * a[1, 3] - a[0, 3] * a[1, 0]
    p23 = a[0, 1] * a[1, 2] - a[0, 2] * a[1, 1]
    p24 = a[0, 1] * a[1, 3] - a[0, 3] * a[1, 1]
    p34 = a[0, 2] * a[1, 3] - a[0, 3] * a[1, 2]
    q12 = a[2, 0] * a[3, 1] - a[2, 1] * a[3, 0]
    q13 = a[2, 0] * a[3, 2] - a[2, 2] * a[3, 0]
    q14 = a[2, 0] * a[3, 3] - a[2, 3] * a[3, 0]
    q23 = a[2, 1] * a[3, 2] - a[2, 2] * a[3, 1]
    q24 = a[2, 1] * a[3, 3] - a[2, 3] * a[3, 1]
    q34 = a[2, 2] * a[3, 3] - a[2, 3] * a[3, 2]
    return p12 * q34 - p13 * q24 + p14 * q23 + p23 * q14 - p24 * q13 + p34 * q12


def _jacobi_sym(a, off_tol: float = 1e-14, max_sweeps: int = 50):
    """Cyclic Jacobi eigensolver for a real symmetric matrix.

    Returns ``(v, lam)`` where the columns of ``v`` are orthonormal
    eigenvectors and ``lam`` holds the eigenvalues sorted in descending
    order, so ``a = v @ diag(lam) @ v.T``.
    """
    n = a.shape[0]
    w = np.array(a, dtype=float, copy=True)
    v = np.eye(n)
    skip = 0.01 * off_tol
    upper = np.triu_indices(n, 1)
    for _ in range(max_sweeps):
        # summed directly over the off-diagonal entries; subtracting the
        # diagonal mass from the total would cancel catastrophically and
        # report convergence several orders of magnitude too early
        off = math.sqrt(2.0 * float((w[upper] ** 2).sum()))
        if off <= off_tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = w[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (w[q, q] - w[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rp = w[p, :].copy()
                rq = w[q, :].copy()
                w[p, :] = c * rp - s * rq
                w[q, :] = s * rp + c * rq
                cp = w[:, p].copy()
                cq = w[:, q].copy()
                w[:, p] = c * cp - s * cq
                w[:, q] = s * cp + c * cq
                w[p, q] = 0.0
                w[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    lam = np.diag(w).copy()
    order = np.argsort(-lam, kind="stable")
    return v[:, order], lam[order]


def _as_sym4(m, tol: float, what: str) -> np.ndarray:
    a = np.asarray(m)
    if a.shape != (4, 4):
        raise NonSymmetricInput(f"{what} must be a 4x4 matrix")
    if np.iscomplexobj(a):
        if float(np.max(np.abs(a.imag))) > tol:
            raise NonSymmetricInput(f"{what} must be real")
        a = a.real
    a = np.asarray(a, dtype=float)
    if float(np.max(np.abs(a - a.T))) > tol:
        raise NonSymmetricInput(f"{what} is not symmetric")
    return 0.5 * (a + a.T)


def jacobi_eigen_sym4(s, tol: float = 1e-9):
    """Eigendecomposition of a real symmetric 4x4 matrix.

    Returns ``(o, lam)`` with ``s = o @ diag(lam) @ o.T``; the columns of
    ``o`` are the eigenvectors and ``lam`` is sorted in descending order.
    """
    a = _as_sym4(s, tol, "input")
    return _jacobi_sym(a)


def joint_diag_commuting(a, b, tol: float = 1e-9):
    """Simultaneously diagonalize two commuting real symmetric 4x4 matrices.

    Returns ``(o, da, db)`` where the rows of ``o`` form the shared
    eigenbasis, ``o @ a @ o.T = diag(da)``, ``o @ b @ o.T = diag(db)``,
    and ``det(o) = +1``. ``db`` is sorted descending; ``da`` descends
    within each block of repeated ``db`` values.

    The second matrix is diagonalized first. Where its spectrum is
    degenerate the first matrix keeps freedom inside the eigenspace, so a
    second Jacobi pass runs on each degenerate block. Eigenvalues closer
    than 1e-7 are treated as one block; trying to separate them would
    divide rounding noise by the gap.
    """
    a = _as_sym4(a, tol, "first matrix")
    b = _as_sym4(b, tol, "second matrix")
    if float(np.max(np.abs(a @ b - b @ a))) > max(tol, 1e-9):
        raise NonCommutingInput("matrices do not commute")

    vb, db_sorted = _jacobi_sym(b)
    o = vb.T
    at = o @ a @ o.T

    start = 0
    for stop in range(1, 5):
        if stop < 4 and db_sorted[stop - 1] - db_sorted[stop] <= 1e-7:
            continue
        if stop - start > 1:
            idx = np.arange(start, stop)
            sub = at[np.ix_(idx, idx)]
            w, _ = _jacobi_sym(0.5 * (sub + sub.T))
            o[idx, :] = w.T @ o[idx, :]
        start = stop

    ra = o @ a @ o.T
    rb = o @ b @ o.T
    da = np.diag(ra).copy()
    db = np.diag(rb).copy()
    resid = max(
        float(np.max(np.abs(ra - np.diag(da)))),
        float(np.max(np.abs(rb - np.diag(db)))),
    )
    if resid > 1e-6:
        raise NonCommutingInput("matrices could not be jointly diagonalized")
    if det4(o) < 0:
        o[3, :] = -o[3, :]
    return o, da, db


def spectral_symmetric_unitary(p, tol: float = 1e-9):
    """Factor a symmetric unitary 4x4 matrix as ``q @ diag(delta) @ q.T``.

    ``q`` is real special orthogonal and ``delta`` holds the unit-modulus
    eigenvalues, ordered by descending real part with descending
    imaginary part breaking ties. A symmetric unitary equals A + iB with
    A and B real symmetric and commuting, so the factorization reduces to
    a joint diagonalization of the two parts.
    """
    p = np.asarray(p, dtype=complex)
    if p.shape != (4, 4):
        raise NotSymmetricUnitary("expected a 4x4 matrix")
    if float(np.max(np.abs(p - p.T))) > tol:
        raise NotSymmetricUnitary("matrix is not symmetric")
    if not is_unitary(p, tol):
        raise NotSymmetricUnitary("matrix is not unitary")

    a = 0.5 * (p.real + p.real.T)
    b = 0.5 * (p.imag + p.imag.T)
    o, da, db = joint_diag_commuting(a, b, tol)
    q = o.T
    delta = da + 1j * db
    order = np.lexsort((-delta.imag, -delta.real))
    delta = delta[order]
    q = q[:, order]
    if det4(q) < 0:
        q[:, 3] = -q[:, 3]
    if float(np.max(np.abs(q @ np.diag(delta) @ q.T - p))) > max(100.0 * tol, 1e-7):
        raise DecompositionFailed("spectral factorization did not reproduce the input")
    return q, delta


def sqrt_with_det(d, target_det) -> np.ndarray:
    """Square roots of unit-modulus values whose product hits a target.

    Takes the principal root of every entry. If the product of roots
    matches ``target_det`` within 1e-6 they are returned as is; if it
    matches ``-target_det`` the root with the largest imaginary part in
    magnitude is negated (lowest index on ties). Anything else raises
    DetMismatch, since no single sign flip can fix it.
    """
    d = np.asarray(d, dtype=complex)
    rt = np.sqrt(np.abs(d)) * np.exp(0.5j * np.angle(d))
    prod = complex(np.prod(rt))
    if abs(prod - target_det) <= 1e-6:
        return rt
    if abs(prod + target_det) <= 1e-6:
        rt = rt.copy()
        k = int(np.argmax(np.abs(rt.imag)))
        rt[k] = -rt[k]
        return rt
    raise DetMismatch(
        f"product of principal roots is {prod:.6f}, "
        f"which is neither the target nor its negative"
    )


def unitary_polar(m, tol: float = 1e-9):
    """Split a 4x4 unitary into a symmetric unitary times a real rotation.

    Returns ``(p, z)`` with ``m = p @ z``, ``p`` symmetric unitary and
    ``z`` real special orthogonal. ``p`` is the square root of
    ``m @ m.T`` whose determinant matches ``det(m)``, taken in the
    eigenbasis of that product.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4) or not is_unitary(m, tol):
        raise NotUnitary("unitary_polar expects a 4x4 unitary")
    p2 = m @ m.T
    q, delta = spectral_symmetric_unitary(p2, 4.0 * tol)
    rt = sqrt_with_det(delta, det4(m))
    p = q @ np.diag(rt) @ q.T
    z = p.conj() @ m
    if not is_special_orthogonal(z, 1e-7):
        raise DecompositionFailed("polar cofactor is not a real rotation")
    return p, z


def _orthonormalize(z) -> np.ndarray:
    """Gram-Schmidt with a second sweep to clean up lost orthogonality."""
    n = z.shape[0]
    q = np.zeros_like(z)
    for j in range(n):
        v = z[:, j].copy()
        for _ in range(2):
            for k in range(j):
                v = v - np.vdot(q[:, k], v) * q[:, k]
        q[:, j] = v / np.linalg.norm(v)
    return q


def haar_unitary(n: int, rng=None) -> np.ndarray:
    """Draw an n x n unitary with Haar weight."""
    if rng is None:
        rng = np.random.default_rng()
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2)
    return _orthonormalize(z)


def haar_special_orthogonal(n: int, rng=None) -> np.ndarray:
    """Draw an n x n real special orthogonal matrix with Haar weight."""
    if rng is None:
        rng = np.random.default_rng()
    q = _orthonormalize(rng.standard_normal((n, n)))
    d = det4(q) if q.shape == (4, 4) else np.linalg.det(q)
    if d < 0:
        q[:, -1] = -q[:, -1]
    return q
