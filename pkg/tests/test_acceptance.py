"""End-to-end acceptance checks.

Each test prints a single line of the form

    acceptance NN [PASS|FAIL] <label>: <detail>

Run with `pytest -s tests/test_acceptance.py` to see the lines as they
complete. The bulk fixtures synthesize a shared 10000-sample random
corpus once per backend, so this module takes a minute or two.
"""

import numpy as np
import pytest

from matrices import HXH, QFT, UF
from twoqubit import (
    count_gates,
    disentangler_matrix,
    entangler_circuit,
    entangler_matrix,
    eval_circuit,
    haar_special_orthogonal,
    haar_unitary,
    joint_diag_commuting,
    phase_distance,
    so4_to_tensor,
    spectral_symmetric_unitary,
    synth_diag,
    synth_kak,
    synth_qr,
    synth_sandwich,
    tensor_invariant,
    unitary_polar,
    zyz_decompose,
    zyz_matrix,
)

BULK = 10_000
CROSS = 1_000
TENSOR = 1_000
DIAG = 1_000
RECOVER = 1_000


def _report(num, label, ok, detail):
    line = "acceptance %02d [%s] %s: %s" % (num, "PASS" if ok else "FAIL", label, detail)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def haar_sample():
    rng = np.random.default_rng(20260817)
    return [haar_unitary(4, rng) for _ in range(BULK)]


def _run_backend(backend, sample):
    counts, errors, evals = [], [], []
    for i, u in enumerate(sample):
        circ = backend(u)
        counts.append(count_gates(circ))
        m = eval_circuit(circ)
        errors.append(phase_distance(m, u))
        if i < CROSS:
            evals.append(m)
    return counts, np.array(errors), evals


@pytest.fixture(scope="module")
def kak_bulk(haar_sample):
    return _run_backend(synth_kak, haar_sample)


@pytest.fixture(scope="module")
def qr_bulk(haar_sample):
    return _run_backend(synth_qr, haar_sample)


@pytest.fixture(scope="module")
def sandwich_bulk(haar_sample):
    return _run_backend(synth_sandwich, haar_sample)


def test_01_kak_backend_bulk(kak_bulk):
    counts, errors, _ = kak_bulk
    max_total = max(c.total for c in counts)
    max_cnots = max(c.cnots for c in counts)
    ok = max_total <= 23 and max_cnots <= 4 and errors.max() <= 1e-9
    _report(
        1,
        "kak backend on %d random targets" % BULK,
        ok,
        "max_total=%d max_cnots=%d max_err=%.2e" % (max_total, max_cnots, errors.max()),
    )


def test_02_qr_backend_bulk(qr_bulk):
    counts, errors, _ = qr_bulk
    max_total = max(c.total for c in counts)
    max_cnots = max(c.cnots for c in counts)
    ok = max_total <= 61 and max_cnots <= 18 and errors.max() <= 1e-9
    _report(
        2,
        "qr backend on %d random targets" % BULK,
        ok,
        "max_total=%d max_cnots=%d max_err=%.2e" % (max_total, max_cnots, errors.max()),
    )


def test_03_sandwich_backend_bulk(sandwich_bulk):
    counts, errors, _ = sandwich_bulk
    max_total = max(c.total for c in counts)
    max_cnots = max(c.cnots for c in counts)
    ok = max_total <= 28 and max_cnots <= 8 and errors.max() <= 1e-9
    _report(
        3,
        "sandwich backend on %d random targets" % BULK,
        ok,
        "max_total=%d max_cnots=%d max_err=%.2e" % (max_total, max_cnots, errors.max()),
    )


def test_04_tensor_products_need_no_cnots():
    rng = np.random.default_rng(20260818)
    worst_rot, worst_cnot, worst_err = 0, 0, 0.0
    for _ in range(TENSOR):
        u = np.kron(haar_unitary(2, rng), haar_unitary(2, rng))
        for backend in (synth_kak, synth_sandwich):
            circ = backend(u)
            c = count_gates(circ)
            worst_cnot = max(worst_cnot, c.cnots)
            worst_rot = max(worst_rot, c.rotations)
            worst_err = max(worst_err, phase_distance(eval_circuit(circ), u))
    ok = worst_cnot == 0 and worst_rot <= 6 and worst_err <= 1e-9
    _report(
        4,
        "%d tensor-product targets through kak and sandwich" % TENSOR,
        ok,
        "max_cnots=%d max_rotations=%d max_err=%.2e" % (worst_cnot, worst_rot, worst_err),
    )


def test_05_diagonal_synthesis_bounds():
    rng = np.random.default_rng(20260819)
    worst_total, worst_split_total, worst_err = 0, 0, 0.0
    for i in range(DIAG):
        if i < DIAG - 200:
            z = np.exp(1j * rng.uniform(-np.pi, np.pi, size=4))
        else:
            a = np.exp(1j * rng.uniform(-np.pi, np.pi, size=2))
            b = np.exp(1j * rng.uniform(-np.pi, np.pi, size=2))
            z = np.kron(a, b)
        circ = synth_diag(z)
        total = count_gates(circ).total
        err = float(np.max(np.abs(eval_circuit(circ) - np.diag(z))))
        worst_err = max(worst_err, err)
        if abs(tensor_invariant(z) - 1.0) < 1e-9:
            worst_split_total = max(worst_split_total, total)
        else:
            worst_total = max(worst_total, total)
    ok = worst_total <= 5 and worst_split_total <= 2 and worst_err <= 1e-9
    _report(
        5,
        "%d diagonal targets" % DIAG,
        ok,
        "max_total=%d max_total_splittable=%d max_err=%.2e"
        % (worst_total, worst_split_total, worst_err),
    )


def test_06_named_targets_within_budget():
    uf = count_gates(synth_kak(UF))
    qft = count_gates(synth_kak(QFT))
    hxh = count_gates(synth_kak(HXH))
    err = max(
        phase_distance(eval_circuit(synth_kak(m)), m) for m in (UF, QFT, HXH)
    )
    ok = (
        uf.total <= 23
        and uf.cnots <= 4
        and qft.total <= 23
        and qft.cnots <= 4
        and hxh.cnots == 0
        and err <= 1e-9
    )
    _report(
        6,
        "named targets through kak",
        ok,
        "uf=%d/%d qft=%d/%d hxh=%d/%d max_err=%.2e (total/cnots)"
        % (uf.total, uf.cnots, qft.total, qft.cnots, hxh.total, hxh.cnots, err),
    )


def test_07_entangler_circuit_exact():
    circ = entangler_circuit()
    c = count_gates(circ)
    dist = phase_distance(eval_circuit(circ), entangler_matrix())
    ok = dist <= 1e-10 and c.cnots == 4 and c.rotations == 3
    _report(
        7,
        "entangler circuit",
        ok,
        "distance=%.2e cnots=%d rotations=%d" % (dist, c.cnots, c.rotations),
    )


def test_08_construct_recover():
    rng = np.random.default_rng(20260820)
    worst = {}

    acc = 0.0
    for _ in range(RECOVER):
        m = haar_unitary(4, rng)
        p, z = unitary_polar(m)
        acc = max(acc, float(np.max(np.abs(p @ z - m))))
    worst["polar"] = acc

    acc = 0.0
    for _ in range(RECOVER):
        q0 = haar_special_orthogonal(4, rng)
        vals = np.exp(1j * rng.uniform(-np.pi, np.pi, size=4))
        p = q0 @ np.diag(vals) @ q0.T
        q, d = spectral_symmetric_unitary(p)
        acc = max(acc, float(np.max(np.abs(q @ np.diag(d) @ q.T - p))))
    worst["spectral"] = acc

    acc = 0.0
    for _ in range(RECOVER):
        o = haar_special_orthogonal(4, rng)
        a = o.T @ np.diag(rng.normal(size=4)) @ o
        b = o.T @ np.diag(rng.normal(size=4)) @ o
        basis, ea, eb = joint_diag_commuting(a, b)
        res_a = float(np.max(np.abs(basis @ a @ basis.T - np.diag(ea))))
        res_b = float(np.max(np.abs(basis @ b @ basis.T - np.diag(eb))))
        acc = max(acc, res_a, res_b)
    worst["joint"] = acc

    acc = 0.0
    for _ in range(RECOVER):
        u = haar_unitary(2, rng)
        acc = max(acc, float(np.max(np.abs(zyz_matrix(zyz_decompose(u)) - u))))
    worst["zyz"] = acc

    acc = 0.0
    e, eh = entangler_matrix(), disentangler_matrix()
    for _ in range(RECOVER):
        o = haar_special_orthogonal(4, rng)
        u1, u2 = so4_to_tensor(o)
        acc = max(acc, float(np.max(np.abs(eh @ np.kron(u1, u2) @ e - o))))
    worst["so4"] = acc

    ok = all(v <= 1e-7 for v in worst.values())
    _report(
        8,
        "construct-recover over %d draws each" % RECOVER,
        ok,
        " ".join("%s=%.2e" % kv for kv in sorted(worst.items())),
    )


def test_09_backends_agree(kak_bulk, qr_bulk, sandwich_bulk):
    pairs = (
        ("kak/qr", kak_bulk[2], qr_bulk[2]),
        ("kak/sandwich", kak_bulk[2], sandwich_bulk[2]),
        ("qr/sandwich", qr_bulk[2], sandwich_bulk[2]),
    )
    worst = {
        name: max(phase_distance(a, b) for a, b in zip(lhs, rhs))
        for name, lhs, rhs in pairs
    }
    ok = all(v <= 1e-7 for v in worst.values())
    _report(
        9,
        "pairwise backend agreement on %d targets" % CROSS,
        ok,
        " ".join("%s=%.2e" % kv for kv in sorted(worst.items())),
    )


def test_10_kak_circuit_shape_extremes(kak_bulk):
    counts, _, _ = kak_bulk
    min_cnots = min(c.cnots for c in counts)
    max_rot = max(c.rotations for c in counts)
    ok = min_cnots >= 2 and max_rot <= 19
    _report(
        10,
        "kak circuit shape over the random corpus",
        ok,
        "min_cnots=%d max_rotations=%d" % (min_cnots, max_rot),
    )
