import numpy as np
import pytest

from matrices import HXH, QFT, SWAP, UF
from twoqubit import (
    NotUnitary,
    count_gates,
    eval_circuit,
    givens_to_gates,
    haar_unitary,
    phase_distance,
    qr_reduce,
    synth_qr,
)

ELIMINATION_ORDER = ((3, 0), (2, 0), (1, 0), (3, 1), (2, 1), (3, 2))


def _embed_pair(rotation, row):
    out = np.eye(4, dtype=complex)
    out[row - 1 : row + 1, row - 1 : row + 1] = rotation
    return out


def test_qr_reduce_structure():
    u = haar_unitary(4, np.random.default_rng(503))
    steps, diag = qr_reduce(u)
    assert len(steps) == 6
    assert tuple(s.pair for s in steps) == tuple(
        (t[0] - 1, t[0]) for t in ELIMINATION_ORDER
    )
    assert np.allclose(np.abs(diag), 1.0, atol=1e-12)


def test_qr_reduce_reconstructs():
    rng = np.random.default_rng(509)
    for _ in range(300):
        u = haar_unitary(4, rng)
        steps, diag = qr_reduce(u)
        m = np.diag(diag)
        for step in reversed(steps):
            m = _embed_pair(step.rotation, step.pair[1]) @ m
        assert np.max(np.abs(m - u)) < 1e-12


def test_qr_reduce_diagonal_input_gives_identity_steps():
    z = np.exp(1j * np.array([0.4, -0.9, 1.3, 2.2]))
    steps, diag = qr_reduce(np.diag(z))
    for step in steps:
        assert np.array_equal(step.rotation, np.eye(2))
    assert np.max(np.abs(diag - z)) < 1e-15


def test_qr_reduce_rejects_nonunitary():
    with pytest.raises(NotUnitary):
        qr_reduce(np.ones((4, 4)))


def test_givens_identity_step_emits_nothing():
    steps, _ = qr_reduce(np.eye(4, dtype=complex))
    for step in steps:
        circ = givens_to_gates(step)
        assert len(circ) == 0


def test_givens_steps_match_their_embeddings():
    rng = np.random.default_rng(521)
    for _ in range(100):
        u = haar_unitary(4, rng)
        steps, _ = qr_reduce(u)
        for step in steps:
            circ = givens_to_gates(step)
            want = _embed_pair(step.rotation, step.pair[1])
            assert phase_distance(eval_circuit(circ), want) < 1e-11


def test_givens_gate_budget_per_pair():
    # adjacent-row rotations embed with a bounded cost that depends on the pair
    rng = np.random.default_rng(523)
    u = haar_unitary(4, rng)
    steps, _ = qr_reduce(u)
    limits = {(0, 1): 12, (1, 2): 10, (2, 3): 8}
    for step in steps:
        circ = givens_to_gates(step)
        assert len(circ) <= limits[step.pair]


def test_synth_qr_random():
    rng = np.random.default_rng(541)
    for _ in range(300):
        u = haar_unitary(4, rng)
        circ = synth_qr(u)
        counts = count_gates(circ)
        assert counts.total <= 61
        assert counts.cnots <= 18
        assert phase_distance(eval_circuit(circ), u) < 1e-9


def test_synth_qr_diagonal_input_is_cheap():
    rng = np.random.default_rng(547)
    for _ in range(50):
        z = np.exp(1j * rng.uniform(-np.pi, np.pi, size=4))
        circ = synth_qr(np.diag(z))
        counts = count_gates(circ)
        assert counts.total <= 5
        assert counts.cnots <= 2
        assert phase_distance(eval_circuit(circ), np.diag(z)) < 1e-11


@pytest.mark.parametrize(
    "target", [SWAP, UF, QFT, HXH], ids=["swap", "uf", "qft", "hxh"]
)
def test_synth_qr_named_targets(target):
    circ = synth_qr(target)
    counts = count_gates(circ)
    assert counts.total <= 61
    assert counts.cnots <= 18
    assert phase_distance(eval_circuit(circ), target) < 1e-9
