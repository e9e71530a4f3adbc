import math

import numpy as np
from hypothesis import strategies as st

from arbgrover.circuit import Circuit, GateOp
from arbgrover.qcore import StateVector

# filled by test_acceptance, printed by the terminal-summary hook in conftest
ACCEPTANCE_LINES: list[str] = []


def random_state(rng, n):
    v = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return StateVector(n, v / np.linalg.norm(v))


def random_op(rng, n, max_controls=None):
    kind = str(rng.choice(["x", "h", "z", "ry"]))
    qubits = rng.permutation(n)
    limit = n - 1 if max_controls is None else min(max_controls, n - 1)
    n_ctrl = int(rng.integers(0, limit + 1))
    controls = tuple((int(q), int(rng.integers(0, 2))) for q in qubits[1 : 1 + n_ctrl])
    angle = float(rng.uniform(-2 * math.pi, 2 * math.pi)) if kind == "ry" else 0.0
    return GateOp(kind, int(qubits[0]), controls, angle)


def random_circuit(rng, n, n_gates, max_controls=None):
    return Circuit(n, tuple(random_op(rng, n, max_controls) for _ in range(n_gates)), "random")


@st.composite
def gate_ops(draw, n):
    kind = draw(st.sampled_from(["x", "h", "z", "ry"]))
    qubits = draw(st.permutations(range(n)))
    n_ctrl = draw(st.integers(0, n - 1))
    controls = tuple((q, draw(st.integers(0, 1))) for q in qubits[1 : 1 + n_ctrl])
    angle = draw(st.floats(-10, 10, allow_nan=False)) if kind == "ry" else 0.0
    return GateOp(kind, qubits[0], controls, angle)


@st.composite
def circuits(draw, max_qubits=6, max_gates=30):
    n = draw(st.integers(1, max_qubits))
    ops = draw(st.lists(gate_ops(n), max_size=max_gates))
    return Circuit(n, tuple(ops), "hyp")
