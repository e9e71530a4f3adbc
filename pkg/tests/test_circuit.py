import math

import numpy as np
import openqasm3
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arbgrover import circuit as cir
from arbgrover.circuit import Circuit, GateOp, compose, depth, gate_count, inverse, simulate, to_qasm3
from arbgrover.grover import build_zero_reflection
from arbgrover.qcore import init_zero_state, probabilities
from arbgrover.stateprep import build_uniform_prep

from helpers import circuits, random_circuit, random_state
from oracles import dense_of, parse_qasm_gates, simulate_qasm


def test_gateop_validation():
    with pytest.raises(ValueError):
        GateOp("y", 0)
    with pytest.raises(ValueError):
        GateOp("x", 0, ((0, 1),))
    with pytest.raises(ValueError):
        GateOp("x", 0, ((1, 1), (1, 0)))
    with pytest.raises(ValueError):
        GateOp("ry", 0, (), math.inf)
    with pytest.raises(ValueError):
        Circuit(2, (cir.x(2),))


def test_compose_with_empty_is_identity(rng):
    c = random_circuit(rng, 4, 10)
    assert compose(Circuit(4), c).ops == c.ops


def test_compose_width_mismatch():
    with pytest.raises(ValueError):
        compose(Circuit(2), Circuit(3))


def test_compose_with_inverse_is_identity(rng):
    c = random_circuit(rng, 5, 40)
    s = random_state(rng, 5)
    out = simulate(compose(c, inverse(c)), s)
    assert np.max(np.abs(out.amps - s.amps)) < 1e-9


def test_zero_reflection_twice_is_identity(rng):
    u0 = build_zero_reflection(4)
    s = random_state(rng, 4)
    out = simulate(compose(u0, u0), s)
    assert np.max(np.abs(out.amps - s.amps)) < 1e-12


def test_inverse_involution(rng):
    c = random_circuit(rng, 6, 50)
    assert inverse(inverse(c)) == c


def test_inverse_of_single_ry():
    (op,) = inverse(Circuit(1, (cir.ry(0.7, 0),))).ops
    assert op.kind == "ry" and op.angle == -0.7


def test_inverse_keeps_controls_and_fixed_gates():
    c = Circuit(3, (cir.h(0, [(1, 0)]), cir.z(2, [(0, 1), (1, 1)]), cir.ry(0.3, 1, [(2, 0)])))
    inv = inverse(c)
    assert [op.kind for op in inv.ops] == ["ry", "z", "h"]
    assert inv.ops[0].controls == ((2, 0),) and inv.ops[0].angle == -0.3
    assert inv.ops[1] == c.ops[1]


def test_uniform_prep_round_trip():
    un = build_uniform_prep(273)
    s = simulate(inverse(un), simulate(un, init_zero_state(9)))
    expected = np.zeros(512)
    expected[0] = 1
    assert np.max(np.abs(s.amps - expected)) < 1e-9


def test_metrics_empty():
    c = Circuit(3)
    assert (gate_count(c), depth(c)) == (0, 0)


def test_metrics_layer_of_hadamards():
    c = Circuit(9, tuple(cir.h(q) for q in range(9)))
    assert (gate_count(c), depth(c)) == (9, 1)


def test_metrics_uniform_prep_273():
    c = build_uniform_prep(273)
    assert gate_count(c) <= 3 * 9
    assert gate_count(c) == 12


def test_depth_greedy_layering():
    c = Circuit(3, (cir.h(0), cir.h(1), cir.x(2, [(0, 1)]), cir.h(1), cir.z(1, [(2, 1)])))
    # layers: {h0,h1} {cx02, h1} {cz21}
    assert depth(c) == 3


@given(circuits(max_qubits=6, max_gates=25))
def test_depth_bounded_by_gate_count(c):
    assert depth(c) <= gate_count(c)


@given(st.integers(2, 6), st.integers(0, 40))
def test_depth_equals_count_when_sharing_a_qubit(n, m):
    rng = np.random.default_rng(n * 100 + m)
    ops = []
    for _ in range(m):
        if rng.random() < 0.5:
            ops.append(cir.h(0, [(int(rng.integers(1, n)), 1)]))
        else:
            ops.append(cir.x(int(rng.integers(1, n)), [(0, 0)]))
    c = Circuit(n, tuple(ops))
    assert depth(c) == gate_count(c)


def test_simulate_uniform_273():
    p = probabilities(simulate(build_uniform_prep(273), init_zero_state(9)))
    assert np.max(np.abs(p[:273] - 1 / 273)) < 1e-12
    assert np.max(p[273:]) < 1e-24


def test_x_twice(rng):
    s = random_state(rng, 3)
    out = simulate(Circuit(3, (cir.x(1), cir.x(1))), s)
    assert np.array_equal(out.amps, s.amps)


def test_simulate_width_mismatch():
    with pytest.raises(ValueError):
        simulate(Circuit(2), init_zero_state(3))


def test_simulate_does_not_touch_input(rng):
    s = random_state(rng, 3)
    before = s.amps.copy()
    simulate(random_circuit(rng, 3, 10), s)
    assert np.array_equal(s.amps, before)


@given(circuits(max_qubits=6, max_gates=20), st.integers(0, 2**32 - 1))
@settings(max_examples=100)
def test_simulate_matches_dense_matrix(c, seed):
    s = random_state(np.random.default_rng(seed), c.n_qubits)
    out = simulate(c, s)
    assert np.max(np.abs(out.amps - dense_of(c) @ s.amps)) < 1e-12


@given(circuits(max_qubits=6, max_gates=20), circuits(max_qubits=6, max_gates=20), st.integers(0, 2**32 - 1))
def test_simulate_compose_is_sequential(a, b, seed):
    if a.n_qubits != b.n_qubits:
        b = Circuit(a.n_qubits)
    s = random_state(np.random.default_rng(seed), a.n_qubits)
    lhs = simulate(compose(a, b), s)
    rhs = simulate(b, simulate(a, s))
    assert np.max(np.abs(lhs.amps - rhs.amps)) < 1e-12


def test_inverse_round_trip_random_large(rng):
    for _ in range(20):
        n = int(rng.integers(1, 11))
        c = random_circuit(rng, n, int(rng.integers(0, 201)))
        s = random_state(rng, n)
        out = simulate(inverse(c), simulate(c, s))
        assert np.max(np.abs(out.amps - s.amps)) < 1e-9


# --- OpenQASM 3 -------------------------------------------------------------


def test_qasm_empty_circuit():
    text = to_qasm3(Circuit(1))
    code = [l for l in text.splitlines() if l and not l.startswith("//")]
    assert code == ["OPENQASM 3.0;", 'include "stdgates.inc";', "qubit[1] q;"]


def test_qasm_single_h():
    text = to_qasm3(Circuit(1, (cir.h(0),)))
    assert text.splitlines()[-1] == "h q[0];"


def test_qasm_negative_controls_use_modifier():
    c = Circuit(4, (cir.h(0, [(3, 0)]), cir.ry(0.5, 1, [(0, 0), (2, 1), (3, 1)])))
    lines = to_qasm3(c).splitlines()
    assert lines[-2] == "negctrl @ h q[3], q[0];"
    assert lines[-1] == "negctrl @ ctrl(2) @ ry(5.0000000000000000e-01) q[0], q[2], q[3], q[1];"
    assert not any(l.startswith("x ") for l in lines)


def test_qasm_angles_round_trip_exactly():
    theta = -2 * math.acos(math.sqrt(1 / 273))
    (gate,) = parse_qasm_gates(to_qasm3(Circuit(1, (cir.ry(theta, 0),))))[1]
    assert gate[3] == theta
    digits = cir.format_angle(theta).split("e")[0].replace("-", "").replace(".", "")
    assert len(digits) >= 17


def test_qasm_deterministic(rng):
    c = random_circuit(rng, 5, 30)
    assert to_qasm3(c) == to_qasm3(Circuit(c.n_qubits, c.ops, c.label))


def test_qasm_grover_block_notes_global_phase():
    from arbgrover.grover import SearchSpec, build_oracle, grover_operator

    g = grover_operator(build_uniform_prep(5), build_oracle(SearchSpec(5, {1}))).circuit
    assert "global phase" in to_qasm3(g)


@given(circuits(max_qubits=5, max_gates=15))
@settings(max_examples=50)
def test_qasm_parses_and_resimulates(c):
    text = to_qasm3(c)
    openqasm3.parse(text)
    expected = simulate(c, init_zero_state(c.n_qubits)).amps
    assert np.max(np.abs(simulate_qasm(text) - expected)) < 1e-12


def test_qasm_header_records_metrics():
    c = build_uniform_prep(273)
    text = to_qasm3(c)
    assert "// N: 273" in text
    assert f"gate_count: {gate_count(c)}" in text and f"depth: {depth(c)}" in text
