"""Grover search and amplitude amplification for search spaces of arbitrary size.

The uniform-superposition preparation over ``N`` basis states uses
``ceil(log2 N)`` qubits, no ancillas, and ``O(log N)`` gates, so the number of
Grover iterations is ``floor(pi/4 * sqrt(N/M))`` instead of the rounded-up
``floor(pi/4 * sqrt(2**n/M))``.
"""

from arbgrover.qcore import (
    MAX_QUBITS,
    StateVector,
    apply_gate,
    apply_global_phase_minus,
    init_zero_state,
    inner_product,
    phase_flip_indices,
    probabilities,
    sample,
)
from arbgrover.circuit import Circuit, GateOp, compose, depth, gate_count, inverse, simulate, to_qasm3
from arbgrover.stateprep import bit_positions, build_uniform_prep, prepare_uniform
from arbgrover.grover import (
    SearchReport,
    SearchSpec,
    amplitude_amplify,
    build_oracle,
    build_zero_reflection,
    grover_operator,
    optimal_iterations,
    run_search,
    theoretical_success,
)
from arbgrover.analysis import (
    ImprovementRow,
    asymptotic_eta,
    asymptotic_factor,
    eta,
    improvement_factor,
    series_pow2plus1,
    sweep,
    t_new,
    t_old,
    to_csv,
)

__version__ = "0.1.0"
