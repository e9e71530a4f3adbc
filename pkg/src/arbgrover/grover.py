"""Oracle and reflection blocks, the Grover operator, and the search driver.

One application of ``Q = -U_psi U_P`` with ``U_psi = A U_0 A^dagger`` is one
oracle call.  The IR leaves out the global ``-1``; :class:`GroverOperator`
applies it during simulation so state-level identities hold exactly, not just
up to phase.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from arbgrover import analysis
from arbgrover import circuit as cir
from arbgrover import qcore
from arbgrover.circuit import Circuit
from arbgrover.qcore import StateVector
from arbgrover.stateprep import build_uniform_prep, num_qubits


@dataclass(frozen=True)
class SearchSpec:
    N: int
    marked: frozenset[int]

    def __post_init__(self) -> None:
        if isinstance(self.N, bool) or not isinstance(self.N, int) or self.N < 2:
            raise ValueError(f"N must be an integer >= 2, got {self.N!r}")
        marked = frozenset(int(x) for x in self.marked)
        if not marked:
            raise ValueError("at least one marked index is required")
        bad = sorted(x for x in marked if not 0 <= x < self.N)
        if bad:
            raise ValueError(f"marked indices {bad} outside [0, {self.N})")
        object.__setattr__(self, "marked", marked)

    @property
    def n_qubits(self) -> int:
        return num_qubits(self.N)

    @property
    def M(self) -> int:
        return len(self.marked)


@dataclass
class SearchReport:
    N: int
    n: int
    M: int
    iterations_used: int
    success_probability: float
    theoretical_probability: float
    t_old: int
    t_new: int
    eta_percent: Optional[float] = None
    histogram: Optional[dict[int, int]] = None
    shots: Optional[int] = None
    seed: Optional[int] = None
    marked: tuple[int, ...] = ()

    @property
    def oracle_calls(self) -> int:
        return self.iterations_used

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "n": self.n,
            "M": self.M,
            "marked": list(self.marked),
            "iterations_used": self.iterations_used,
            "oracle_calls": self.oracle_calls,
            "success_probability": self.success_probability,
            "theoretical_probability": self.theoretical_probability,
            "t_old": self.t_old,
            "t_new": self.t_new,
            "eta_percent": self.eta_percent,
            "shots": self.shots,
            "seed": self.seed,
            "histogram": None
            if self.histogram is None
            else {str(k): v for k, v in sorted(self.histogram.items())},
        }


def _mcz_with_x_mask(n: int, flip_zero_bits_of: int) -> list[cir.GateOp]:
    xs = [cir.x(q) for q in range(n) if not (flip_zero_bits_of >> q) & 1]
    mcz = cir.z(n - 1, [(q, 1) for q in range(n - 1)])
    return xs + [mcz] + xs


def build_oracle(spec: SearchSpec) -> Circuit:
    """Phase oracle flipping the sign of each marked basis state.

    Per marked item: X wherever its bit is 0, a Z on the top qubit controlled by
    all others, then the same X layer again.
    """
    n = spec.n_qubits
    ops: list[cir.GateOp] = []
    for x in sorted(spec.marked):
        ops += _mcz_with_x_mask(n, x)
    marked = ",".join(str(x) for x in sorted(spec.marked))
    return Circuit(n, tuple(ops)).with_label("oracle", N=spec.N, marked=marked)


def build_zero_reflection(n: int) -> Circuit:
    """I - 2|0><0| as X on every qubit, multi-controlled Z, X on every qubit."""
    if n < 1:
        raise ValueError(f"qubit count must be >= 1, got {n}")
    return Circuit(n, tuple(_mcz_with_x_mask(n, 0))).with_label("zero-reflection")


@dataclass(frozen=True)
class GroverOperator:
    """The blocks of one Grover iteration plus the global-phase flag.

    ``circuit`` is ``[oracle; prep^dagger; zero_reflection; prep]``.  When
    ``marked`` is known, :meth:`apply_fast` replaces the oracle and the zero
    reflection by direct phase flips.
    """

    prep: Circuit
    oracle: Circuit
    zero_reflection: Circuit
    circuit: Circuit
    global_phase_minus: bool = True
    marked: Optional[frozenset[int]] = field(default=None, compare=False)

    @property
    def n_qubits(self) -> int:
        return self.circuit.n_qubits

    @cached_property
    def _prep_dagger(self) -> Circuit:
        return cir.inverse(self.prep)

    def apply(self, state: StateVector) -> StateVector:
        cir.simulate(self.circuit, state, copy=False)
        if self.global_phase_minus:
            qcore.apply_global_phase_minus(state)
        return state

    def apply_fast(self, state: StateVector) -> StateVector:
        if self.marked is None:
            return self.apply(state)
        qcore.phase_flip_indices(state, self.marked)
        cir.simulate(self._prep_dagger, state, copy=False)
        qcore.phase_flip_indices(state, (0,))
        cir.simulate(self.prep, state, copy=False)
        if self.global_phase_minus:
            qcore.apply_global_phase_minus(state)
        return state


def grover_operator(
    prep: Circuit, oracle: Circuit, marked: Optional[Iterable[int]] = None
) -> GroverOperator:
    if prep.n_qubits != oracle.n_qubits:
        raise ValueError(f"width mismatch: prep {prep.n_qubits} vs oracle {oracle.n_qubits} qubits")
    n = prep.n_qubits
    u0 = build_zero_reflection(n)
    full = cir.concat(n, [oracle, cir.inverse(prep), u0, prep], label="grover")
    meta = dict(oracle.meta)
    meta.update(prep.meta)
    full = full.with_label("grover", **meta)
    return GroverOperator(
        prep=prep,
        oracle=oracle,
        zero_reflection=u0,
        circuit=full,
        global_phase_minus=True,
        marked=None if marked is None else frozenset(int(x) for x in marked),
    )


def _check_counts(N: int, M: int) -> None:
    if M < 1 or M > N:
        raise ValueError(f"need 1 <= M <= N, got M={M}, N={N}")


def optimal_iterations(N: int, M: int = 1) -> int:
    """floor(pi/4 * sqrt(N/M)); may be 0 when M/N is large."""
    _check_counts(N, M)
    return analysis.quarter_pi_sqrt_floor(N, M)


def theoretical_success(N: int, M: int, k: int) -> float:
    _check_counts(N, M)
    if k < 0:
        raise ValueError(f"iteration count must be >= 0, got {k}")
    theta = math.asin(math.sqrt(M / N))
    return math.sin((2 * k + 1) * theta) ** 2


def run_search(
    spec: SearchSpec,
    k: Optional[int] = None,
    shots: Optional[int] = None,
    seed: Optional[int] = None,
    fast: bool = True,
) -> SearchReport:
    """Prepare the uniform state over ``[0, N)``, apply Q ``k`` times, and report.

    ``k`` defaults to :func:`optimal_iterations`.  With ``fast=False`` every
    block is simulated gate by gate from its circuit.
    """
    M = spec.M
    if k is None:
        k = optimal_iterations(spec.N, M)
    if k < 0:
        raise ValueError(f"iteration count must be >= 0, got {k}")

    prep = build_uniform_prep(spec.N)
    op = grover_operator(prep, build_oracle(spec), marked=spec.marked)
    state = _amplify(op, k, fast)
    probs = qcore.probabilities(state)
    success = float(probs[sorted(spec.marked)].sum())

    histogram = None
    if shots is not None:
        histogram = qcore.sample(state, shots, 0 if seed is None else seed)

    row = analysis.ImprovementRow.compute(spec.N, M)
    return SearchReport(
        N=spec.N,
        n=spec.n_qubits,
        M=M,
        iterations_used=k,
        success_probability=min(1.0, max(0.0, success)),
        theoretical_probability=theoretical_success(spec.N, M, k),
        t_old=row.t_old,
        t_new=row.t_new,
        eta_percent=row.eta_percent,
        histogram=histogram,
        shots=shots,
        seed=seed,
        marked=tuple(sorted(spec.marked)),
    )


def _amplify(op: GroverOperator, k: int, fast: bool) -> StateVector:
    state = cir.simulate(op.prep, qcore.init_zero_state(op.n_qubits), copy=False)
    step = op.apply_fast if fast else op.apply
    for _ in range(k):
        step(state)
    return state


def success_trajectory(spec: SearchSpec, k_max: int, fast: bool = True) -> np.ndarray:
    """Good-state probability after 0..k_max applications of Q."""
    prep = build_uniform_prep(spec.N)
    op = grover_operator(prep, build_oracle(spec), marked=spec.marked)
    state = cir.simulate(prep, qcore.init_zero_state(op.n_qubits), copy=False)
    marked = sorted(spec.marked)
    out = np.empty(k_max + 1)
    out[0] = qcore.probabilities(state)[marked].sum()
    step = op.apply_fast if fast else op.apply
    for k in range(1, k_max + 1):
        step(state)
        out[k] = qcore.probabilities(state)[marked].sum()
    return out


def amplification_angle(prep: Circuit, good: Iterable[int]) -> float:
    """arcsin of the norm of the good-subspace projection of prep|0>."""
    good = sorted(set(int(x) for x in good))
    state = cir.simulate(prep, qcore.init_zero_state(prep.n_qubits), copy=False)
    weight = float(qcore.probabilities(state)[good].sum())
    return math.asin(min(1.0, math.sqrt(weight)))


def amplitude_amplify(prep: Circuit, good: Iterable[int], k: int, fast: bool = True) -> StateVector:
    """Generic amplitude amplification with an arbitrary preparation circuit."""
    good = frozenset(int(x) for x in good)
    if not good:
        raise ValueError("good set must be nonempty")
    dim = 1 << prep.n_qubits
    bad = sorted(x for x in good if not 0 <= x < dim)
    if bad:
        raise ValueError(f"good indices {bad} outside [0, {dim})")
    if k < 0:
        raise ValueError(f"iteration count must be >= 0, got {k}")
    if amplification_angle(prep, good) < 1e-12:
        raise ValueError("degenerate instance: prep|0> has no overlap with the good subspace")
    n = prep.n_qubits
    ops: list[cir.GateOp] = []
    for x in sorted(good):
        ops += _mcz_with_x_mask(n, x)
    oracle = Circuit(n, tuple(ops), "oracle")
    op = grover_operator(prep, oracle, marked=good)
    return _amplify(op, k, fast)
