"""Dense state-vector simulation kernel.

Qubit ``q`` is bit ``q`` of the basis index (qubit 0 is the least significant
bit).  This convention is shared by every module in the package, including the
QASM emitter.

Gates are applied in place through a ``(2,) * n`` tensor view of the amplitude
array, so a single (multi-)controlled gate costs ``O(2**n)`` with no dense
matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_QUBITS = 24

Control = tuple[int, int]


@dataclass(eq=False)
class StateVector:
    """Amplitudes of an ``n_qubits`` register.  Mutated in place by the kernel functions."""

    n_qubits: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        self.amps = np.asarray(self.amps, dtype=np.complex128)
        if self.amps.shape != (1 << self.n_qubits,):
            raise ValueError(
                f"expected {1 << self.n_qubits} amplitudes for {self.n_qubits} qubits, "
                f"got shape {self.amps.shape}"
            )

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    def copy(self) -> StateVector:
        return StateVector(self.n_qubits, self.amps.copy())

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self.amps, self.amps).real))

    def _tensor(self) -> np.ndarray:
        # axis k of the view holds qubit n-1-k
        return self.amps.reshape((2,) * self.n_qubits)


def _check_width(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1 or n > MAX_QUBITS:
        raise ValueError(f"qubit count must be in [1, {MAX_QUBITS}], got {n!r}")


def init_zero_state(n: int) -> StateVector:
    _check_width(n)
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(int(n), amps)


def basis_state(n: int, index: int) -> StateVector:
    _check_width(n)
    if not 0 <= index < (1 << n):
        raise ValueError(f"basis index {index} out of range for {n} qubits")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(int(n), amps)


def unitary2(matrix, check: bool = True, atol: float = 1e-12) -> np.ndarray:
    """Coerce ``matrix`` to a 2x2 complex array, optionally checking U^dag U = I."""
    u = np.asarray(matrix, dtype=np.complex128)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {u.shape}")
    if check and not np.allclose(u.conj().T @ u, np.eye(2), rtol=0.0, atol=atol):
        raise ValueError("matrix is not unitary")
    return u


def validate_controls(n_qubits: int, controls: Sequence[Control], target: int) -> None:
    if not 0 <= target < n_qubits:
        raise IndexError(f"target qubit {target} out of range for {n_qubits} qubits")
    seen = {target}
    for qubit, polarity in controls:
        if not 0 <= qubit < n_qubits:
            raise IndexError(f"control qubit {qubit} out of range for {n_qubits} qubits")
        if polarity not in (0, 1):
            raise ValueError(f"control polarity must be 0 or 1, got {polarity!r}")
        if qubit in seen:
            raise ValueError(f"qubit {qubit} used more than once in a gate")
        seen.add(qubit)


def apply_gate(
    state: StateVector,
    controls: Sequence[Control],
    target: int,
    u: np.ndarray,
) -> StateVector:
    """Apply the 2x2 unitary ``u`` to ``target`` when every control matches its polarity.

    ``controls`` is a list of ``(qubit, polarity)`` pairs; polarity 0 fires the
    gate when the control qubit is |0>.
    """
    n = state.n_qubits
    validate_controls(n, controls, target)
    psi = state._tensor()
    index: list = [slice(None)] * n
    for qubit, polarity in controls:
        index[n - 1 - qubit] = polarity
    axis = n - 1 - target
    index[axis] = 0
    idx0 = tuple(index)
    index[axis] = 1
    idx1 = tuple(index)

    a0 = psi[idx0].copy()
    a1 = psi[idx1]
    u00, u01, u10, u11 = u[0, 0], u[0, 1], u[1, 0], u[1, 1]
    # a1 is a view; compute the new |0> half before overwriting it
    new0 = u00 * a0 + u01 * a1
    psi[idx1] = u10 * a0 + u11 * a1
    psi[idx0] = new0
    return state


def _check_indices(state: StateVector, indices: Iterable[int]) -> np.ndarray:
    idx = np.fromiter((int(i) for i in indices), dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= state.dim):
        raise IndexError(f"basis index out of range for {state.n_qubits} qubits")
    return np.unique(idx)


def phase_flip_indices(state: StateVector, indices: Iterable[int]) -> StateVector:
    """Negate the amplitudes at ``indices`` (the diagonal operator I - 2P)."""
    idx = _check_indices(state, indices)
    state.amps[idx] *= -1.0
    return state


def apply_global_phase_minus(state: StateVector) -> StateVector:
    np.negative(state.amps, out=state.amps)
    return state


def probabilities(state: StateVector) -> np.ndarray:
    a = state.amps
    return a.real * a.real + a.imag * a.imag


def sample(state: StateVector, shots: int, seed: int) -> dict[int, int]:
    """Draw ``shots`` basis indices by inverse-CDF sampling.

    Uniform variates come from ``numpy.random.default_rng(seed)`` (PCG64), so the
    histogram is a pure function of ``(state, shots, seed)``.  Returns a dict
    mapping basis index to count, ordered by index.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    p = probabilities(state)
    cdf = np.cumsum(p)
    cdf /= cdf[-1]
    u = np.random.default_rng(seed).random(int(shots))
    drawn = np.searchsorted(cdf, u, side="right")
    # guard against round-off pushing a draw past the last populated index
    last = int(np.flatnonzero(p)[-1])
    np.minimum(drawn, last, out=drawn)
    values, counts = np.unique(drawn, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def inner_product(a: StateVector, b: StateVector) -> complex:
    """<a|b>, conjugating the first argument."""
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"width mismatch: {a.n_qubits} vs {b.n_qubits} qubits")
    return complex(np.vdot(a.amps, b.amps))
