"""Ancilla-free preparation of the uniform superposition over the first ``N`` basis states.

For ``N = 2**l_0 + 2**l_1 + ... + 2**l_k`` (``l_0 < ... < l_k``) the circuit
peels off blocks of ``2**l_j`` indices from the top of ``[0, N)``, one RY
rotation per set bit, and spreads each block with zero-controlled Hadamards.
The gate count is ``2k + l_k``, at most ``3 * ceil(log2 N)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from arbgrover import circuit as cir
from arbgrover import qcore
from arbgrover.circuit import Circuit
from arbgrover.qcore import StateVector


@dataclass(frozen=True)
class BitDecomposition:
    N: int
    positions: tuple[int, ...]

    @property
    def n_qubits(self) -> int:
        return num_qubits(self.N)

    @property
    def is_power_of_two(self) -> bool:
        return len(self.positions) == 1


def num_qubits(N: int) -> int:
    """ceil(log2 N) computed exactly on integers."""
    return (int(N) - 1).bit_length()


def _check_size(N: int) -> int:
    if isinstance(N, bool) or not isinstance(N, int) or N < 2:
        raise ValueError(f"N must be an integer >= 2, got {N!r}")
    return N


def bit_positions(N: int) -> BitDecomposition:
    _check_size(N)
    return BitDecomposition(N, tuple(b for b in range(N.bit_length()) if (N >> b) & 1))


def _angle(numerator: int, denominator: int) -> float:
    return -2.0 * math.acos(math.sqrt(numerator / denominator))


def build_uniform_prep(N: int) -> Circuit:
    dec = bit_positions(N)
    n = dec.n_qubits
    meta = {"N": N}
    if dec.is_power_of_two:
        return Circuit(n, tuple(cir.h(q) for q in range(n))).with_label("prep", **meta)

    l = dec.positions
    k = len(l) - 1
    ops = [cir.x(l[j]) for j in range(1, k + 1)]
    ops += [cir.h(q) for q in range(l[0])]

    mass = 1 << l[0]
    ops.append(cir.ry(_angle(mass, N), l[1]))
    ops += [cir.h(q, [(l[1], 0)]) for q in range(l[0], l[1])]

    for m in range(1, k):
        ops.append(cir.ry(_angle(1 << l[m], N - mass), l[m + 1], [(l[m], 0)]))
        ops += [cir.h(q, [(l[m + 1], 0)]) for q in range(l[m], l[m + 1])]
        mass += 1 << l[m]

    return Circuit(n, tuple(ops)).with_label("prep", **meta)


def prepare_uniform(N: int) -> StateVector:
    c = build_uniform_prep(N)
    return cir.simulate(c, qcore.init_zero_state(c.n_qubits), copy=False)
