"""Gate-level circuit IR over the alphabet {X, H, Z, RY} with polarity-tagged controls."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from arbgrover import qcore
from arbgrover.qcore import Control, StateVector

GATE_KINDS = ("x", "h", "z", "ry")

_SQRT1_2 = 1.0 / math.sqrt(2.0)
_FIXED = {
    "x": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "h": np.array([[_SQRT1_2, _SQRT1_2], [_SQRT1_2, -_SQRT1_2]], dtype=np.complex128),
    "z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


def ry_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


@dataclass(frozen=True)
class GateOp:
    kind: str
    target: int
    controls: tuple[Control, ...] = ()
    angle: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}; expected one of {GATE_KINDS}")
        if self.kind == "ry" and not math.isfinite(self.angle):
            raise ValueError("RY angle must be finite")
        controls = tuple((int(q), int(p)) for q, p in self.controls)
        object.__setattr__(self, "controls", controls)
        qubits = (int(self.target), *(q for q, _ in controls))
        if len(set(qubits)) != len(qubits):
            raise ValueError(f"gate qubits must be distinct: target {self.target}, controls {qubits[1:]}")
        if any(p not in (0, 1) for _, p in controls):
            raise ValueError("control polarity must be 0 or 1")
        object.__setattr__(self, "_qubits", qubits)

    @property
    def qubits(self) -> tuple[int, ...]:
        return self._qubits

    def matrix(self) -> np.ndarray:
        if self.kind == "ry":
            return ry_matrix(self.angle)
        return _FIXED[self.kind]

    def dagger(self) -> GateOp:
        if self.kind == "ry":
            return GateOp("ry", self.target, self.controls, -self.angle)
        return self


def x(target: int, controls: Sequence[Control] = ()) -> GateOp:
    return GateOp("x", target, tuple(controls))


def h(target: int, controls: Sequence[Control] = ()) -> GateOp:
    return GateOp("h", target, tuple(controls))


def z(target: int, controls: Sequence[Control] = ()) -> GateOp:
    return GateOp("z", target, tuple(controls))


def ry(theta: float, target: int, controls: Sequence[Control] = ()) -> GateOp:
    return GateOp("ry", target, tuple(controls), float(theta))


@dataclass(frozen=True)
class Circuit:
    """Immutable ordered gate list on ``n_qubits`` qubits.

    ``meta`` carries free-form annotations (for example the search-space size)
    that the QASM header records; it does not affect the unitary.
    """

    n_qubits: int
    ops: tuple[GateOp, ...] = ()
    label: str = ""
    meta: tuple[tuple[str, str], ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError(f"circuit needs at least one qubit, got {self.n_qubits}")
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            for q in op._qubits:
                if not 0 <= q < self.n_qubits:
                    raise ValueError(f"{op} references a qubit outside [0, {self.n_qubits})")

    def __len__(self) -> int:
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def with_label(self, label: str, **meta) -> Circuit:
        return replace(self, label=label, meta=tuple((k, str(v)) for k, v in meta.items()))


def compose(a: Circuit, b: Circuit, label: str | None = None) -> Circuit:
    """``a`` followed by ``b``."""
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"width mismatch: {a.n_qubits} vs {b.n_qubits} qubits")
    if label is None:
        label = "+".join(s for s in (a.label, b.label) if s)
    return Circuit(a.n_qubits, a.ops + b.ops, label)


def concat(n_qubits: int, parts: Iterable[Circuit], label: str = "") -> Circuit:
    ops: list[GateOp] = []
    for part in parts:
        if part.n_qubits != n_qubits:
            raise ValueError(f"width mismatch: {part.n_qubits} vs {n_qubits} qubits")
        ops.extend(part.ops)
    return Circuit(n_qubits, tuple(ops), label)


def inverse(c: Circuit) -> Circuit:
    label = c.label[:-1] if c.label.endswith("†") else (c.label + "†" if c.label else "")
    return Circuit(c.n_qubits, tuple(op.dagger() for op in reversed(c.ops)), label, c.meta)


def gate_count(c: Circuit) -> int:
    return len(c.ops)


def depth(c: Circuit) -> int:
    """Greedy ASAP layering: an op lands one layer past the latest op on any of its qubits."""
    frontier = [0] * c.n_qubits
    result = 0
    for op in c.ops:
        qubits = op.qubits
        layer = 1 + max([frontier[q] for q in qubits])
        for q in qubits:
            frontier[q] = layer
        result = max(result, layer)
    return result


def simulate(c: Circuit, state: StateVector, copy: bool = True) -> StateVector:
    if c.n_qubits != state.n_qubits:
        raise ValueError(f"width mismatch: circuit has {c.n_qubits} qubits, state has {state.n_qubits}")
    out = state.copy() if copy else state
    for op in c.ops:
        qcore.apply_gate(out, op.controls, op.target, op.matrix())
    return out


def _qubit_ref(q: int) -> str:
    return f"q[{q}]"


def _modifier(controls: Sequence[Control]) -> str:
    # runs of equal polarity collapse into ctrl(k)/negctrl(k)
    parts = []
    i = 0
    while i < len(controls):
        j = i
        while j < len(controls) and controls[j][1] == controls[i][1]:
            j += 1
        word = "ctrl" if controls[i][1] == 1 else "negctrl"
        run = j - i
        parts.append(f"{word} @ " if run == 1 else f"{word}({run}) @ ")
        i = j
    return "".join(parts)


def format_angle(theta: float) -> str:
    return format(theta, ".16e")


def qasm_statement(op: GateOp) -> str:
    name = op.kind if op.kind != "ry" else f"ry({format_angle(op.angle)})"
    args = ", ".join(_qubit_ref(q) for q, _ in op.controls)
    args = f"{args}, {_qubit_ref(op.target)}" if args else _qubit_ref(op.target)
    return f"{_modifier(op.controls)}{name} {args};"


def to_qasm3(c: Circuit) -> str:
    """Render ``c`` as a self-contained OpenQASM 3 program.

    Zero-controls use the ``negctrl`` modifier directly.  Angles carry 17
    significant digits so the text round-trips to the same doubles.
    """
    lines = ["OPENQASM 3.0;", 'include "stdgates.inc";']
    lines.append(f"// block: {c.label or 'circuit'}")
    for key, value in c.meta:
        lines.append(f"// {key}: {value}")
    lines.append(f"// qubits: {c.n_qubits}  gate_count: {gate_count(c)}  depth: {depth(c)}")
    lines.append("// qubit k is bit k of the basis index (q[0] least significant)")
    if c.label.startswith("grover"):
        lines.append("// the global phase -1 of each Grover iteration is omitted")
    lines.append(f"qubit[{c.n_qubits}] q;")
    lines.extend(qasm_statement(op) for op in c.ops)
    return "\n".join(lines) + "\n"
