"""Oracle-call counts for the rounded-up (old) and exact (new) search spaces.

``t_old = floor(pi/4 * sqrt(2**n / M))`` and ``t_new = floor(pi/4 * sqrt(N / M))``
with ``n = ceil(log2 N)``.  Improvement factor ``f = t_old / t_new`` and
percentage improvement ``eta = (1 - 1/f) * 100 = (1 - t_new / t_old) * 100``.
Both are ``None`` when ``t_new == 0`` (``t_old >= t_new``, so this also covers
``t_old == 0``).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Optional

# floors of pi/4*sqrt(x) stay exact in double precision up to here
MAX_N = 1 << 52

CSV_HEADER = (
    "N",
    "n",
    "M",
    "T_old",
    "T_new",
    "f",
    "eta_percent",
    "f_asymptotic",
    "eta_asymptotic_percent",
)


def _n_qubits(N: int) -> int:
    return (N - 1).bit_length()


def _check(N: int, M: int) -> None:
    if isinstance(N, bool) or not isinstance(N, int) or N < 2:
        raise ValueError(f"N must be an integer >= 2, got {N!r}")
    if N > MAX_N:
        raise ValueError(f"N = {N} exceeds the double-precision cap 2**52")
    if isinstance(M, bool) or not isinstance(M, int) or not 1 <= M <= N:
        raise ValueError(f"M must satisfy 1 <= M <= N = {N}, got {M!r}")


def quarter_pi_sqrt_floor(numerator: int, denominator: int = 1) -> int:
    """floor(pi/4 * sqrt(numerator/denominator)); integer radicand converted to double once."""
    return math.floor(math.pi / 4.0 * math.sqrt(numerator / denominator))


def t_old(N: int, M: int = 1) -> int:
    _check(N, M)
    return quarter_pi_sqrt_floor(1 << _n_qubits(N), M)


def t_new(N: int, M: int = 1) -> int:
    _check(N, M)
    return quarter_pi_sqrt_floor(N, M)


def improvement_factor(N: int, M: int = 1) -> Optional[float]:
    old, new = t_old(N, M), t_new(N, M)
    return None if new == 0 else old / new


def _eta(old: int, new: int) -> Optional[float]:
    return None if new == 0 else (1.0 - new / old) * 100.0


def eta(N: int, M: int = 1) -> Optional[float]:
    return _eta(t_old(N, M), t_new(N, M))


def asymptotic_factor(N: int) -> float:
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    return math.sqrt((1 << _n_qubits(N)) / N)


def asymptotic_eta(N: int) -> float:
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    return (1.0 - math.sqrt(N / (1 << _n_qubits(N)))) * 100.0


@dataclass(frozen=True)
class ImprovementRow:
    N: int
    n: int
    M: int
    t_old: int
    t_new: int
    f: Optional[float]
    eta_percent: Optional[float]
    f_asymptotic: float
    eta_asymptotic_percent: float

    @classmethod
    def compute(cls, N: int, M: int = 1) -> ImprovementRow:
        old, new = t_old(N, M), t_new(N, M)
        return cls(
            N=N,
            n=_n_qubits(N),
            M=M,
            t_old=old,
            t_new=new,
            f=None if new == 0 else old / new,
            eta_percent=_eta(old, new),
            f_asymptotic=asymptotic_factor(N),
            eta_asymptotic_percent=asymptotic_eta(N),
        )

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "n": self.n,
            "M": self.M,
            "T_old": self.t_old,
            "T_new": self.t_new,
            "f": self.f,
            "eta_percent": self.eta_percent,
            "f_asymptotic": self.f_asymptotic,
            "eta_asymptotic_percent": self.eta_asymptotic_percent,
        }


def sweep(N_from: int, N_to: int, M: int = 1) -> list[ImprovementRow]:
    """One row per N in ``[N_from, N_to]`` with ``M <= N``, ascending."""
    if N_from < 2 or N_to < N_from:
        raise ValueError(f"empty or invalid range {N_from}..{N_to}")
    if N_to > MAX_N:
        raise ValueError(f"N_to = {N_to} exceeds the double-precision cap 2**52")
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    return [ImprovementRow.compute(N, M) for N in range(max(N_from, M), N_to + 1)]


def series_pow2plus1(n_from: int, n_to: int, M: int = 1) -> list[ImprovementRow]:
    """Rows for ``N = 2**(n-1) + 1``, ``n`` in ``[n_from, n_to]``."""
    if n_from < 2 or n_to < n_from:
        raise ValueError(f"empty or invalid range {n_from}..{n_to} (need 2 <= from <= to)")
    if (1 << (n_to - 1)) + 1 > MAX_N:
        raise ValueError(f"n_to = {n_to} exceeds the double-precision cap 2**52")
    rows = []
    for n in range(n_from, n_to + 1):
        N = (1 << (n - 1)) + 1
        if M <= N:
            rows.append(ImprovementRow.compute(N, M))
    return rows


def _fmt(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.6f}"


def to_csv(rows: Iterable[ImprovementRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(
            [
                r.N,
                r.n,
                r.M,
                r.t_old,
                r.t_new,
                _fmt(r.f),
                _fmt(r.eta_percent),
                _fmt(r.f_asymptotic),
                _fmt(r.eta_asymptotic_percent),
            ]
        )
    return buf.getvalue()
