"""Oscillatory Hamiltonian test systems.

State vectors are stored with the slow block first: q = (q1, q2) with q1 of
length d1 (frequency 0) and q2 of length d2 (frequency omega), and likewise
for p. The model problem is q'' + Omega^2 q = g(q) with g = -grad U.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np


@dataclass(frozen=True)
class Partition:
    """Block sizes and stiff frequency of Omega = diag(0_{d1}, omega*I_{d2})."""

    d1: int
    d2: int
    omega: float

    def __post_init__(self) -> None:
        if self.d1 < 0 or self.d2 < 1:
            raise ValueError("need d1 >= 0 and d2 >= 1")
        # omega = 0 is allowed: it collapses the fast block onto the slow one,
        # which the non-stiff reduction tests rely on.
        if not (math.isfinite(self.omega) and self.omega >= 0.0):
            raise ValueError("omega must be finite and >= 0")

    @property
    def dim(self) -> int:
        return self.d1 + self.d2


@dataclass(frozen=True)
class State:
    """Position/momentum pair. Value semantics: arrays are copied in."""

    q: np.ndarray
    p: np.ndarray

    def __post_init__(self) -> None:
        q = np.array(self.q, dtype=float, copy=True)
        p = np.array(self.p, dtype=float, copy=True)
        if q.ndim != 1 or q.shape != p.shape:
            raise ValueError("q and p must be 1-d arrays of equal length")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)


@dataclass(frozen=True)
class System:
    """A partition plus potential U and force g = -grad U.

    `initial` is the designated starting state for benchmark trajectories.
    """

    partition: Partition
    potential: Callable[[np.ndarray], float]
    force: Callable[[np.ndarray], np.ndarray]
    label: str
    initial: Optional[State] = None


def oscillatory_energy(part: Partition, s: State) -> float:
    """Energy of the fast subsystem, I = 1/2 |p2|^2 + 1/2 omega^2 |q2|^2."""
    q2 = s.q[part.d1 :]
    p2 = s.p[part.d1 :]
    return 0.5 * float(np.dot(p2, p2)) + 0.5 * part.omega**2 * float(np.dot(q2, q2))


def hamiltonian(sys: System, s: State) -> float:
    """Total energy H = 1/2 |p|^2 + 1/2 omega^2 |q2|^2 + U(q).

    Assembled as I + 1/2 |p1|^2 + U so the split into oscillatory and slow
    energy is exact as computed.
    """
    part = sys.partition
    if s.q.shape != (part.dim,):
        raise ValueError("state does not match system partition")
    p1 = s.p[: part.d1]
    return oscillatory_energy(part, s) + 0.5 * float(np.dot(p1, p1)) + sys.potential(s.q)


def finite_energy_check(part: Partition, s: State, e: float) -> bool:
    """True iff 1/2 |p|^2 + 1/2 |omega*q2|^2 <= e (finite-energy start)."""
    y = part.omega * s.q[part.d1 :]
    val = 0.5 * float(np.dot(s.p, s.p)) + 0.5 * float(np.dot(y, y))
    return val <= e


def fpu_initial(m: int, omega: float) -> State:
    """Benchmark starting data: unit displacement and momentum on the first
    soft spring, 1/omega displacement and unit momentum on the first stiff one."""
    if m < 1:
        raise ValueError("need m >= 1")
    if omega <= 0.0:
        raise ValueError("initial data needs omega > 0")
    q = np.zeros(2 * m)
    p = np.zeros(2 * m)
    q[0] = 1.0
    q[m] = 1.0 / omega
    p[0] = 1.0
    p[m] = 1.0
    return State(q, p)


def fpu_system(m: int, omega: float) -> System:
    """Chain of m stiff springs alternating with quartic soft couplings.

    Positions q[0:m] are the slow (soft) variables and q[m:2m] the stiff ones.
    The quartic potential is

        U(q) = 1/4 [ (q_1 - q_{m+1})^4
                     + sum_{i=1}^{m-1} (q_{i+1} - q_{m+i+1} - q_i - q_{m+i})^4
                     + (q_m + q_{2m})^4 ]

    in 1-based indexing; the force is the hand-derived negative gradient.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    part = Partition(d1=m, d2=m, omega=omega)

    def potential(q: np.ndarray) -> float:
        u = (q[0] - q[m]) ** 4 + (q[m - 1] + q[2 * m - 1]) ** 4
        if m > 1:
            mid = q[1:m] - q[m + 1 :] - q[: m - 1] - q[m : 2 * m - 1]
            u += float(np.sum(mid**4))
        return 0.25 * float(u)

    def force(q: np.ndarray) -> np.ndarray:
        g = np.zeros(2 * m)
        # each quartic term (s)^4/4 contributes s^3 * ds/dq
        s0 = (q[0] - q[m]) ** 3
        g[0] -= s0
        g[m] += s0
        sm = (q[m - 1] + q[2 * m - 1]) ** 3
        g[m - 1] -= sm
        g[2 * m - 1] -= sm
        if m > 1:
            mid = (q[1:m] - q[m + 1 :] - q[: m - 1] - q[m : 2 * m - 1]) ** 3
            g[1:m] -= mid
            g[m + 1 :] += mid
            g[: m - 1] += mid
            g[m : 2 * m - 1] += mid
        return g

    return System(
        partition=part,
        potential=potential,
        force=force,
        label=f"fpu(m={m}, omega={omega:g})",
        initial=fpu_initial(m, omega),
    )


def linear_system(part: Partition) -> System:
    """Force-free problem; its exact flow is the blockwise rotation.

    The designated initial state mirrors the quartic-chain pattern: unit
    data on the first slow coordinate, (1/omega, 1) on the first fast one.
    """
    dim = part.dim

    def potential(q: np.ndarray) -> float:
        return 0.0

    def force(q: np.ndarray) -> np.ndarray:
        return np.zeros(dim)

    q = np.zeros(dim)
    p = np.zeros(dim)
    if part.d1 > 0:
        q[0] = 1.0
        p[0] = 1.0
    q[part.d1] = 1.0 / part.omega if part.omega > 0.0 else 1.0
    p[part.d1] = 1.0
    return System(
        partition=part,
        potential=potential,
        force=force,
        label=f"linear(d1={part.d1}, d2={part.d2}, omega={part.omega:g})",
        initial=State(q, p),
    )
