"""The counting engine: graded argument strength from damped walk counts.

Each argument starts at full strength 1 and loses strength for attackers and
regains it for defenders, with walks of length l discounted by alpha^l.  The
signed, damped series over normalized walk counts has the fixed point

    v = e - alpha * (A / N) * v

where A is the attack matrix and N its infinity norm.  ``iterate`` runs the
damped fixed-point iteration from v = e until successive iterates differ by
at most epsilon in the infinity norm; ``solve_direct`` solves the linear
system outright and serves as an independent oracle.  Every iterate stays in
[0, 1] componentwise, and unattacked arguments keep strength exactly 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .framework import ArgumentationFramework

DEFAULT_ALPHA = 0.98
DEFAULT_EPSILON = 1e-3
DEFAULT_MAX_ITER = 10_000


@dataclass(frozen=True)
class CountingParams:
    """Damping factor, termination tolerance, and iteration safeguard."""

    alpha: float = DEFAULT_ALPHA
    epsilon: float = DEFAULT_EPSILON
    max_iter: int = DEFAULT_MAX_ITER

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not self.epsilon > 0.0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be at least 1, got {self.max_iter}")


@dataclass(frozen=True)
class ValuationTrace:
    """Full iteration history: iterates v(0)..v(k) and per-step deltas.

    ``deltas[k-1]`` is the infinity-norm change from v(k-1) to v(k).
    ``converged`` is False when the safeguard ran out before the tolerance
    was met; the final iterate is still recorded.
    """

    iterates: tuple[tuple[float, ...], ...]
    deltas: tuple[float, ...]
    alpha: float
    epsilon: float
    normalization: int
    converged: bool

    @property
    def iterations(self) -> int:
        return len(self.iterates) - 1

    @property
    def final(self) -> tuple[float, ...]:
        return self.iterates[-1]


def simple_counting(af: ArgumentationFramework, max_length: int) -> tuple[int, ...]:
    """Signed walk-count totals up to ``max_length``, exactly.

    Counts every even-length walk into an argument as +1 (a defender) and
    every odd-length walk as -1 (an attacker).  Values are unbounded integers
    of either sign; in cyclic graphs they diverge as the length cap grows.
    """
    if max_length < 0:
        raise ValueError("walk length must be non-negative")
    rows = af.attack_matrix().rows
    n = len(af)
    walks = [1] * n  # A^l e, starting at l = 0
    totals = [1] * n
    sign = 1
    for _ in range(max_length):
        walks = [sum(walks[j] for j in row) for row in rows]
        sign = -sign
        for i in range(n):
            totals[i] += sign * walks[i]
    return tuple(totals)


def normalization_factor(af: ArgumentationFramework) -> int:
    """Infinity norm of the attack matrix: the largest attacker count."""
    return af.attack_matrix().max_row_sum()


def iterate(
    af: ArgumentationFramework, params: CountingParams | None = None
) -> tuple[tuple[float, ...], ValuationTrace]:
    """Damped fixed-point iteration for the counting strengths.

    Starts from all-ones and applies v <- e - (alpha/N) A v until the
    infinity-norm step delta drops to epsilon or ``max_iter`` runs out.
    A framework with no attacks at all has N = 0 and returns e immediately.
    Per-row sums accumulate in ascending index order, so results are
    bit-reproducible.
    """
    p = params or CountingParams()
    n = len(af)
    rows = af.attack_matrix().rows
    nfac = max((len(r) for r in rows), default=0)
    v = [1.0] * n
    iterates = [tuple(v)]
    if nfac == 0:
        trace = ValuationTrace(tuple(iterates), (), p.alpha, p.epsilon, 0, True)
        return tuple(v), trace
    scale = p.alpha / nfac
    deltas: list[float] = []
    converged = False
    for _ in range(p.max_iter):
        nxt = [0.0] * n
        for i, row in enumerate(rows):
            s = 0.0
            for j in row:
                s += v[j]
            nxt[i] = 1.0 - scale * s
        delta = max(abs(a - b) for a, b in zip(nxt, v))
        v = nxt
        iterates.append(tuple(v))
        deltas.append(delta)
        if delta <= p.epsilon:
            converged = True
            break
    trace = ValuationTrace(
        tuple(iterates), tuple(deltas), p.alpha, p.epsilon, nfac, converged
    )
    return tuple(v), trace


def solve_direct(af: ArgumentationFramework, alpha: float) -> tuple[float, ...]:
    """Closed-form strengths by solving (I + (alpha/N) A) v = e directly.

    The damped series is the Neumann expansion of this system's solution and
    the system is nonsingular for any alpha in (0, 1), since the scaled
    attack matrix has spectral radius at most 1.  Dense LU with partial
    pivoting; intended as the oracle for :func:`iterate` at desk scale.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    n = len(af)
    if n == 0:
        return ()
    rows = af.attack_matrix().rows
    nfac = max((len(r) for r in rows), default=0)
    if nfac == 0:
        return (1.0,) * n
    system = np.eye(n)
    scale = alpha / nfac
    for i, row in enumerate(rows):
        for j in row:
            system[i, j] += scale
    solution = np.linalg.solve(system, np.ones(n))
    return tuple(float(x) for x in solution)


def counting_semantics(
    af: ArgumentationFramework, params: CountingParams | None = None
) -> tuple[float, ...]:
    """Per-argument strengths in [0, 1], index-aligned with the framework.

    The exact semantics is the limit of the damped series; this returns the
    iterate whose last step changed by at most epsilon, an approximation
    within epsilon * alpha / (1 - alpha) of that limit.
    """
    strengths, _ = iterate(af, params)
    return strengths
