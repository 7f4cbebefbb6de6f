"""Digital Grover search over a single marked element.

Builds the two reflections (about |0> and about the target), an arbitrary
driver unitary with nonzero start-target overlap, the search iterate

    G = -U I_0 U^{-1} I_w,

and runs the iterated search.  The driver is phase-adjusted so that the
overlap x = <w|U|0> is real and positive; this adjustment never changes G.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePlaneError, OrthogonalStartError
from .linalg import basis_state, is_unitary

#: dense operators are only built up to this register size
MAX_QUBITS = 12

_OVERLAP_EPS = 1e-12


@dataclass(frozen=True)
class SearchProblem:
    """A search instance: n qubits and the single marked index w.

    The indicator function being searched is f(i) = [i == w]; it is
    represented by the index alone.
    """

    n: int
    w: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in [1, {MAX_QUBITS}], got {self.n}")
        if not 0 <= self.w < 2**self.n:
            raise ValueError(f"target index {self.w} out of range [0, {2 ** self.n})")

    @property
    def dim(self) -> int:
        return 2**self.n


@dataclass(frozen=True)
class DriverUnitary:
    """A driver unitary together with its (phase-adjusted) start-target overlap.

    ``matrix`` already carries the phase that makes x = <w|U|0> real positive,
    and theta = arccos(x).
    """

    matrix: np.ndarray
    x: float
    theta: float


def oracle_inverter(problem: SearchProblem) -> np.ndarray:
    """Reflection I - 2|w><w| that flips the phase of the marked basis state.

    Diagonal with entry -1 at (w, w) and +1 elsewhere, so it can be realised
    from oracle access to the indicator function alone.
    """
    d = np.ones(problem.dim, dtype=complex)
    d[problem.w] = -1.0
    return np.diag(d)


def zero_inverter(dim: int) -> np.ndarray:
    """Reflection I - 2|0><0| about the all-zeros basis state."""
    if dim < 2:
        raise ValueError(f"dimension must be at least 2, got {dim}")
    d = np.ones(dim, dtype=complex)
    d[0] = -1.0
    return np.diag(d)


def walsh_hadamard(n: int) -> np.ndarray:
    """The n-qubit Walsh-Hadamard transform.

    Entry (i, j) is 2**(-n/2) * (-1)**popcount(i & j).  Self-inverse, unitary,
    and maps |0> to the uniform superposition.
    """
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count must be in [1, {MAX_QUBITS}], got {n}")
    h = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / math.sqrt(2.0)
    m = np.array([[1.0]], dtype=complex)
    for _ in range(n):
        m = np.kron(m, h)
    return m


def make_driver(matrix, problem: SearchProblem) -> DriverUnitary:
    """Phase-adjust a unitary so <w|U|0> is real positive and package it.

    Raises :class:`OrthogonalStartError` when the overlap is numerically zero
    (the iterate then never moves the start state toward the target) and
    :class:`DegeneratePlaneError` when the start state already is the target.
    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape != (problem.dim, problem.dim):
        raise ValueError(f"driver shape {matrix.shape} does not match dimension {problem.dim}")
    if not is_unitary(matrix):
        raise ValueError("driver matrix is not unitary")
    overlap = complex(matrix[problem.w, 0])
    x = abs(overlap)
    if x < _OVERLAP_EPS:
        raise OrthogonalStartError(
            f"<w|U|0> = {overlap:.3e} is numerically zero; search cannot start"
        )
    if x > 1.0 - _OVERLAP_EPS:
        raise DegeneratePlaneError(
            "start state coincides with the target; nothing to search for"
        )
    adjusted = matrix * (overlap.conjugate() / x)
    return DriverUnitary(matrix=adjusted, x=x, theta=math.acos(x))


def iterate_from_unitary(matrix, problem: SearchProblem) -> np.ndarray:
    """Search iterate ``-U I_0 U^{-1} I_w`` for a raw (not necessarily
    phase-adjusted) unitary driver.

    The two inverters are diagonal, so they are applied as column scalings of
    their neighbours; the result is the exact four-factor product.
    """
    matrix = np.asarray(matrix, dtype=complex)
    dim = problem.dim
    if matrix.shape != (dim, dim):
        raise ValueError(f"driver shape {matrix.shape} does not match dimension {dim}")
    d0 = np.ones(dim)
    d0[0] = -1.0
    dw = np.ones(dim)
    dw[problem.w] = -1.0
    iterate = -(((matrix * d0) @ matrix.conj().T) * dw)
    return iterate


def grover_iterate(driver: DriverUnitary, problem: SearchProblem) -> np.ndarray:
    """Grover's iterate G for a prepared driver.  Unitary by construction."""
    return iterate_from_unitary(driver.matrix, problem)


def grover_on_plane(x: float) -> np.ndarray:
    """Action of G on coordinates in the non-orthogonal (start, target) basis.

    Columns are the images of the start and target states:

        G|s> = (1 - 4x^2)|s> + 2x|w>,      G|w> = -2x|s> + |w>.
    """
    if not 0.0 < x < 1.0:
        raise ValueError(f"overlap must lie strictly between 0 and 1, got {x}")
    return np.array([[1.0 - 4.0 * x * x, -2.0 * x], [2.0 * x, 1.0]])


@dataclass(frozen=True)
class IterationCount:
    """The two standard iteration-count prescriptions.

    ``paper`` is ceil(pi / (4x)), the estimate from Grover's original
    analysis; it overshoots for large overlaps.  ``optimal`` is
    round(pi / (4 arcsin x) - 1/2), the count that lands the first peak of the
    success probability sin^2((2k+1) arcsin x).
    """

    paper: int
    optimal: int


def iteration_count(x: float) -> IterationCount:
    """Iteration counts for a given start-target overlap x."""
    if not 0.0 < x < 1.0:
        raise ValueError(f"overlap must lie strictly between 0 and 1, got {x}")
    paper = math.ceil(math.pi / (4.0 * x))
    optimal = max(0, round(math.pi / (4.0 * math.asin(x)) - 0.5))
    return IterationCount(paper=paper, optimal=optimal)


def run_grover(problem: SearchProblem, driver: DriverUnitary, k: int) -> tuple[np.ndarray, float]:
    """Apply G k times to the prepared state U|0> and report the final state
    and the probability of measuring the target."""
    if k < 0:
        raise ValueError(f"iteration count must be nonnegative, got {k}")
    iterate = grover_iterate(driver, problem)
    state = driver.matrix[:, 0].copy()
    for _ in range(k):
        state = iterate @ state
    success = float(abs(state[problem.w]) ** 2)
    return state, success


def success_trajectory(problem: SearchProblem, driver: DriverUnitary, k_max: int) -> np.ndarray:
    """Success probability after 0, 1, ..., k_max applications of G."""
    if k_max < 0:
        raise ValueError(f"iteration count must be nonnegative, got {k_max}")
    iterate = grover_iterate(driver, problem)
    state = driver.matrix[:, 0].copy()
    probs = np.empty(k_max + 1)
    probs[0] = abs(state[problem.w]) ** 2
    for k in range(1, k_max + 1):
        state = iterate @ state
        probs[k] = abs(state[problem.w]) ** 2
    return probs
