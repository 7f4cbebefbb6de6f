"""Continuous-time formulations of the search: rank-2 Hamiltonians on the
plane spanned by the start and target states.

Two generators are built for a start state |s>, target index w and energy
scale E (hbar = 1, so E*t is dimensionless):

* the driver-plus-target sum of Farhi and Gutmann,
  H' = E(|s><s| + |w><w|), whose evolution reaches the target at
  t = pi / (2 E x);
* the commutator Hamiltonian H = (2i/E)[H_w, H_D] = 2iEx(|w><s| - |s><w|),
  whose evolution retraces the digital iterate: e^{-iHt0} = G + 2P at
  t0 = (pi - 2 arccos x) / (2 x sqrt(1 - x^2)).

Here x = <w|s> is made real positive by a phase adjustment of the start
state, theta = arccos x, and eta = E sin 2theta is the plane rotation rate of
H.  P projects onto the orthogonal complement of the plane, where G acts as
-1 and e^{-iHt} as +1; adding (pi/t0) P to H yields an augmented generator
whose evolution equals G on the whole space.

The incremental stepper of the last section applies I + eps*A for the integer
matrix A = sqrt(N)(|w><u| - |u><w|) built on the uniform state |u>, moving
amplitude from all unmarked states onto the target a little at a time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePlaneError, OrthogonalStartError
from .grover import SearchProblem
from .linalg import basis_state, uniform_state

_OVERLAP_EPS = 1e-12
_T0_SERIES_CUTOFF = 1e-6


@dataclass(frozen=True)
class PlaneCoords:
    """Coefficients (c_sigma, c_w) of a state c_sigma|s> + c_w|w> in the
    non-orthogonal (start, target) basis with overlap x = <w|s>."""

    c_sigma: complex
    c_w: complex

    def plane_norm(self, x: float) -> float:
        """Norm of the represented state; the basis is not orthogonal, so the
        cross term 2 Re(conj(c_sigma) c_w x) enters."""
        cs, cw = self.c_sigma, self.c_w
        value = abs(cs) ** 2 + abs(cw) ** 2 + 2.0 * (cs.conjugate() * cw * x).real
        return math.sqrt(max(value, 0.0))

    def lift(self, sigma: np.ndarray, w: int) -> np.ndarray:
        """Expand the coefficients back into a full state vector."""
        return self.c_sigma * sigma + self.c_w * basis_state(sigma.size, w)


def _adjusted_start(sigma, w: int) -> tuple[np.ndarray, float]:
    """Phase-adjust the start state so <w|sigma> is real positive.

    Rejects numerically orthogonal and numerically parallel configurations
    with distinct errors; every formula below divides by x or by sin(theta).
    """
    sigma = np.asarray(sigma, dtype=complex)
    if sigma.ndim != 1:
        raise ValueError(f"start state must be a vector, got shape {sigma.shape}")
    if not 0 <= w < sigma.size:
        raise ValueError(f"target index {w} out of range [0, {sigma.size})")
    overlap = complex(sigma[w])
    x = abs(overlap)
    if x < _OVERLAP_EPS:
        raise OrthogonalStartError(
            f"<w|sigma> = {overlap:.3e} is numerically zero; evolution never reaches the target"
        )
    if x > 1.0 - _OVERLAP_EPS:
        raise DegeneratePlaneError("start state is (numerically) parallel to the target")
    return sigma * (overlap.conjugate() / x), x


def fg_hamiltonian(sigma, w: int, energy: float = 1.0) -> np.ndarray:
    """Farhi-Gutmann generator E(|s><s| + |w><w|).

    Hermitian and rank 2; restricted to the (start, target) plane its
    eigenvalues are E(1 + x) and E(1 - x) with eigenvectors proportional to
    |s> + |w> and |s> - |w>.
    """
    sigma, _ = _adjusted_start(sigma, w)
    if energy <= 0.0:
        raise ValueError(f"energy must be positive, got {energy}")
    wv = basis_state(sigma.size, w)
    return energy * (np.outer(sigma, sigma.conj()) + np.outer(wv, wv.conj()))


def fg_evolution_closed_form(x: float, energy: float, t: float) -> PlaneCoords:
    """Closed form of e^{-iH't} applied to the start state:

        e^{-iEt} [ cos(xEt) |s> - i sin(xEt) |w> ].

    At t = pi/(2Ex) the state is -i e^{-i pi/(2x)} |w>, i.e. the target up to
    phase.
    """
    if not 0.0 < x < 1.0:
        raise ValueError(f"overlap must lie strictly between 0 and 1, got {x}")
    if t < 0.0:
        raise ValueError(f"evolution time must be nonnegative, got {t}")
    phase = np.exp(-1j * energy * t)
    angle = x * energy * t
    return PlaneCoords(c_sigma=phase * math.cos(angle), c_w=-1j * phase * math.sin(angle))


def commutator_hamiltonian(sigma, w: int, energy: float = 1.0) -> np.ndarray:
    """Commutator generator (2i/E)[H_w, H_D] = 2iEx(|w><s| - |s><w|).

    Built from the dyadic form (fewer rounding steps than multiplying the
    projectors out); hermitian and traceless.  Restricted to the plane its
    eigenvalues are +/- E sin(2 theta) with eigenvectors given by
    :func:`h_eigensystem`, and it annihilates the orthogonal complement.
    """
    sigma, x = _adjusted_start(sigma, w)
    if energy <= 0.0:
        raise ValueError(f"energy must be positive, got {energy}")
    wv = basis_state(sigma.size, w)
    return 2j * energy * x * (np.outer(wv, sigma.conj()) - np.outer(sigma, wv.conj()))


def h_eigensystem(x: float, energy: float = 1.0) -> tuple[tuple[float, PlaneCoords], tuple[float, PlaneCoords]]:
    """Plane eigensystem of the commutator generator.

    Returns ((+eta, v+), (-eta, v-)) with eta = E sin(2 theta) and

        v(+/-) = (e^{+/- i theta} |s> - |w>) / (sqrt(2) sin theta),

    each of unit norm under the non-orthogonal plane metric.
    """
    if not 0.0 < x < 1.0:
        raise ValueError(f"overlap must lie strictly between 0 and 1, got {x}")
    theta = math.acos(x)
    eta = energy * math.sin(2.0 * theta)
    scale = 1.0 / (math.sqrt(2.0) * math.sin(theta))
    plus = PlaneCoords(c_sigma=scale * np.exp(1j * theta), c_w=-scale)
    minus = PlaneCoords(c_sigma=scale * np.exp(-1j * theta), c_w=-scale)
    return (eta, plus), (-eta, minus)


def h_evolution_closed_form(x: float, energy: float, t: float) -> np.ndarray:
    """Plane propagator of e^{-iHt} in (start, target) coordinates:

        [ sin(theta - eta t)   -sin(eta t)        ]
        [ sin(eta t)            sin(theta + eta t)] / sin(theta).

    At t = theta/eta the first column is (0, 1): the start state has rotated
    exactly onto the target.  At t = t0 the matrix equals the plane action of
    the digital iterate G.
    """
    if not 0.0 < x < 1.0:
        raise ValueError(f"overlap must lie strictly between 0 and 1, got {x}")
    theta = math.acos(x)
    eta = energy * math.sin(2.0 * theta)
    s = math.sin(theta)
    return np.array(
        [
            [math.sin(theta - eta * t) / s, -math.sin(eta * t) / s],
            [math.sin(eta * t) / s, math.sin(theta + eta * t) / s],
        ],
        dtype=complex,
    )


def grover_time(x: float) -> float:
    """Time t0 at which e^{-iHt0} reproduces one digital iterate on the plane:

        t0 = (pi - 2 arccos x) / (2 x sqrt(1 - x^2)) = (pi - 2 theta) / sin(2 theta).

    Evaluated from the arccos form for x >= 1e-6; below that the series
    1 + (2/3) x^2 is used to dodge the cancellation in pi - 2 arccos x.
    """
    if x < _OVERLAP_EPS:
        raise OrthogonalStartError(f"overlap {x} is numerically zero; t0 diverges")
    if x > 1.0 - _OVERLAP_EPS:
        raise DegeneratePlaneError(f"overlap {x} is numerically one; sin(2 theta) vanishes")
    if x < _T0_SERIES_CUTOFF:
        return t0_series(x)
    theta = math.acos(x)
    return (math.pi - 2.0 * theta) / math.sin(2.0 * theta)


def t0_series(x: float) -> float:
    """Quadratic series 1 + (2/3) x^2 of :func:`grover_time` about x = 0.

    The neglected term is (8/15) x^4 + O(x^6).
    """
    if not 0.0 <= x < 1.0:
        raise ValueError(f"overlap must lie in [0, 1), got {x}")
    return 1.0 + (2.0 / 3.0) * x * x


def plane_projector_complement(sigma, w: int) -> np.ndarray:
    """Orthogonal projector P onto the complement of span{|s>, |w>}.

    Idempotent, hermitian, annihilates both spanning states, and has trace
    N - 2.
    """
    sigma = np.asarray(sigma, dtype=complex)
    if sigma.ndim != 1:
        raise ValueError(f"start state must be a vector, got shape {sigma.shape}")
    if not 0 <= w < sigma.size:
        raise ValueError(f"target index {w} out of range [0, {sigma.size})")
    wv = basis_state(sigma.size, w)
    residual = sigma - sigma[w] * wv
    residual_norm = np.linalg.norm(residual)
    if residual_norm < _OVERLAP_EPS:
        raise DegeneratePlaneError("start state is (numerically) parallel to the target")
    u = residual / residual_norm
    return np.eye(sigma.size, dtype=complex) - np.outer(wv, wv.conj()) - np.outer(u, u.conj())


@dataclass(frozen=True)
class HamiltonianFamily:
    """All generators for one (start state, target, energy) configuration.

    Members are computed eagerly at construction and marked read-only, so a
    family can be shared freely across threads.  ``generator`` is the integer
    stepper matrix A and is only defined for the uniform start state (None
    otherwise).
    """

    sigma: np.ndarray
    w: int
    energy: float
    x: float
    theta: float
    eta: float
    h_target: np.ndarray
    h_driver: np.ndarray
    h_fg: np.ndarray
    h_commutator: np.ndarray
    projector: np.ndarray
    h_augmented: np.ndarray
    generator: np.ndarray | None


def hamiltonian_family(sigma, w: int, energy: float = 1.0) -> HamiltonianFamily:
    """Build the full :class:`HamiltonianFamily` for a start state and target."""
    if energy <= 0.0:
        raise ValueError(f"energy must be positive, got {energy}")
    adjusted, x = _adjusted_start(sigma, w)
    theta = math.acos(x)
    eta = energy * math.sin(2.0 * theta)
    wv = basis_state(adjusted.size, w)
    h_target = energy * np.outer(wv, wv.conj())
    h_driver = energy * np.outer(adjusted, adjusted.conj())
    h_fg = h_target + h_driver
    h_comm = commutator_hamiltonian(adjusted, w, energy)
    projector = plane_projector_complement(adjusted, w)
    h_augmented = h_comm + (math.pi / grover_time(x)) * projector

    generator = None
    n = adjusted.size.bit_length() - 1
    if adjusted.size == 2**n and np.allclose(adjusted, uniform_state(n), atol=_OVERLAP_EPS):
        generator = naive_generator(SearchProblem(n=n, w=w))

    members = (adjusted, h_target, h_driver, h_fg, h_comm, projector, h_augmented)
    for array in members + ((generator,) if generator is not None else ()):
        array.setflags(write=False)
    return HamiltonianFamily(
        sigma=adjusted,
        w=w,
        energy=energy,
        x=x,
        theta=theta,
        eta=eta,
        h_target=h_target,
        h_driver=h_driver,
        h_fg=h_fg,
        h_commutator=h_comm,
        projector=projector,
        h_augmented=h_augmented,
        generator=generator,
    )


def augmented_hamiltonian(family: HamiltonianFamily) -> np.ndarray:
    """Generator H + (pi/t0) P whose evolution equals G on the whole space.

    On the plane P vanishes, so the action is that of H; on the complement the
    added term contributes the phase e^{-i pi} = -1 that G applies there.
    """
    return family.h_commutator + (math.pi / grover_time(family.x)) * family.projector


def naive_generator(problem: SearchProblem) -> np.ndarray:
    """Stepper matrix A = sqrt(N)(|w><u| - |u><w|) for the uniform state |u>.

    Real skew-symmetric with integer entries: row w is all +1, column w all
    -1, zero elsewhere (and on the diagonal).  Applying I + eps*A moves an eps
    fraction of every unmarked amplitude onto the target.
    """
    dim = problem.dim
    a = np.zeros((dim, dim), dtype=complex)
    a[problem.w, :] = 1.0
    a[:, problem.w] = -1.0
    a[problem.w, problem.w] = 0.0
    return a


def naive_step(phi, generator, eps: float) -> np.ndarray:
    """One unnormalised increment (I + eps*A)|phi>."""
    if eps < 0.0:
        raise ValueError(f"step size must be nonnegative, got {eps}")
    phi = np.asarray(phi, dtype=complex)
    return phi + eps * (generator @ phi)


@dataclass(frozen=True)
class NaiveSearchResult:
    """Target-amplitude trajectory of the renormalised incremental search."""

    amplitudes: np.ndarray
    peak_step: int
    peak_amplitude: float


def naive_search(problem: SearchProblem, eps: float, max_steps: int) -> NaiveSearchResult:
    """Repeatedly apply I + eps*A from the uniform state, renormalising after
    each step, and record |<w|state>| at every step.

    I + eps*A is not unitary, so the state is renormalised; this preserves the
    amplitude ratios the scheme relies on.  The reported peak is the argmax
    over the recorded window, so ``max_steps`` should cover the expected first
    arrival near theta / (eps sqrt(N) sin theta); the trajectory climbs
    strictly up to that first peak and oscillates beyond it.
    """
    if not 0.0 < eps <= 0.1:
        raise ValueError(f"step size must lie in (0, 0.1], got {eps}")
    if max_steps < 1:
        raise ValueError(f"step count must be positive, got {max_steps}")
    generator = naive_generator(problem)
    state = uniform_state(problem.n)
    amplitudes = np.empty(max_steps + 1)
    amplitudes[0] = abs(state[problem.w])
    for step in range(1, max_steps + 1):
        state = naive_step(state, generator, eps)
        state = state / np.linalg.norm(state)
        amplitudes[step] = abs(state[problem.w])
    peak_step = int(np.argmax(amplitudes))
    return NaiveSearchResult(
        amplitudes=amplitudes,
        peak_step=peak_step,
        peak_amplitude=float(amplitudes[peak_step]),
    )
