"""Application of the measurement-induced gate and its semiclassical limits.

The gate couples the input to an n-photon resource through a two-mode phase
gate e^{i q q_a} and measures the resource momentum, obtaining outcome y_m.
Conditioned on y_m the input wavefunction acquires a Hermite-function factor:

    psi~(x) = psi_in(x) i^n h_n(x - y_m),    P(y_m) = int |psi~|^2 dx,

with h_n the normalized Hermite function. The semiclassical picture replaces
h_n by two counter-propagating momentum branches p = +/- sqrt(2n+1 - (x-y_m)^2)
whose accumulated phase is phase_function below; expanding that phase to first
order around the zero-shear point x = y_m yields an ideal two-component cat.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import PhaseDomainError, SingularShearError, ZeroProbabilityError, ZeroStateError
from .numerics import Grid1D, eval_hermite_fn, integrate
from .states import CatSuperposition, CoherentParams, WaveFunctionGrid

__all__ = [
    "GateParams",
    "TaylorPhase",
    "GateOutput",
    "phase_function",
    "semiclassical_factor",
    "exact_output",
    "semiclassical_output",
    "taylor_phase",
    "perfect_cat",
]


@dataclass(frozen=True)
class GateParams:
    """Resource photon number n and homodyne outcome y_m."""

    n: int
    y_m: float = 0.0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("photon number must be nonnegative")

    @property
    def radius(self) -> float:
        """Resource circle radius sqrt(2n+1)."""
        return float(np.sqrt(2.0 * self.n + 1.0))


class GateOutput(NamedTuple):
    state: WaveFunctionGrid
    density: float


def phase_function(n: int, z):
    """Accumulated branch phase phi(n, z) = (2n+1)(z sqrt(1-z^2) + arcsin z)/2.

    z = (x - y_m)/sqrt(2n+1) is the scaled position inside the classically
    allowed band; |z| > 1 raises PhaseDomainError. Scalar or array input.
    """
    arr = np.asarray(z, dtype=float)
    if np.any(np.abs(arr) > 1.0 + 1e-12):
        raise PhaseDomainError("phase function evaluated at |z| > 1")
    arr = np.clip(arr, -1.0, 1.0)
    phi = (2.0 * n + 1.0) * (arr * np.sqrt(1.0 - arr * arr) + np.arcsin(arr)) / 2.0
    return phi if np.ndim(z) else float(phi)


def semiclassical_factor(params: GateParams, x) -> np.ndarray:
    """Two-branch approximation of i^n h_n(x - y_m) up to a constant.

    (1 - z^2)^{-1/4} [e^{i phi} + (-1)^n e^{-i phi}] inside the allowed band,
    zero outside. The amplitude weight diverges at the turning points; the
    divergence is integrable and the adjacent grid values stay finite.
    """
    arr = np.asarray(x, dtype=float)
    z = (arr - params.y_m) / params.radius
    out = np.zeros(arr.shape, dtype=complex)
    inside = np.abs(z) < 1.0
    if np.any(inside):
        zi = z[inside]
        phi = phase_function(params.n, zi)
        branches = np.exp(1j * phi) + (-1.0) ** params.n * np.exp(-1j * phi)
        out[inside] = (1.0 - zi * zi) ** -0.25 * branches
    return out


def exact_output(params: GateParams, state: WaveFunctionGrid) -> GateOutput:
    """Conditional output state and outcome density for a given input.

    Returns the normalized post-measurement state together with the homodyne
    density P(y_m); raises ZeroProbabilityError when the outcome lies so far
    in the tails that no conditional state can be formed.
    """
    x = state.grid.xs
    unnorm = state.values * (1j ** params.n) * eval_hermite_fn(params.n, x - params.y_m)
    density = float(integrate(np.abs(unnorm) ** 2, state.grid).real)
    if density < 1e-300:
        raise ZeroProbabilityError(
            f"outcome y_m={params.y_m} has density {density}; conditional state undefined"
        )
    return GateOutput(WaveFunctionGrid(state.grid, unnorm / np.sqrt(density)), density)


def semiclassical_output(params: GateParams, state: WaveFunctionGrid) -> WaveFunctionGrid:
    """Normalized semiclassical output: pure-phase branches, no amplitude weight.

    psi_scl(x) proportional to psi_in(x) i^n [e^{i phi} + (-1)^n e^{-i phi}],
    with the branch phase evaluated at z clipped to [-1, 1]: beyond the
    turning points the phase saturates at +/-(2n+1)pi/4 and the factor
    continues with constant magnitude sqrt(2). Zeroing it there instead would
    discard genuine tail weight of the input and visibly degrade the
    approximation at small n.
    """
    x = state.grid.xs
    z = np.clip((x - params.y_m) / params.radius, -1.0, 1.0)
    phi = phase_function(params.n, z)
    branches = np.exp(1j * phi) + (-1.0) ** params.n * np.exp(-1j * phi)
    unnorm = state.values * (1j ** params.n) * branches
    nrm = integrate(np.abs(unnorm) ** 2, state.grid).real
    if nrm < 1e-300:
        raise ZeroStateError("semiclassical output vanishes on this grid")
    return WaveFunctionGrid(state.grid, unnorm / np.sqrt(nrm))


@dataclass(frozen=True)
class TaylorPhase:
    """First-order data of the branch phase at an expansion center.

    phi(x) ~ theta0 + p_plus (x - center) + dp_plus (x - center)^2 for the
    upper branch; the lower branch is the complex conjugate pattern.
    dp_plus is half the local shear d^2 phi/dx^2.
    """

    center: float
    theta0: float
    p_plus: float
    dp_plus: float


def taylor_phase(params: GateParams, center: float) -> TaylorPhase:
    """Expand the branch phase around `center`.

    Valid strictly inside the band; at or beyond the turning points the local
    momentum vanishes or turns imaginary and SingularShearError is raised.
    """
    u = center - params.y_m
    disc = 2.0 * params.n + 1.0 - u * u
    if disc <= 0.0:
        raise SingularShearError(
            f"center {center} is at or beyond the turning points of the n={params.n} "
            f"resource around y_m={params.y_m}"
        )
    p_plus = float(np.sqrt(disc))
    return TaylorPhase(
        center=float(center),
        theta0=phase_function(params.n, u / params.radius),
        p_plus=p_plus,
        dp_plus=-u / (2.0 * p_plus),
    )


def perfect_cat(params: GateParams, inp: CoherentParams) -> CatSuperposition:
    """Ideal cat targeted by the gate for a coherent input.

    Built by linearizing the branch phase at x = y_m, the one point where the
    shear term vanishes identically: each branch then displaces the input
    momentum by +/- sqrt(2n+1) and the relative phase collapses to
    theta = sqrt(2n+1) (x0/2 - y_m). The component parity sign is (-1)^n.
    """
    r = params.radius
    return CatSuperposition(
        alpha_plus=complex(inp.x0, inp.p0 + r) / np.sqrt(2.0),
        alpha_minus=complex(inp.x0, inp.p0 - r) / np.sqrt(2.0),
        phase_theta=r * (0.5 * inp.x0 - params.y_m),
        parity_sign=-1 if params.n % 2 else 1,
    )
