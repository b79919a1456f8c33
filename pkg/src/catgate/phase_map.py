"""Semiclassical phase-space mapping of quadrature amplitudes.

The gate leaves q untouched and kicks the momentum onto the resource
circle: an input point (q, p) acquires p +/- sqrt(D) with
D = 2n+1 - (y_m - q)^2, so it has two images inside the band
|y_m - q| < sqrt(2n+1), one exactly at its edge, and none outside.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gate import GateParams

__all__ = [
    "PhasePoint",
    "BranchImage",
    "CircleDescriptor",
    "DiskImage",
    "resource_circle",
    "map_point",
    "map_disk",
]

# discriminant magnitude treated as an exact tangency (single branch)
_TANGENT_TOL = 1e-12


@dataclass(frozen=True)
class PhasePoint:
    """A point (q, p) in the quadrature plane."""

    q: float
    p: float

    def __post_init__(self) -> None:
        if not (np.isfinite(self.q) and np.isfinite(self.p)):
            raise ValueError("phase-space coordinates must be finite")


@dataclass(frozen=True)
class BranchImage:
    """Images of one input point: zero, one, or two output points."""

    branch_count: int
    images: tuple[PhasePoint, ...]

    def __post_init__(self) -> None:
        if self.branch_count not in (0, 1, 2):
            raise ValueError("branch_count must be 0, 1, or 2")
        if len(self.images) != self.branch_count:
            raise ValueError("image list length must equal branch_count")


@dataclass(frozen=True)
class CircleDescriptor:
    """Implicit circle q^2 + (p - center.p)^2 = radius^2."""

    center: PhasePoint
    radius: float


@dataclass(frozen=True)
class DiskImage:
    """Mapped samples of an uncertainty disk, split by branch.

    upper and lower collect the p + sqrt(D) and p - sqrt(D) images; a
    tangency point (single branch) goes to upper. dropped counts samples
    with no image. source keeps the input samples in the same generation
    order, for plotting the preimage next to its images.
    """

    upper: tuple[PhasePoint, ...]
    lower: tuple[PhasePoint, ...]
    dropped: int
    source: tuple[PhasePoint, ...] = field(repr=False)


def resource_circle(n: int, shift: float) -> CircleDescriptor:
    """Phase-space image of the shifted number-state resource: the circle
    q^2 + (p - shift)^2 = 2n+1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return CircleDescriptor(PhasePoint(0.0, float(shift)), float(np.sqrt(2.0 * n + 1.0)))


def map_point(params: GateParams, pt: PhasePoint) -> BranchImage:
    """Map one phase-space point through the measured gate.

    q is preserved; the two momentum branches are p +/- sqrt(D) with
    D = 2n+1 - (y_m - q)^2, listed lower branch first. D < 0 yields no
    image, |D| <= 1e-12 a single unshifted one.
    """
    disc = 2.0 * params.n + 1.0 - (params.y_m - pt.q) ** 2
    if disc < -_TANGENT_TOL:
        return BranchImage(0, ())
    if disc <= _TANGENT_TOL:
        return BranchImage(1, (PhasePoint(pt.q, pt.p),))
    kick = float(np.sqrt(disc))
    return BranchImage(2, (PhasePoint(pt.q, pt.p - kick), PhasePoint(pt.q, pt.p + kick)))


def _disk_samples(center: PhasePoint, radius: float, samples: int) -> list[PhasePoint]:
    """Concentric-ring lattice: a center point plus rings whose point counts
    grow linearly outward, the outermost tracing the boundary polyline.
    Ring angles pair theta with -theta, so the lattice is exactly mirror
    symmetric about p = center.p."""
    rings = max(1, round(np.sqrt(samples)))
    per_unit = 2.0 * (samples - 1) / (rings * (rings + 1))
    pts = [PhasePoint(center.q, center.p)]
    for i in range(1, rings + 1):
        r_i = radius * i / rings
        count = max(1, round(per_unit * i))
        angles = 2.0 * np.pi * np.arange(count) / count
        for t in angles:
            pts.append(PhasePoint(center.q + r_i * np.cos(t), center.p + r_i * np.sin(t)))
    return pts


def map_disk(params: GateParams, center: PhasePoint, radius: float, samples: int) -> DiskImage:
    """Map a sampled uncertainty disk through the gate, branch by branch.

    samples is the approximate total lattice size (at least 8); the exact
    count for a given argument is fixed, so repeated calls are
    reproducible point for point.
    """
    if radius <= 0:
        raise ValueError("disk radius must be positive")
    if samples < 8:
        raise ValueError("need at least 8 samples")
    source = _disk_samples(center, radius, samples)
    upper: list[PhasePoint] = []
    lower: list[PhasePoint] = []
    dropped = 0
    for pt in source:
        image = map_point(params, pt)
        if image.branch_count == 0:
            dropped += 1
        elif image.branch_count == 1:
            upper.append(image.images[0])
        else:
            lower.append(image.images[0])
            upper.append(image.images[1])
    return DiskImage(tuple(upper), tuple(lower), dropped, tuple(source))
