"""Framed little 2-disks: elements, composition and the two algebra actions.

An element of arity ``k`` is a list of affine maps ``z -> α z + β`` of the
unit disk into itself with disjoint images; the complex scale ``α``
carries the framing.  The action on surfaces is pure Euler characteristic
bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, SchemaError
from .invariants import genus_dm

TOL = 1e-9


@dataclass(frozen=True)
class FramedDisksElement:
    scales: tuple[complex, ...]
    offsets: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "scales", tuple(complex(a) for a in self.scales))
        object.__setattr__(self, "offsets", tuple(complex(b) for b in self.offsets))
        if len(self.scales) != len(self.offsets):
            raise SchemaError("scales and offsets differ in length")
        if any(a == 0 for a in self.scales):
            raise DomainError("scales must be nonzero")

    @property
    def arity(self) -> int:
        return len(self.scales)

    def __call__(self, slot: int, z: complex) -> complex:
        return self.scales[slot] * z + self.offsets[slot]

    def to_list(self) -> list[list[float]]:
        """Serialize as ``[re α, im α, re β, im β]`` rows."""
        return [[a.real, a.imag, b.real, b.imag] for a, b in zip(self.scales, self.offsets)]

    @classmethod
    def from_list(cls, rows: Sequence[Sequence[float]]) -> "FramedDisksElement":
        return cls(tuple(complex(r[0], r[1]) for r in rows), tuple(complex(r[2], r[3]) for r in rows))


def identity_element() -> FramedDisksElement:
    return FramedDisksElement((1,), (0,))


def validate_element(f: FramedDisksElement, tol: float = TOL) -> tuple[bool, str | None]:
    """Containment in the unit disk and pairwise disjointness of the images."""
    for i, (a, b) in enumerate(zip(f.scales, f.offsets)):
        if abs(b) + abs(a) > 1 + tol:
            return False, f"disk {i} leaves the unit disk"
    for i in range(f.arity):
        for j in range(i + 1, f.arity):
            gap = abs(f.offsets[i] - f.offsets[j]) - abs(f.scales[i]) - abs(f.scales[j])
            if gap <= tol:
                return False, f"disks {i} and {j} overlap"
    return True, None


def operad_compose(f: FramedDisksElement, gs: Sequence[FramedDisksElement]) -> FramedDisksElement:
    """Substitute ``gs[i]`` into slot ``i`` of ``f``: ``(α_i α'_il, α_i β'_il + β_i)``."""
    if len(gs) != f.arity:
        raise SchemaError(f"expected {f.arity} inner elements, got {len(gs)}")
    scales, offsets = [], []
    for a, b, g in zip(f.scales, f.offsets, gs):
        for a2, b2 in zip(g.scales, g.offsets):
            scales.append(a * a2)
            offsets.append(a * b2 + b)
    return FramedDisksElement(tuple(scales), tuple(offsets))


def max_distance(f: FramedDisksElement, g: FramedDisksElement) -> float:
    if f.arity != g.arity:
        return float("inf")
    if f.arity == 0:
        return 0.0
    return max(max(abs(a - c), abs(b - e)) for a, b, c, e in zip(f.scales, f.offsets, g.scales, g.offsets))


@dataclass(frozen=True)
class Configuration:
    points: tuple[complex, ...]

    def __post_init__(self):
        pts = tuple(complex(z) for z in self.points)
        object.__setattr__(self, "points", pts)
        if any(abs(z) >= 1 for z in pts):
            raise DomainError("configuration points must lie in the open unit disk")
        if len(set(pts)) != len(pts):
            raise DomainError("configuration points must be distinct")

    def __len__(self) -> int:
        return len(self.points)


def act_on_configurations(f: FramedDisksElement, configs: Sequence[Configuration]) -> Configuration:
    if len(configs) != f.arity:
        raise SchemaError(f"expected {f.arity} configurations, got {len(configs)}")
    return Configuration(tuple(f(i, z) for i, c in enumerate(configs) for z in c.points))


@dataclass(frozen=True)
class SurfaceOperand:
    """Either ``d`` disjoint disks (``genus is None``) or a connected surface with ``d`` boundaries."""

    boundary: int
    genus: int | None = None

    def __post_init__(self):
        if self.boundary < 1:
            raise DomainError("boundary multiplicity must be positive")
        if self.genus is not None and self.genus < 0:
            raise DomainError("genus must be non-negative")

    @property
    def is_disks(self) -> bool:
        return self.genus is None

    @property
    def euler(self) -> int:
        if self.genus is None:
            return self.boundary
        return 2 - 2 * self.genus - self.boundary


def disks(d: int) -> SurfaceOperand:
    return SurfaceOperand(d)


def surface(genus: int, d: int) -> SurfaceOperand:
    return SurfaceOperand(d, genus)


def act_on_surfaces(f: FramedDisksElement | int, operands: Sequence[SurfaceOperand]) -> SurfaceOperand:
    """Glue ``k`` operands into ``d`` copies of the ``k``-holed disk complement.

    Each of the ``d`` pairs of pants ``S_{0,k+1}`` has Euler characteristic
    ``1 - k``, and gluing along circles adds nothing, so
    ``χ_out = Σ χ_i + d(1 - k)``.
    """
    k = f if isinstance(f, int) else f.arity
    if len(operands) != k or k < 1:
        raise SchemaError(f"expected {k} >= 1 operands, got {len(operands)}")
    d = operands[0].boundary
    if any(op.boundary != d for op in operands):
        raise SchemaError("operands must share the boundary multiplicity")
    if all(op.is_disks for op in operands):
        return disks(d)
    euler = sum(op.euler for op in operands) + d * (1 - k)
    twice_g = 2 - d - euler
    assert twice_g % 2 == 0 and twice_g >= 0
    return surface(twice_g // 2, d)


def stratum_operand(d: int, m: int) -> SurfaceOperand:
    """The surface attached to ``m`` blocks of ``d`` points: ``d`` disks for ``m = 0``."""
    return disks(d) if m == 0 else surface(genus_dm(d, m), d)


def row_element(k: int) -> FramedDisksElement:
    """``k`` equal disks centred on the real axis, left to right."""
    if k < 0:
        raise DomainError("arity must be non-negative")
    if k == 0:
        return FramedDisksElement((), ())
    r = 0.4 / k
    centres = [-0.9 + 1.8 * (i + 0.5) / k for i in range(k)]
    return FramedDisksElement((r,) * k, tuple(centres))


def random_element(rng: np.random.Generator, k: int, margin: float = 1e-3, tries: int = 1000) -> FramedDisksElement:
    """Valid element of arity ``k`` with every gap at least ``margin``."""
    for _ in range(tries):
        scales, offsets = [], []
        radius_cap = 0.9 / max(k, 1)
        for _ in range(k):
            for _ in range(200):
                r = rng.uniform(0.05, 1.0) * radius_cap
                rho = rng.uniform(0, 1 - r - margin)
                centre = rho * np.exp(2j * np.pi * rng.uniform())
                if all(abs(centre - b) - r - abs(a) > margin for a, b in zip(scales, offsets)):
                    scales.append(r * np.exp(2j * np.pi * rng.uniform()))
                    offsets.append(complex(centre))
                    break
            else:
                break
        if len(scales) == k:
            return FramedDisksElement(tuple(scales), tuple(offsets))
    raise RuntimeError(f"could not place {k} disjoint disks")


def random_configuration(rng: np.random.Generator, size: int) -> Configuration:
    pts: list[complex] = []
    while len(pts) < size:
        z = complex(np.sqrt(rng.uniform(0, 0.98)) * np.exp(2j * np.pi * rng.uniform()))
        if z not in pts:
            pts.append(z)
    return Configuration(tuple(pts))


def algebra_map_square(d: int, ms: Sequence[int], f: FramedDisksElement | None = None) -> bool:
    """Configurations then surface versus surfaces then gluing, for blocks ``ms``.

    Configurations of ``d * m_i`` points are pushed through ``f``; the
    result has ``d * Σ m_i`` points, whose surface must equal the gluing of
    the individual surfaces.
    """
    k = len(ms)
    if f is None:
        f = row_element(k)
    rng = np.random.default_rng(0)
    configs = [random_configuration(rng, d * m) for m in ms]
    out = act_on_configurations(f, configs)
    if len(out) % d:
        return False
    return stratum_operand(d, len(out) // d) == act_on_surfaces(f, [stratum_operand(d, m) for m in ms])
