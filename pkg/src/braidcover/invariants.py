"""Riemann–Hurwitz bookkeeping for cyclic branched covers of the disk.

All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

from .errors import DomainError


@dataclass(frozen=True)
class SurfaceInvariants:
    """Genus, boundary count and Euler characteristic of a compact surface."""

    genus: int
    boundary: int
    euler: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 1:
            raise DomainError(f"invalid surface (g={self.genus}, b={self.boundary})")
        if self.euler != 2 - 2 * self.genus - self.boundary:
            raise DomainError("Euler characteristic inconsistent with genus and boundary")

    @classmethod
    def from_genus(cls, genus: int, boundary: int) -> "SurfaceInvariants":
        return cls(genus, boundary, 2 - 2 * genus - boundary)


def genus_dm(d: int, m: int) -> int:
    """Genus ``(d²m - md - 2d + 2)/2`` of the ``d``-fold cover branched at ``dm`` points."""
    if d < 2 or m < 1:
        raise DomainError("need d >= 2 and m >= 1")
    num = d * d * m - m * d - 2 * d + 2
    assert num % 2 == 0, (d, m)
    return num // 2


def rh_invariants(d: int, n: int) -> tuple[int, int]:
    """``(g, k)`` of the ``d``-fold cyclic cover of the disk branched at ``n`` points."""
    if d < 2 or n < 2:
        raise DomainError("need d >= 2 and n >= 2")
    k = gcd(d, n)
    num = d * n - n - d - k
    assert num % 2 == 0, (d, n)
    return num // 2 + 1, k


def check_formula_consistency(d: int, m: int) -> bool:
    g, k = rh_invariants(d, d * m)
    return genus_dm(d, m) == g and k == d


def operad_genus_additivity(d: int, ms: Sequence[int]) -> bool:
    """Sum of component genera plus the gluing genus ``(k-1)(d-1)`` equals ``g(d, Σm)``."""
    if not ms or any(m < 1 for m in ms):
        raise DomainError("need at least one m and all m >= 1")
    k = len(ms)
    return sum(genus_dm(d, m) for m in ms) + (k - 1) * (d - 1) == genus_dm(d, sum(ms))


@dataclass(frozen=True)
class CompositeEmbedding:
    sheet_counts: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "sheet_counts", tuple(self.sheet_counts))
        if not self.sheet_counts:
            raise DomainError("composite needs at least one component")
        if any(d < 2 for d in self.sheet_counts):
            raise DomainError("component sheet counts must be >= 2")
        if self.n < 2:
            raise DomainError("need n >= 2")


def composite_invariants(c: CompositeEmbedding) -> dict:
    """Per-component ``(g_i, k_i)``, the total boundary count and the lcm of sheet counts.

    ``components[i]["boundary"]`` is the boundary count ``k_i`` of the
    ``d_i``-fold cover, not that of the support of a single twist.
    """
    comps = []
    for d in c.sheet_counts:
        g, k = rh_invariants(d, c.n)
        comps.append({"sheets": d, "genus": g, "boundary": k})
    return {
        "n": c.n,
        "components": comps,
        "total_boundary": sum(x["boundary"] for x in comps),
        "master_sheets": lcm(*c.sheet_counts),
    }
