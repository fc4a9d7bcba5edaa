"""Ribbon graphs: half-edges, an edge involution and vertex rotations.

Faces (boundary components of the thickened surface) are the orbits of
``h -> rotation[pairing[h]]``.  Rotations are read counterclockwise.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Sequence

from .errors import DomainError, SchemaError
from .invariants import SurfaceInvariants

HalfEdge = Hashable


def _cycles(perm: Mapping[HalfEdge, HalfEdge]) -> list[tuple[HalfEdge, ...]]:
    seen = set()
    out = []
    for start in perm:
        if start in seen:
            continue
        cyc = []
        h = start
        while h not in seen:
            seen.add(h)
            cyc.append(h)
            h = perm[h]
        out.append(tuple(cyc))
    return out


class RibbonGraph:
    """Ribbon graph from an edge pairing and a rotation permutation.

    Parameters
    ----------
    pairing : mapping
        Fixed-point-free involution on half-edges.
    rotation : mapping
        Permutation of half-edges whose cycles are the vertices.
    """

    def __init__(self, pairing: Mapping[HalfEdge, HalfEdge], rotation: Mapping[HalfEdge, HalfEdge]):
        self.pairing = dict(pairing)
        self.rotation = dict(rotation)
        halves = set(self.pairing)
        if set(self.rotation) != halves or set(self.rotation.values()) != halves:
            raise SchemaError("rotation must permute exactly the paired half-edges")
        for h, k in self.pairing.items():
            if h == k or self.pairing.get(k) != h:
                raise SchemaError(f"pairing is not a fixed-point-free involution at {h!r}")

    @classmethod
    def from_vertices(
        cls, vertices: Iterable[Sequence[HalfEdge]], edges: Iterable[tuple[HalfEdge, HalfEdge]]
    ) -> "RibbonGraph":
        """Build from cyclically ordered half-edge lists and edge pairs."""
        rotation = {}
        for cyc in vertices:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if a in rotation:
                    raise SchemaError(f"half-edge {a!r} appears at two vertices")
                rotation[a] = b
        pairing = {}
        for a, b in edges:
            if a in pairing or b in pairing:
                raise SchemaError("half-edge used by two edges")
            pairing[a] = b
            pairing[b] = a
        return cls(pairing, rotation)

    @property
    def half_edges(self) -> list[HalfEdge]:
        return list(self.rotation)

    @property
    def edge_count(self) -> int:
        return len(self.pairing) // 2

    def vertices(self) -> list[tuple[HalfEdge, ...]]:
        return _cycles(self.rotation)

    def face_permutation(self) -> dict[HalfEdge, HalfEdge]:
        return {h: self.rotation[self.pairing[h]] for h in self.rotation}

    def components(self) -> list[set[HalfEdge]]:
        parent = {h: h for h in self.rotation}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in (self.rotation, self.pairing):
            for a, b in perm.items():
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        groups: dict[HalfEdge, set] = {}
        for h in self.rotation:
            groups.setdefault(find(h), set()).add(h)
        return list(groups.values())

    def restrict(self, halves: set) -> "RibbonGraph":
        return RibbonGraph(
            {h: self.pairing[h] for h in halves},
            {h: self.rotation[h] for h in halves},
        )

    def is_automorphism(self, mapping: Mapping[HalfEdge, HalfEdge]) -> bool:
        """Whether a half-edge bijection commutes with pairing and rotation."""
        if set(mapping) != set(self.rotation) or set(mapping.values()) != set(self.rotation):
            return False
        return all(
            mapping[self.pairing[h]] == self.pairing[mapping[h]]
            and mapping[self.rotation[h]] == self.rotation[mapping[h]]
            for h in self.rotation
        )


def faces(R: RibbonGraph) -> list[tuple[HalfEdge, ...]]:
    return _cycles(R.face_permutation())


def surface_invariants(R: RibbonGraph) -> SurfaceInvariants:
    """Genus, boundary count and Euler characteristic of the thickened graph."""
    if len(R.components()) != 1:
        raise DomainError("ribbon graph is disconnected; use component_invariants")
    v = len(R.vertices())
    euler = v - R.edge_count
    b = len(faces(R))
    twice_g = 2 - b - euler
    assert twice_g % 2 == 0 and twice_g >= 0, (v, R.edge_count, b)
    return SurfaceInvariants(twice_g // 2, b, euler)


def component_invariants(R: RibbonGraph) -> list[SurfaceInvariants]:
    return [surface_invariants(R.restrict(c)) for c in R.components()]


def half(i: int, j: int, end: str) -> str:
    """Half of ``e[i][j]``: ``'-'`` is the end at ``p[i]``, ``'+'`` the end at ``p[i+1]``."""
    return f"e[{i}][{j}]{end}"


def build_cover_ribbon(n: int, d: int) -> RibbonGraph:
    """Ribbon graph of the ``d``-fold cyclic cover on the branch points ``p[1..n]``.

    Edges ``e[i][j]`` join ``p[i]`` to ``p[i+1]`` for ``1 <= i <= n-1``.  At
    the end vertices the ``d`` incident halves are ordered by sheet; at an
    interior vertex the halves of ``e[i-1][·]`` and ``e[i][·]`` alternate,
    starting with ``e[i-1][1]``.  At each vertex the half actually incident
    to it is used.
    """
    if n < 2 or d < 1:
        raise DomainError("need n >= 2 and d >= 1")
    sheets = range(1, d + 1)
    vertices = [[half(1, j, "-") for j in sheets]]
    for i in range(2, n):
        cyc = []
        for j in sheets:
            cyc += [half(i - 1, j, "+"), half(i, j, "-")]
        vertices.append(cyc)
    vertices.append([half(n - 1, j, "+") for j in sheets])
    edges = [(half(i, j, "-"), half(i, j, "+")) for i in range(1, n) for j in sheets]
    return RibbonGraph.from_vertices(vertices, edges)


def sheet_shift(n: int, d: int, s: int = 1) -> dict[str, str]:
    """Half-edge map ``e[i][j]± -> e[i][j+s]±`` (sheets mod ``d``)."""
    return {
        half(i, j, end): half(i, (j - 1 + s) % d + 1, end)
        for i in range(1, n)
        for j in range(1, d + 1)
        for end in "-+"
    }
