"""Two-vertex polygon model of the surface ``S_{h,b}`` and its simple twists.

The groupoid has objects ``p[1], p[2]`` and edges ``e[1] .. e[d]``,
``d = 2h + b``, all running ``p[1] -> p[2]``.  Each boundary component is
recorded as a closed word, based where its first letter starts.

A candidate simple twist swaps the two objects and sends every edge to a
single inverted edge, ``e[i] -> e[σ(i)]⁻¹``.  It is accepted when it maps
every boundary word to that word rotated by one letter, in the same
direction for all boundaries.  Literal fixing is impossible for a functor
that swaps the basepoints; the one-step rotation is the combinatorial
trace of the fractional boundary rotation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .covering import build_cover_groupoid, lifted_twist_functor
from .errors import DomainError, PreconditionError, ResourceError
from .groupoid import (
    FreeGroupoid,
    GroupoidFunctor,
    PathWord,
    compose_functors,
    functor_equal,
    identity_functor,
    rotate_closed,
)
from .ribbon import RibbonGraph

MAX_SEARCH_EDGES = 9

P1, P2 = "p[1]", "p[2]"


def edge(i: int) -> str:
    return f"e[{i}]"


@dataclass(frozen=True, eq=False)
class PolygonSurface:
    h: int
    b: int
    groupoid: FreeGroupoid
    boundary_words: tuple[PathWord, ...]

    @property
    def d(self) -> int:
        return 2 * self.h + self.b


def _alternating(indices, first_sign: int) -> list[tuple[str, int]]:
    return [(edge(i), first_sign * (-1) ** k) for k, i in enumerate(indices)]


def build_polygon(h: int, b: int) -> PolygonSurface:
    """Polygon model of ``S_{h,b}`` with its boundary words.

    For ``b = 1`` the single boundary runs ``e1 e2⁻¹ ⋯ e_{2h+1} e1⁻¹ e2 ⋯ e_{2h+1}⁻¹``;
    for ``b = 2`` the two boundaries are the two ``(2h+2)``-gons.  For
    ``b >= 3`` a chain of bigons ``e_{2h+j} e_{2h+j+1}⁻¹`` is inserted
    between the two outer polygons.
    """
    if h < 0 or b < 1:
        raise DomainError("need h >= 0 and b >= 1")
    if (h, b) == (0, 1):
        raise DomainError("(h, b) = (0, 1) is degenerate: a single edge bounds a disk")
    d = 2 * h + b
    G = FreeGroupoid([P1, P2], [(edge(i), P1, P2) for i in range(1, d + 1)])
    core = range(1, 2 * h + 2)
    if b == 1:
        words = [_alternating(core, 1) + _alternating(core, -1)]
    else:
        words = [_alternating(list(core) + [2 * h + 2], 1)]
        for j in range(2, b):
            words.append([(edge(2 * h + j), 1), (edge(2 * h + j + 1), -1)])
        words.append(_alternating(core, -1) + [(edge(d), 1)])
    boundary = tuple(G.word(w) for w in words)
    return PolygonSurface(h, b, G, boundary)


def edge_permutation_functor(P: PolygonSurface, sigma, sign: int = -1) -> GroupoidFunctor:
    """``e[i] -> e[σ(i)]^sign`` with ``σ`` a 0-indexed tuple; ``sign=-1`` swaps the objects."""
    G = P.groupoid
    objects = {P1: P2, P2: P1} if sign == -1 else {}
    edges = {edge(i + 1): G.generator(edge(sigma[i] + 1), sign) for i in range(P.d)}
    return GroupoidFunctor(G, objects, edges)


def shift_permutation(d: int, direction: int) -> tuple[int, ...]:
    return tuple((i + direction) % d for i in range(d))


def shift_twist(P: PolygonSurface, direction: int = 1) -> GroupoidFunctor:
    """``e[i] -> e[i+direction]⁻¹`` (indices mod ``d``), swapping ``p[1]`` and ``p[2]``."""
    if direction not in (1, -1):
        raise DomainError("direction must be ±1")
    f = edge_permutation_functor(P, shift_permutation(P.d, direction))
    f.name = f"shift{'+' if direction == 1 else '-'}"
    return f


def boundary_rotation_check(f: GroupoidFunctor, P: PolygonSurface, direction: int = 1) -> list[bool]:
    """Per boundary word: does ``f`` send it to its rotation by ``direction`` letters?"""
    if f.object_map[P1] != P2 or f.object_map[P2] != P1:
        raise PreconditionError("functor must swap p[1] and p[2]")
    return [f.apply(w) == rotate_closed(w, direction, P.groupoid) for w in P.boundary_words]


def is_simple_twist(f: GroupoidFunctor, P: PolygonSurface) -> bool:
    return any(all(boundary_rotation_check(f, P, direction)) for direction in (1, -1))


def classify_simple_twists(h: int, b: int) -> set[tuple[int, ...]]:
    """All edge permutations ``σ`` whose twist ``e[i] -> e[σ(i)]⁻¹`` passes the boundary test.

    Exhaustive over the ``d!`` permutations; ``σ`` is returned 0-indexed.
    The sign flip alone already moves every edge.
    """
    d = 2 * h + b
    if d > MAX_SEARCH_EDGES:
        raise ResourceError(f"exhaustive search over {d}! permutations exceeds the bound {MAX_SEARCH_EDGES}!")
    P = build_polygon(h, b)
    # letters as (edge index, sign); the image of (i, s) is (σ(i), -s)
    words = [[(int(lab[2:-1]) - 1, s) for lab, s in w.letters] for w in P.boundary_words]
    targets = {
        direction: [w[direction % len(w):] + w[:direction % len(w)] for w in words] for direction in (1, -1)
    }
    found = set()
    for sigma in permutations(range(d)):
        for direction in (1, -1):
            ok = True
            for w, t in zip(words, targets[direction]):
                for (i, s), (ti, ts) in zip(w, t):
                    if sigma[i] != ti or -s != ts:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found.add(sigma)
                break
    return found


def expected_shifts(d: int) -> set[tuple[int, ...]]:
    return {shift_permutation(d, 1), shift_permutation(d, -1)}


def functor_order(f: GroupoidFunctor, limit: int = 1000) -> int:
    """Smallest ``k >= 1`` with ``f^k`` the identity, by iterated composition."""
    ident = identity_functor(f.domain)
    power = f
    for k in range(1, limit + 1):
        if functor_equal(power, ident):
            return k
        power = compose_functors(f, power)
    raise ResourceError(f"no identity power up to {limit}")


def polygon_for_sheets(d: int) -> tuple[int, int]:
    """``(h, b)`` of the polygon with ``d`` edges and one or two boundaries."""
    if d < 2:
        raise DomainError("need d >= 2")
    return ((d - 1) // 2, 1) if d % 2 else (d // 2 - 1, 2)


def cover_equivalence_check(d: int) -> bool:
    """The lift of ``β_1`` to the ``d``-fold cover with two branch points is the polygon shift.

    The lift is restricted to the edges ``e[1][j]`` between the two branch
    points and relabeled ``e[1][j] -> e[j]``, ``p[i] -> p[i]``.
    """
    h, b = polygon_for_sheets(d)
    E = build_cover_groupoid(2, d)
    lift = lifted_twist_functor(E, 1)
    P = build_polygon(h, b)
    G = P.groupoid
    edges = {}
    for j in range(1, d + 1):
        img = lift.edge_map[f"e[1][{j}]"]
        letters = []
        for lab, s in img.letters:
            i, jj = lab[2:-1].split("][")
            if i != "1":
                return False
            letters.append((edge(int(jj)), s))
        edges[edge(j)] = G.word(letters)
    objects = {P1: lift.object_map["p[1]"], P2: lift.object_map["p[2]"]}
    restricted = GroupoidFunctor(G, objects, edges)
    return functor_equal(restricted, shift_twist(P, 1))


def polygon_ribbon(P: PolygonSurface) -> RibbonGraph:
    """Two-vertex ribbon graph whose faces are the boundary words.

    A forward letter ``e[i]`` is the dart ``e[i]-`` leaving ``p[1]``; an
    inverse letter is ``e[i]+`` leaving ``p[2]``.  With faces traversed by
    ``rotation ∘ pairing``, the rotation is ``next_in_face ∘ pairing``.
    """
    nxt = {}
    for w in P.boundary_words:
        darts = [f"{lab}{'-' if s == 1 else '+'}" for lab, s in w.letters]
        for a, b in zip(darts, darts[1:] + darts[:1]):
            nxt[a] = b
    pairing = {}
    for i in range(1, P.d + 1):
        pairing[f"{edge(i)}-"] = f"{edge(i)}+"
        pairing[f"{edge(i)}+"] = f"{edge(i)}-"
    rotation = {x: nxt[pairing[x]] for x in pairing}
    return RibbonGraph(pairing, rotation)
