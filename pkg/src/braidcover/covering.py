"""The disk chain groupoid, its cyclic branched covers and the twist functors.

Labels
------
Disk groupoid ``D``: objects ``p[0] .. p[n+1]``, edges ``e[0] .. e[n]`` with
``e[i]: p[i] -> p[i+1]``.

Cover groupoid ``E``: branch objects ``p[1] .. p[n]``, fiber objects
``q[0][j]`` and ``q[n+1][j]`` over the two boundary points, and edges
``e[i][j]`` for ``0 <= i <= n``, ``1 <= j <= d``.  Sheet indices are
1-based and wrap modulo ``d``.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .braid import BraidWord, braid_relators, delta, evaluate_braid, relator_name
from .errors import DomainError
from .groupoid import (
    FreeGroupoid,
    GroupoidFunctor,
    compose_functors,
    first_difference,
    identity_functor,
    support_of,
)
from .report import VerificationReport

DEFAULT_MAX_POWER = 12


def p(i: int) -> str:
    return f"p[{i}]"


def q(side: int, j: int) -> str:
    return f"q[{side}][{j}]"


def e(i: int, j: int | None = None) -> str:
    return f"e[{i}]" if j is None else f"e[{i}][{j}]"


class DiskChainGroupoid(FreeGroupoid):
    """Path graph ``p[0] -e[0]-> p[1] -> ... -e[n]-> p[n+1]``."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(
            [p(i) for i in range(n + 2)],
            [(e(i), p(i), p(i + 1)) for i in range(n + 1)],
        )


class CoverGroupoid(FreeGroupoid):
    """Groupoid of the ``d``-fold cyclic cover branched over ``p[1] .. p[n]``."""

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        objects = [q(0, j) for j in range(1, d + 1)]
        objects += [p(i) for i in range(1, n + 1)]
        objects += [q(n + 1, j) for j in range(1, d + 1)]
        edges = []
        for i in range(n + 1):
            for j in range(1, d + 1):
                source = q(0, j) if i == 0 else p(i)
                target = q(n + 1, j) if i == n else p(i + 1)
                edges.append((e(i, j), source, target))
        super().__init__(objects, edges)

    def sheet(self, j: int) -> int:
        return (j - 1) % self.d + 1

    def edge(self, i: int, j: int) -> str:
        return e(i, self.sheet(j))


def build_disk_groupoid(n: int) -> DiskChainGroupoid:
    if n < 2:
        raise DomainError("need at least two branch points")
    return DiskChainGroupoid(n)


def build_cover_groupoid(n: int, d: int) -> CoverGroupoid:
    if n < 2:
        raise DomainError("need at least two branch points")
    if d < 1:
        raise DomainError("sheet count must be positive")
    return CoverGroupoid(n, d)


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise DomainError(f"twist index {i} outside 1..{n - 1}")


def half_twist_functor(D: DiskChainGroupoid, i: int, sign: int = 1) -> GroupoidFunctor:
    """Half twist ``β_i`` exchanging ``p[i]`` and ``p[i+1]`` (``sign=-1`` for its inverse).

    On a tree every hom-set is a singleton, so ``β_i`` and ``β_i⁻¹`` have
    the same edge images.
    """
    _check_index(D.n, i)
    objects = {p(i): p(i + 1), p(i + 1): p(i)}
    edges = {
        e(i - 1): D.word([(e(i - 1), 1), (e(i), 1)]),
        e(i): D.generator(e(i), -1),
        e(i + 1): D.word([(e(i), 1), (e(i + 1), 1)]),
    }
    return GroupoidFunctor(D, objects, edges, name=f"b{i}" if sign == 1 else f"b{i}^-1")


def lifted_twist_functor(E: CoverGroupoid, i: int, sign: int = 1) -> GroupoidFunctor:
    """Lift ``β̃_i`` of the half twist to the cover, or its inverse for ``sign=-1``.

    ``β̃_i``:  e[i-1][j] -> e[i-1][j]·e[i][j+1],  e[i][j] -> e[i][j+1]⁻¹,
    e[i+1][j] -> e[i][j]·e[i+1][j].
    ``β̃_i⁻¹``: e[i-1][j] -> e[i-1][j]·e[i][j],  e[i][j] -> e[i][j-1]⁻¹,
    e[i+1][j] -> e[i][j-1]·e[i+1][j].
    """
    _check_index(E.n, i)
    if sign not in (1, -1):
        raise DomainError("sign must be ±1")
    objects = {p(i): p(i + 1), p(i + 1): p(i)}
    edges = {}
    for j in range(1, E.d + 1):
        if sign == 1:
            edges[E.edge(i - 1, j)] = E.word([(E.edge(i - 1, j), 1), (E.edge(i, j + 1), 1)])
            edges[E.edge(i, j)] = E.generator(E.edge(i, j + 1), -1)
            edges[E.edge(i + 1, j)] = E.word([(E.edge(i, j), 1), (E.edge(i + 1, j), 1)])
        else:
            edges[E.edge(i - 1, j)] = E.word([(E.edge(i - 1, j), 1), (E.edge(i, j), 1)])
            edges[E.edge(i, j)] = E.generator(E.edge(i, j - 1), -1)
            edges[E.edge(i + 1, j)] = E.word([(E.edge(i, j - 1), 1), (E.edge(i + 1, j), 1)])
    return GroupoidFunctor(E, objects, edges, name=f"B{i}" if sign == 1 else f"B{i}^-1")


def twist_assignment(E: CoverGroupoid) -> tuple[dict[int, GroupoidFunctor], dict[int, GroupoidFunctor]]:
    """Generator assignment ``β_i -> β̃_i`` and the matching inverses."""
    forward = {i: lifted_twist_functor(E, i, 1) for i in range(1, E.n)}
    backward = {i: lifted_twist_functor(E, i, -1) for i in range(1, E.n)}
    return forward, backward


def disk_assignment(D: DiskChainGroupoid) -> tuple[dict[int, GroupoidFunctor], dict[int, GroupoidFunctor]]:
    forward = {i: half_twist_functor(D, i, 1) for i in range(1, D.n)}
    backward = {i: half_twist_functor(D, i, -1) for i in range(1, D.n)}
    return forward, backward


def evaluate_on_cover(E: CoverGroupoid, w: BraidWord) -> GroupoidFunctor:
    forward, backward = twist_assignment(E)
    return evaluate_braid(w, forward, backward, domain=E)


def projection_functor(E: CoverGroupoid, D: DiskChainGroupoid | None = None) -> GroupoidFunctor:
    """Covering projection ``E -> D`` forgetting sheet indices."""
    if D is None:
        D = build_disk_groupoid(E.n)
    n = E.n
    objects = {p(i): p(i) for i in range(1, n + 1)}
    for j in range(1, E.d + 1):
        objects[q(0, j)] = p(0)
        objects[q(n + 1, j)] = p(n + 1)
    edges = {e(i, j): D.generator(e(i)) for i in range(n + 1) for j in range(1, E.d + 1)}
    return GroupoidFunctor(E, objects, edges, codomain=D, name="proj")


def deck_transformation(E: CoverGroupoid, s: int) -> GroupoidFunctor:
    """Deck map shifting every sheet index by ``s``."""
    if not 0 <= s < E.d:
        raise DomainError(f"deck shift {s} outside 0..{E.d - 1}")
    return sheet_permutation_functor(E, [[E.sheet(j + s) for j in range(1, E.d + 1)]] * (E.n + 1), name=f"rho{s}")


def sheet_permutation_functor(E: CoverGroupoid, perms: Sequence[Sequence[int]], name: str = "") -> GroupoidFunctor:
    """Relabeling ``e[i][j] -> e[i][perms[i][j-1]]`` level by level.

    Interior branch points are fixed, so any choice of one permutation of
    ``1..d`` per level ``i = 0..n`` gives a groupoid automorphism; the fiber
    objects follow the permutations of levels ``0`` and ``n``.
    """
    n, d = E.n, E.d
    if len(perms) != n + 1 or any(sorted(pi) != list(range(1, d + 1)) for pi in perms):
        raise DomainError("need one permutation of 1..d per level 0..n")
    objects = {}
    for j in range(1, d + 1):
        objects[q(0, j)] = q(0, perms[0][j - 1])
        objects[q(n + 1, j)] = q(n + 1, perms[n][j - 1])
    edges = {e(i, j): E.generator(e(i, perms[i][j - 1])) for i in range(n + 1) for j in range(1, d + 1)}
    return GroupoidFunctor(E, objects, edges, name=name)


def expected_twist_support(E: CoverGroupoid, i: int) -> frozenset[str]:
    labels = {p(i), p(i + 1)}
    labels.update(e(k, j) for k in (i - 1, i, i + 1) for j in range(1, E.d + 1))
    return frozenset(labels)


def _nontrivial_witness(f: GroupoidFunctor) -> dict | None:
    return first_difference(f, identity_functor(f.domain))


def verify_relations(n: int, d: int, max_power: int = DEFAULT_MAX_POWER) -> VerificationReport:
    """Check that the lifted twists define a braid group action on the cover.

    The report covers: every relator of ``braid_relators(n)`` evaluating to
    the identity, ``β̃_i^m`` differing from the identity for ``m <= max_power``
    (skipped for the trivial cover ``d = 1``), conjugation of generators by
    ``δ̃``, deck and projection equivariance, and support locality.
    """
    E = build_cover_groupoid(n, d)
    D = build_disk_groupoid(n)
    report = VerificationReport("relations", {"n": n, "d": d, "max_power": max_power})
    forward, backward = twist_assignment(E)
    ident = identity_functor(E)

    for rel in braid_relators(n):
        f = evaluate_braid(rel, forward, backward, domain=E)
        diff = first_difference(f, ident)
        report.add(f"relator/{relator_name(rel)}", diff is None, diff or {"word": rel.to_ints()})

    for i in range(1, n):
        if d == 1:
            report.skip(f"nontrivial/B{i}", "trivial cover: hom-sets are singletons")
            continue
        power = ident
        for m in range(1, max_power + 1):
            power = compose_functors(forward[i], power)
            witness = _nontrivial_witness(power)
            report.add(
                f"nontrivial/B{i}^{m:02d}",
                witness is not None,
                witness if witness is not None else {"power": m, "image": "identity"},
            )

    # τ_i = δ̃⁻¹ ∘ τ_{i-1} ∘ δ̃ as maps (δ̃ applied first)
    if n >= 3:
        dlt = evaluate_braid(delta(n), forward, backward, domain=E)
        dlt_inv = evaluate_braid(delta(n).inverse(), forward, backward, domain=E)
        for i in range(2, n):
            conj = compose_functors(dlt_inv, compose_functors(forward[i - 1], dlt))
            diff = first_difference(conj, forward[i])
            report.add(f"delta_conjugation/B{i}", diff is None, diff)

    proj = projection_functor(E, D)
    base, _ = disk_assignment(D)
    for i in range(1, n):
        left = compose_functors(proj, forward[i])
        right = compose_functors(base[i], proj)
        diff = first_difference(left, right)
        report.add(f"projection_equivariance/B{i}", diff is None, diff)

    for s in range(d):
        rho = deck_transformation(E, s)
        for i in range(1, n):
            diff = first_difference(compose_functors(rho, forward[i]), compose_functors(forward[i], rho))
            report.add(f"deck_equivariance/rho{s}/B{i}", diff is None, diff)

    for i in range(1, n):
        supp = support_of(forward[i])
        expected = expected_twist_support(E, i)
        report.add(
            f"support_locality/B{i}",
            supp == expected,
            None if supp == expected else {"support": sorted(supp), "expected": sorted(expected)},
        )
    return report


def verify_cube_failure(d: int, n: int = 3) -> VerificationReport:
    """Cubes of the lifted twists violate the braid relation; the first powers satisfy it."""
    E = build_cover_groupoid(n, d)
    report = VerificationReport("cube", {"n": n, "d": d})
    if d == 1:
        report.skip("cube_relation_fails", "trivial cover: functor equality is vacuous on a tree")
        return report
    lhs = evaluate_on_cover(E, BraidWord.from_ints(n, [1, 1, 1, 2, 2, 2, 1, 1, 1]))
    rhs = evaluate_on_cover(E, BraidWord.from_ints(n, [2, 2, 2, 1, 1, 1, 2, 2, 2]))
    diff = first_difference(lhs, rhs)
    report.add("cube_relation_fails", diff is not None, diff if diff is not None else {"images": "equal"})
    lhs1 = evaluate_on_cover(E, BraidWord.from_ints(n, [1, 2, 1]))
    rhs1 = evaluate_on_cover(E, BraidWord.from_ints(n, [2, 1, 2]))
    diff1 = first_difference(lhs1, rhs1)
    report.add("first_power_relation_holds", diff1 is None, diff1)
    return report


def relation_grid(n_values, d_values, max_power: int = DEFAULT_MAX_POWER):
    """Yield ``verify_relations`` reports over a parameter grid."""
    for n, d in product(n_values, d_values):
        yield verify_relations(n, d, max_power)
