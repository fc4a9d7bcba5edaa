"""Braid words on the standard generators and their evaluation as functors.

Braid words are evaluated leftmost generator first, so that
``evaluate_braid(u + v) == compose_functors(evaluate_braid(v), evaluate_braid(u))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DomainError, SchemaError
from .groupoid import GroupoidFunctor, compose_functors, identity_functor, FreeGroupoid


@dataclass(frozen=True)
class BraidWord:
    """Word in the generators ``β_1 .. β_{n-1}`` of the braid group on ``n`` strands.

    ``letters`` holds pairs ``(i, sign)`` with ``1 <= i <= n-1`` and ``sign = ±1``.
    """

    n: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("strand count must be positive")
        object.__setattr__(self, "letters", tuple((int(i), int(s)) for i, s in self.letters))
        for i, s in self.letters:
            if not 1 <= i <= self.n - 1:
                raise DomainError(f"generator index {i} outside 1..{self.n - 1}")
            if s not in (1, -1):
                raise DomainError(f"generator exponent must be ±1, got {s}")

    @classmethod
    def from_ints(cls, n: int, word: Iterable[int]) -> "BraidWord":
        """Signed-integer notation: ``[1, 2, -1]`` is β₁β₂β₁⁻¹."""
        letters = []
        for x in word:
            if x == 0:
                raise DomainError("0 is not a generator")
            letters.append((abs(x), 1 if x > 0 else -1))
        return cls(n, tuple(letters))

    def to_ints(self) -> list[int]:
        return [i * s for i, s in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise SchemaError("braid words on different strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** -k
        return BraidWord(self.n, self.letters * k)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple((i, -s) for i, s in reversed(self.letters)))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(f"b{i}" if s == 1 else f"b{i}^-1" for i, s in self.letters)


def generator(n: int, i: int, sign: int = 1) -> BraidWord:
    return BraidWord(n, ((i, sign),))


def reduce_braid(w: BraidWord) -> BraidWord:
    """Cancel adjacent ``β_i β_i⁻¹`` pairs; no braid relations are used."""
    stack: list[tuple[int, int]] = []
    for i, s in w.letters:
        if stack and stack[-1] == (i, -s):
            stack.pop()
        else:
            stack.append((i, s))
    return BraidWord(w.n, tuple(stack))


def braid_relators(n: int) -> list[BraidWord]:
    """Braid relators ``β_i β_{i+1} β_i β_{i+1}⁻¹ β_i⁻¹ β_{i+1}⁻¹`` and far commutators."""
    if n < 2:
        raise DomainError("need at least two strands")
    relators = []
    for i in range(1, n - 1):
        relators.append(BraidWord.from_ints(n, [i, i + 1, i, -(i + 1), -i, -(i + 1)]))
    for i in range(1, n):
        for j in range(i + 2, n):
            relators.append(BraidWord.from_ints(n, [i, j, -i, -j]))
    return relators


def relator_name(w: BraidWord) -> str:
    ints = w.to_ints()
    if len(ints) == 6:
        return f"braid({ints[0]},{ints[1]})"
    return f"commute({ints[0]},{ints[1]})"


def delta(n: int) -> BraidWord:
    """``δ = β_1 β_2 ⋯ β_{n-1}``."""
    if n < 2:
        raise DomainError("need at least two strands")
    return BraidWord.from_ints(n, range(1, n))


def evaluate_braid(
    w: BraidWord,
    assignment: Mapping[int, GroupoidFunctor],
    inverses: Mapping[int, GroupoidFunctor] | None = None,
    domain: FreeGroupoid | None = None,
) -> GroupoidFunctor:
    """Evaluate a braid word to a functor, leftmost letter applied first.

    Inverse letters use ``inverses[i]`` when supplied, otherwise
    ``assignment[i].inverse()`` (which only exists for relabelings).
    ``domain`` is needed only to evaluate the empty word when
    ``assignment`` is empty.
    """
    if domain is None:
        if not assignment:
            raise SchemaError("empty assignment and no domain given")
        domain = next(iter(assignment.values())).domain
    result = identity_functor(domain)
    cache: dict[tuple[int, int], GroupoidFunctor] = {}
    for i, s in w.letters:
        f = cache.get((i, s))
        if f is None:
            if i not in assignment:
                raise SchemaError(f"no functor assigned to generator {i}")
            if s == 1:
                f = assignment[i]
            elif inverses is not None and i in inverses:
                f = inverses[i]
            else:
                f = assignment[i].inverse()
            if f.domain != domain:
                raise SchemaError("assigned functors do not share a domain")
            cache[(i, s)] = f
        result = compose_functors(f, result)
    return result
