"""Free groupoids on finite directed graphs.

A morphism of the free groupoid is a reduced path word: a sequence of
oriented edges ``(label, sign)`` with ``sign`` in ``{+1, -1}`` such that
consecutive letters are composable and no letter is followed by its own
inverse.  Functors are determined by an object map and the image word of
each generating edge; inverse letters are sent to inverse words.

Composition convention: ``compose_functors(outer, inner)`` applies
``inner`` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import CompositionError, PreconditionError, SchemaError

Letter = tuple[str, int]

FORWARD = 1
INVERSE = -1


class FreeGroupoid:
    """Free groupoid generated by a finite directed graph.

    Parameters
    ----------
    objects : iterable of str
        Object labels, unique.
    edges : iterable of (label, source, target)
        Generating edges.  Source and target must be objects.
    """

    def __init__(self, objects: Iterable[str], edges: Iterable[tuple[str, str, str]]):
        self.objects: tuple[str, ...] = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise SchemaError("object labels must be unique")
        object_set = set(self.objects)
        ends: dict[str, tuple[str, str]] = {}
        for label, source, target in edges:
            if label in ends:
                raise SchemaError(f"duplicate edge label {label!r}")
            if source not in object_set or target not in object_set:
                raise SchemaError(f"edge {label!r} has an endpoint outside the object set")
            ends[label] = (source, target)
        self._ends = ends
        self._object_set = frozenset(object_set)
        self.edges: tuple[str, ...] = tuple(ends)

    def __repr__(self) -> str:
        return f"FreeGroupoid({len(self.objects)} objects, {len(self.edges)} edges)"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeGroupoid):
            return NotImplemented
        if self is other:
            return True
        return self.objects == other.objects and self._ends == other._ends

    def __hash__(self) -> int:
        return hash((self.objects, tuple(sorted(self._ends.items()))))

    def has_object(self, label: str) -> bool:
        return label in self._object_set

    def has_edge(self, label: str) -> bool:
        return label in self._ends

    def ends(self, label: str, sign: int = FORWARD) -> tuple[str, str]:
        """Oriented (source, target) of a letter."""
        try:
            source, target = self._ends[label]
        except KeyError:
            raise SchemaError(f"unknown edge label {label!r}") from None
        return (source, target) if sign == FORWARD else (target, source)

    def identity(self, obj: str) -> "PathWord":
        if obj not in self._object_set:
            raise SchemaError(f"unknown object {obj!r}")
        return PathWord((), obj, obj)

    def generator(self, label: str, sign: int = FORWARD) -> "PathWord":
        source, target = self.ends(label, sign)
        return PathWord(((label, sign),), source, target)

    def word(self, letters: Sequence[Letter], source: str | None = None) -> "PathWord":
        return reduce_path(letters, self, source)


@dataclass(frozen=True)
class PathWord:
    """A reduced morphism of a free groupoid.

    Build these with :func:`reduce_path` or :meth:`FreeGroupoid.word`; the
    constructor only checks the conditions that need no groupoid.
    """

    letters: tuple[Letter, ...]
    source: str
    target: str

    def __post_init__(self):
        if not self.letters and self.source != self.target:
            raise CompositionError("empty word must be an identity")
        for (a, s), (b, t) in zip(self.letters, self.letters[1:]):
            if a == b and s == -t:
                raise CompositionError("word is not reduced")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return f"1_{self.source}"
        return "·".join(lab if s == FORWARD else f"{lab}^-1" for lab, s in self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def inverse(self) -> "PathWord":
        return PathWord(tuple((lab, -s) for lab, s in reversed(self.letters)), self.target, self.source)

    def then(self, other: "PathWord") -> "PathWord":
        """Concatenate ``self`` followed by ``other`` and cancel at the seam."""
        if self.target != other.source:
            raise CompositionError(f"cannot compose a word ending at {self.target} with one starting at {other.source}")
        left = list(self.letters)
        right = other.letters
        k = 0
        while k < len(right) and left and left[-1][0] == right[k][0] and left[-1][1] == -right[k][1]:
            left.pop()
            k += 1
        return PathWord(tuple(left) + right[k:], self.source, other.target)


def rotate_closed(word: PathWord, k: int, groupoid: FreeGroupoid) -> PathWord:
    """Rotate a closed word by ``k`` letters, rebasing at the new start."""
    if word.source != word.target:
        raise CompositionError("only closed words can be rotated")
    if not word.letters:
        return word
    k %= len(word.letters)
    letters = word.letters[k:] + word.letters[:k]
    base = groupoid.ends(*letters[0])[0]
    return PathWord(letters, base, base)


def reduce_path(letters: Sequence[Letter], groupoid: FreeGroupoid, source: str | None = None) -> PathWord:
    """Freely reduce a composable letter sequence.

    ``source`` is required for the empty word and, when given, must match
    the start of the first letter.
    """
    stack: list[Letter] = []
    current = source
    start = source
    for label, sign in letters:
        if sign not in (FORWARD, INVERSE):
            raise SchemaError(f"orientation must be +1 or -1, got {sign!r}")
        s, t = groupoid.ends(label, sign)
        if current is None:
            start = s
        elif s != current:
            raise CompositionError(f"letter {label}^{sign} starts at {s}, expected {current}")
        current = t
        if stack and stack[-1][0] == label and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((label, sign))
    if start is None:
        raise CompositionError("empty word needs an explicit source object")
    if not groupoid.has_object(start):
        raise SchemaError(f"unknown object {start!r}")
    return PathWord(tuple(stack), start, current)


class GroupoidFunctor:
    """A functor between free groupoids given on generators.

    ``object_map`` sends objects of ``domain`` to objects of ``codomain``;
    ``edge_map`` sends each generating edge to a reduced word of
    ``codomain``.  When ``codomain`` is omitted the functor is an
    endofunctor and the object map must be a bijection.
    """

    def __init__(
        self,
        domain: FreeGroupoid,
        object_map: Mapping[str, str],
        edge_map: Mapping[str, PathWord],
        codomain: FreeGroupoid | None = None,
        name: str = "",
    ):
        self.domain = domain
        self.codomain = domain if codomain is None else codomain
        self.name = name
        self.object_map = {o: object_map.get(o, o) for o in domain.objects}
        for o, img in self.object_map.items():
            if not self.codomain.has_object(img):
                raise SchemaError(f"object {o} maps outside the codomain")
        if codomain is None and len(set(self.object_map.values())) != len(self.object_map):
            raise SchemaError("object map of an endofunctor must be a bijection")
        unknown = set(edge_map) - set(domain.edges)
        if unknown:
            raise SchemaError(f"edge map names unknown edges {sorted(unknown)}")
        images: dict[str, PathWord] = {}
        for e in domain.edges:
            w = edge_map.get(e)
            if w is None:
                w = self.codomain.generator(e)
            s, t = domain.ends(e)
            if (w.source, w.target) != (self.object_map[s], self.object_map[t]):
                raise CompositionError(
                    f"image of {e} runs {w.source}->{w.target}, "
                    f"expected {self.object_map[s]}->{self.object_map[t]}"
                )
            images[e] = w
        self.edge_map = images

    def __repr__(self) -> str:
        label = self.name or "functor"
        return f"<GroupoidFunctor {label} on {self.domain!r}>"

    def __call__(self, word: PathWord) -> PathWord:
        return self.apply(word)

    def image(self, label: str, sign: int = FORWARD) -> PathWord:
        w = self.edge_map[label]
        return w if sign == FORWARD else w.inverse()

    def apply(self, word: PathWord) -> PathWord:
        """Image of a word: letterwise expansion followed by reduction."""
        result = self.codomain.identity(self.object_map[word.source])
        for label, sign in word.letters:
            result = result.then(self.image(label, sign))
        return result

    def is_relabeling(self) -> bool:
        """True when every edge goes to a single signed edge, bijectively."""
        if self.codomain != self.domain:
            return False
        seen = set()
        for w in self.edge_map.values():
            if len(w) != 1:
                return False
            seen.add(w.letters[0][0])
        return len(seen) == len(self.domain.edges)

    def inverse(self) -> "GroupoidFunctor":
        """Inverse of a relabeling functor."""
        if not self.is_relabeling():
            raise PreconditionError("only relabeling functors can be inverted generically")
        objects = {img: o for o, img in self.object_map.items()}
        edges = {}
        for e, w in self.edge_map.items():
            (label, sign), = w.letters
            edges[label] = self.domain.generator(e, sign)
        return GroupoidFunctor(self.domain, objects, edges, name=f"{self.name}^-1" if self.name else "")


def identity_functor(groupoid: FreeGroupoid) -> GroupoidFunctor:
    return GroupoidFunctor(groupoid, {}, {}, name="id")


def compose_functors(outer: GroupoidFunctor, inner: GroupoidFunctor) -> GroupoidFunctor:
    """``outer ∘ inner``: apply ``inner`` first."""
    if outer.domain != inner.codomain:
        raise SchemaError("outer functor's domain differs from inner functor's codomain")
    objects = {o: outer.object_map[img] for o, img in inner.object_map.items()}
    edges = {e: outer.apply(w) for e, w in inner.edge_map.items()}
    codomain = None if outer.codomain == inner.domain else outer.codomain
    return GroupoidFunctor(inner.domain, objects, edges, codomain=codomain)


def functor_equal(f: GroupoidFunctor, g: GroupoidFunctor) -> bool:
    if f.domain != g.domain:
        raise SchemaError("functors have different domains")
    return f.object_map == g.object_map and f.edge_map == g.edge_map


def first_difference(f: GroupoidFunctor, g: GroupoidFunctor) -> dict | None:
    """A generator on which two functors disagree, or None when equal."""
    if f.domain != g.domain:
        raise SchemaError("functors have different domains")
    for o in f.domain.objects:
        if f.object_map[o] != g.object_map[o]:
            return {"object": o, "left": f.object_map[o], "right": g.object_map[o]}
    for e in f.domain.edges:
        if f.edge_map[e] != g.edge_map[e]:
            return {"edge": e, "left": str(f.edge_map[e]), "right": str(g.edge_map[e])}
    return None


def functor_power(f: GroupoidFunctor, m: int) -> GroupoidFunctor:
    """``f`` composed with itself ``m >= 0`` times."""
    result = identity_functor(f.domain)
    for _ in range(m):
        result = compose_functors(f, result)
    return result


def support_of(f: GroupoidFunctor) -> frozenset[str]:
    """Labels of objects and edges not fixed by ``f``."""
    moved = {o for o, img in f.object_map.items() if img != o}
    for e, w in f.edge_map.items():
        if w.letters != ((e, FORWARD),):
            moved.add(e)
    return frozenset(moved)


def relabel_labels(h: GroupoidFunctor, labels: Iterable[str]) -> frozenset[str]:
    """Image of a label set under a relabeling (signs forgotten)."""
    out = set()
    for x in labels:
        if h.domain.has_edge(x):
            out.add(h.edge_map[x].letters[0][0])
        else:
            out.add(h.object_map[x])
    return frozenset(out)


def conjugate_support_check(f: GroupoidFunctor, h: GroupoidFunctor) -> bool:
    """Compare ``supp(h⁻¹∘f∘h)`` with ``h⁻¹(supp f)``.

    Raises PreconditionError when ``h`` is not a relabeling.
    """
    if not h.is_relabeling():
        raise PreconditionError("conjugating functor must be a relabeling")
    h_inv = h.inverse()
    conj = compose_functors(h_inv, compose_functors(f, h))
    return support_of(conj) == relabel_labels(h_inv, support_of(f))
