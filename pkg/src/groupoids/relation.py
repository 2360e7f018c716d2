"""Finite universes and relations between them.

A relation r : X -> Y is stored through its graph, a set of
(output, input) pairs inside Y x X.  Composition, transposition and
cartesian products follow the usual set-theoretic formulas; values are
immutable and hashable so they can be shared and compared freely.

Pair universes name their elements by joining the component names with
a comma.  Component names may themselves contain commas (nested pairs
do); the constructor rejects a product whenever two distinct component
pairs would collide on the same joined name.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

from .errors import UniverseMismatch, UnknownElement

PAIR_SEP = ","


class Universe:
    """A named finite set of element identifiers, kept sorted."""

    def __init__(self, name: str, elements: Iterable[str]):
        elems = tuple(sorted(elements))
        if len(set(elems)) != len(elems):
            dup = sorted(e for e in set(elems) if elems.count(e) > 1)[0]
            raise ValueError(f"duplicate element {dup!r} in universe {name!r}")
        self.name = name
        self.elements = elems
        self._set = frozenset(elems)

    def __contains__(self, x) -> bool:
        return x in self._set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Universe)
            and self.name == other.name
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.name, self.elements))

    def __repr__(self) -> str:
        return f"Universe({self.name!r}, {len(self)} elements)"


ONE = Universe("1", ("1",))


def pair_name(x: str, y: str) -> str:
    return x + PAIR_SEP + y


def product_universe(a: Universe, b: Universe) -> Universe:
    """Universe of pairs; joined names must stay collision free."""
    elems = [pair_name(x, y) for x in a.elements for y in b.elements]
    if len(set(elems)) != len(elems):
        raise ValueError(
            f"ambiguous pair names in product of {a.name!r} and {b.name!r}"
        )
    return Universe(f"{a.name}*{b.name}", elems)


class FinRel:
    """Relation between two finite universes.

    The graph holds (output, input) pairs: (y, x) present means x is
    related to y.
    """

    def __init__(self, source: Universe, target: Universe, graph):
        pairs = tuple(sorted(set(graph)))
        for y, x in pairs:
            if x not in source:
                raise UnknownElement(x, f"source universe {source.name!r}")
            if y not in target:
                raise UnknownElement(y, f"target universe {target.name!r}")
        self.source = source
        self.target = target
        self.graph = pairs

    @cached_property
    def _by_input(self):
        index: dict = {}
        for y, x in self.graph:
            index.setdefault(x, []).append(y)
        return {x: tuple(ys) for x, ys in index.items()}

    def outputs(self, x: str):
        """All elements related to the input x."""
        if x not in self.source:
            raise UnknownElement(x, f"source universe {self.source.name!r}")
        return self._by_input.get(x, ())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FinRel)
            and self.source == other.source
            and self.target == other.target
            and self.graph == other.graph
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.graph))

    def __repr__(self) -> str:
        return (
            f"FinRel({self.source.name!r} -> {self.target.name!r}, "
            f"{len(self.graph)} pairs)"
        )


def compose(s: FinRel, r: FinRel) -> FinRel:
    """Relational composition s after r."""
    if r.target != s.source:
        raise UniverseMismatch(r.target, s.source, "compose")
    pairs = set()
    for y, x in r.graph:
        for z in s._by_input.get(y, ()):
            pairs.add((z, x))
    return FinRel(r.source, s.target, pairs)


def transpose(r: FinRel) -> FinRel:
    return FinRel(r.target, r.source, ((x, y) for y, x in r.graph))


def product(r: FinRel, r1: FinRel) -> FinRel:
    """Componentwise product relation X x X1 -> Y x Y1."""
    src = product_universe(r.source, r1.source)
    tgt = product_universe(r.target, r1.target)
    pairs = [
        (pair_name(y, y1), pair_name(x, x1))
        for y, x in r.graph
        for y1, x1 in r1.graph
    ]
    return FinRel(src, tgt, pairs)


def domain(r: FinRel) -> tuple:
    return tuple(sorted({x for _, x in r.graph}))


def image(r: FinRel) -> tuple:
    return tuple(sorted({y for y, _ in r.graph}))


def is_mapping(r: FinRel) -> bool:
    """True when every source element has exactly one output."""
    return all(len(r._by_input.get(x, ())) == 1 for x in r.source)


def apply(r: FinRel, x: str) -> tuple:
    return r.outputs(x)


def identity(universe: Universe) -> FinRel:
    return FinRel(universe, universe, ((x, x) for x in universe))


def flip(a: Universe, b: Universe) -> FinRel:
    """The swap A x B -> B x A."""
    src = product_universe(a, b)
    tgt = product_universe(b, a)
    pairs = [(pair_name(y, x), pair_name(x, y)) for x in a for y in b]
    return FinRel(src, tgt, pairs)


def unitor_left(universe: Universe) -> FinRel:
    """The canonical bijection 1 x X -> X."""
    src = product_universe(ONE, universe)
    return FinRel(src, universe, ((x, pair_name("1", x)) for x in universe))


def unitor_right(universe: Universe) -> FinRel:
    """The canonical bijection X x 1 -> X."""
    src = product_universe(universe, ONE)
    return FinRel(src, universe, ((x, pair_name(x, "1")) for x in universe))


def mapping_rel(source: Universe, target: Universe, func) -> FinRel:
    """Graph of a total map given as a dict."""
    missing = [x for x in source if x not in func]
    if missing:
        raise UnknownElement(missing[0], "mapping domain")
    return FinRel(source, target, ((func[x], x) for x in source))


def first_difference(lhs: FinRel, rhs: FinRel):
    """Sorted-least pair on which two relations disagree, or None."""
    diff = set(lhs.graph) ^ set(rhs.graph)
    return min(diff) if diff else None
