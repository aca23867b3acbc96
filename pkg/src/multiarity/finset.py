"""Finite sets, total functions and the finite colimits used by the funny tensor.

Elements are hashable tokens: strings, ints, or tuples of tokens (products
build tuples). Coproducts tag elements as the string ``"i:token"``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .errors import NotACoconeError, ShapeError


def render(x) -> str:
    """Readable string form of an element, used for tags and JSON."""
    if isinstance(x, tuple):
        return "(" + ",".join(render(y) for y in x) + ")"
    return str(x)


@dataclass(frozen=True)
class FinSet:
    elements: tuple
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, elements: Iterable[Hashable] = ()):
        elems = tuple(elements)
        index = {}
        for i, x in enumerate(elems):
            if x in index:
                raise ShapeError(f"duplicate element {render(x)!r}")
            index[x] = i
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_index", index)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x) -> int:
        return self._index[x]

    def __repr__(self) -> str:
        return "FinSet{" + ", ".join(render(x) for x in self.elements) + "}"


@dataclass(frozen=True, eq=False)
class FinMap:
    dom: FinSet
    cod: FinSet
    table: dict

    def __post_init__(self):
        if len(self.table) != len(self.dom) or any(x not in self.table for x in self.dom):
            raise ShapeError("map is not total on its domain")
        for x, y in self.table.items():
            if y not in self.cod:
                raise ShapeError(f"image {render(y)!r} of {render(x)!r} outside codomain")

    @classmethod
    def from_fn(cls, dom: FinSet, cod: FinSet, fn: Callable) -> "FinMap":
        return cls(dom, cod, {x: fn(x) for x in dom})

    @classmethod
    def identity(cls, s: FinSet) -> "FinMap":
        return cls(s, s, {x: x for x in s})

    def __call__(self, x):
        return self.table[x]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinMap):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.table == other.table

    __hash__ = None

    def then(self, g: "FinMap") -> "FinMap":
        """Diagrammatic composite: first self, then g."""
        if self.cod != g.dom:
            raise ShapeError("composite of non-composable maps")
        return FinMap(self.dom, g.cod, {x: g.table[y] for x, y in self.table.items()})

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.dom)

    def is_surjective(self) -> bool:
        return set(self.table.values()) == set(self.cod)

    def is_bijective(self) -> bool:
        return len(self.dom) == len(self.cod) and self.is_injective()

    def inverse(self) -> "FinMap":
        if not self.is_bijective():
            raise ShapeError("map is not a bijection")
        return FinMap(self.cod, self.dom, {y: x for x, y in self.table.items()})


def compose(g: FinMap, f: FinMap) -> FinMap:
    """g after f."""
    return f.then(g)


@dataclass(frozen=True, eq=False)
class Cocone:
    """Legs into a common apex. ``diagram`` holds the span the cocone sits
    under (maps out of a shared domain), when known."""

    apex: FinSet
    legs: tuple
    diagram: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple(self.legs))
        object.__setattr__(self, "diagram", tuple(self.diagram))
        for leg in self.legs:
            if leg.cod != self.apex:
                raise ShapeError("cocone leg does not land in the apex")
        if self.diagram:
            if len(self.diagram) != len(self.legs):
                raise ShapeError("diagram and legs differ in length")
            for d, leg in zip(self.diagram, self.legs):
                if d.cod != leg.dom:
                    raise ShapeError("cocone leg domain does not match the diagram")


class UnionFind:
    """Union-find over 0..n-1 with path compression; the smaller index
    always becomes the root, so roots are least class members."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> bool:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        if rj < ri:
            ri, rj = rj, ri
        self.parent[rj] = ri
        return True


def coproduct(sets: Sequence[FinSet]) -> tuple[FinSet, list[FinMap]]:
    elems = [f"{i}:{render(x)}" for i, s in enumerate(sets) for x in s]
    total = FinSet(elems)
    injections = [FinMap(s, total, {x: f"{i}:{render(x)}" for x in s}) for i, s in enumerate(sets)]
    return total, injections


def product(sets: Sequence[FinSet]) -> tuple[FinSet, list[FinMap]]:
    apex = FinSet(itertools.product(*[s.elements for s in sets]))
    projections = [FinMap(apex, s, {x: x[i] for x in apex}) for i, s in enumerate(sets)]
    return apex, projections


def tuple_map(maps: Sequence[FinMap], cod: FinSet | None = None) -> FinMap:
    """The tupling <f_1,...,f_n> of maps sharing a domain."""
    if not maps:
        raise ShapeError("tupling needs at least one map")
    dom = maps[0].dom
    if any(m.dom != dom for m in maps):
        raise ShapeError("tupled maps must share a domain")
    if cod is None:
        cod = product([m.cod for m in maps])[0]
    return FinMap(dom, cod, {x: tuple(m(x) for m in maps) for x in dom})


def product_map(maps: Sequence[FinMap]) -> FinMap:
    """f_1 x ... x f_n between the product sets."""
    dom = product([m.dom for m in maps])[0]
    cod = product([m.cod for m in maps])[0]
    return FinMap(dom, cod, {x: tuple(m(xi) for m, xi in zip(maps, x)) for x in dom})


def _quotient(cod: FinSet, uf: UnionFind) -> tuple[FinSet, FinMap]:
    elems = cod.elements
    reps = [x for i, x in enumerate(elems) if uf.find(i) == i]
    apex = FinSet(reps)
    return apex, FinMap(cod, apex, {x: elems[uf.find(i)] for i, x in enumerate(elems)})


def coequalizer(f: FinMap, g: FinMap) -> tuple[FinSet, FinMap]:
    if f.dom != g.dom or f.cod != g.cod:
        raise ShapeError("coequalizer of maps with different domain or codomain")
    uf = UnionFind(len(f.cod))
    for x in f.dom:
        uf.union(f.cod.index(f(x)), f.cod.index(g(x)))
    return _quotient(f.cod, uf)


def wide_pushout(legs: Sequence[FinMap]) -> Cocone:
    legs = list(legs)
    if not legs:
        raise ShapeError("wide pushout needs at least one leg")
    dom = legs[0].dom
    if any(leg.dom != dom for leg in legs):
        raise ShapeError("wide pushout legs must share a domain")
    total, inj = coproduct([leg.cod for leg in legs])
    uf = UnionFind(len(total))
    for x in dom:
        first = total.index(inj[0](legs[0](x)))
        for leg, i in zip(legs[1:], inj[1:]):
            uf.union(first, total.index(i(leg(x))))
    apex, q = _quotient(total, uf)
    return Cocone(apex, [i.then(q) for i in inj], legs)


def iterated_pushout(legs: Sequence[FinMap]) -> Cocone:
    """Fold binary pushouts left to right; the result is a cocone over the
    same wide span (universal by the iterated-pushout lemma)."""
    legs = list(legs)
    if not legs:
        raise ShapeError("pushout needs at least one leg")
    cone = wide_pushout(legs[:1])
    into = list(cone.legs)
    for leg in legs[1:]:
        via = legs[0].then(into[0])
        step = wide_pushout([via, leg])
        into = [m.then(step.legs[0]) for m in into] + [step.legs[1]]
        cone = step
    return Cocone(cone.apex, into, legs)


def mediating_map(pushout: Cocone, target: Cocone) -> FinMap:
    """The unique q with q . p_i = t_i, for a universal ``pushout``."""
    if len(pushout.legs) != len(target.legs):
        raise ShapeError("cocones have different numbers of legs")
    for p, t in zip(pushout.legs, target.legs):
        if p.dom != t.dom:
            raise ShapeError("cocone legs have different domains")
    if pushout.diagram:
        dom = pushout.diagram[0].dom
        for x in dom:
            vals = {t(d(x)) for d, t in zip(pushout.diagram, target.legs)}
            if len(vals) > 1:
                raise NotACoconeError(
                    "target legs do not agree on the diagram",
                    {"element": render(x), "images": sorted(render(v) for v in vals)},
                )
    q: dict = {}
    for i, (p, t) in enumerate(zip(pushout.legs, target.legs)):
        for y in p.dom:
            k, v = p(y), t(y)
            if q.setdefault(k, v) != v:
                raise NotACoconeError(
                    "no well-defined mediating map",
                    {"leg": i, "element": render(y), "class": render(k),
                     "images": [render(q[k]), render(v)]},
                )
    if len(q) != len(pushout.apex):
        raise ShapeError("pushout legs are not jointly surjective")
    return FinMap(pushout.apex, target.apex, q)


def canonical_bijection(a: Cocone, b: Cocone) -> FinMap | None:
    """Mediating bijection a.apex -> b.apex respecting legs, or None."""
    try:
        q = mediating_map(a, b)
        r = mediating_map(b, a)
    except NotACoconeError:
        return None
    if q.then(r) == FinMap.identity(a.apex) and r.then(q) == FinMap.identity(b.apex):
        return q
    return None
