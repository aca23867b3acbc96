"""Finite categories and graphs, used as inputs and outputs of the free
constructions and of the unary restriction of clones and multicategories."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from .errors import ShapeError
from .report import Report


@dataclass
class FinCategory:
    objects: tuple
    homs: dict  # (A, B) -> tuple of morphism names
    ids: dict  # A -> name
    comp: Mapping  # (g, f) -> g . f, partial
    _type: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self.objects = tuple(self.objects)
        self.homs = {k: tuple(v) for k, v in self.homs.items() if v}
        self._type = {}
        for (a, b), ms in self.homs.items():
            if a not in self.objects or b not in self.objects:
                raise ShapeError(f"hom ({a},{b}) mentions an unknown object")
            for m in ms:
                if m in self._type:
                    raise ShapeError(f"morphism name {m!r} used twice")
                self._type[m] = (a, b)
        for a in self.objects:
            if self._type.get(self.ids.get(a)) != (a, a):
                raise ShapeError(f"identity of {a} missing or mistyped")

    def type_of(self, m) -> tuple:
        return self._type[m]

    def hom(self, a, b) -> tuple:
        return self.homs.get((a, b), ())

    @property
    def morphisms(self) -> list:
        return list(self._type)

    def compose(self, g, f):
        """g after f, or None where the table is undefined."""
        return self.comp.get((g, f))


def validate_category(c: FinCategory) -> Report:
    """Identity and associativity laws where composites are tabled."""
    rep = Report("category")
    for f in c.morphisms:
        a, b = c.type_of(f)
        for law, val in (("left-unit", c.compose(c.ids[b], f)), ("right-unit", c.compose(f, c.ids[a]))):
            if val is None:
                rep.gap(law, {"f": f}, "identity composite missing")
            elif val == f:
                rep.passed(law)
            else:
                rep.fail(law, {"f": f, "lhs": val, "rhs": f})
    for (a, b), fs in c.homs.items():
        for f in fs:
            for (b2, cc), gs in c.homs.items():
                if b2 != b:
                    continue
                for g in gs:
                    gf = c.compose(g, f)
                    if gf is not None and c.type_of(gf) != (a, cc):
                        rep.fail("composite-type", {"g": g, "f": f, "result": gf})
                    for (c2, d), hs in c.homs.items():
                        if c2 != cc:
                            continue
                        for h in hs:
                            hg = c.compose(h, g)
                            if gf is None or hg is None:
                                rep.law("assoc").skipped += 1
                                continue
                            lhs, rhs = c.compose(h, gf), c.compose(hg, f)
                            if lhs is None or rhs is None:
                                rep.law("assoc").skipped += 1
                            elif lhs == rhs:
                                rep.passed("assoc")
                            else:
                                rep.fail("assoc", {"h": h, "g": g, "f": f, "lhs": lhs, "rhs": rhs})
    return rep


def category_from_arrows(objects, arrows: Mapping, comp: Mapping | None = None) -> FinCategory:
    """Build a category from non-identity arrows {name: (A, B)} and a
    composition table for them; identities are named ``id_A``."""
    homs: dict = {}
    ids = {a: f"id_{a}" for a in objects}
    for a in objects:
        homs.setdefault((a, a), []).append(ids[a])
    for m, (a, b) in arrows.items():
        homs.setdefault((a, b), []).append(m)
    table = dict(comp or {})
    for m, (a, b) in itertools.chain(arrows.items(), ((ids[a], (a, a)) for a in objects)):
        table[(ids[b], m)] = m
        table[(m, ids[a])] = m
    return FinCategory(tuple(objects), homs, ids, table)


@dataclass
class FinGraph:
    vertices: tuple
    edges: dict  # (A, B) -> tuple of edge names

    def __post_init__(self):
        self.vertices = tuple(self.vertices)
        seen = set()
        for (a, b), es in self.edges.items():
            if a not in self.vertices or b not in self.vertices:
                raise ShapeError("edge between unknown vertices")
            for e in es:
                if e in seen:
                    raise ShapeError(f"edge name {e!r} used twice")
                seen.add(e)


@dataclass
class ArrowGraph:
    """A graph whose hom-objects are arrow objects."""

    vertices: tuple
    edges: dict  # (A, B) -> ArrowObj

    def __post_init__(self):
        self.vertices = tuple(self.vertices)
        for a, b in self.edges:
            if a not in self.vertices or b not in self.vertices:
                raise ShapeError("edge between unknown vertices")
