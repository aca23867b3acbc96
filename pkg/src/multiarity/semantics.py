"""Finite function spaces backing the Set clone fragment and the stateful
premulticategory. A term is a tuple of output indices listed over the
domain points in lexicographic order."""

from __future__ import annotations

import itertools
from typing import Mapping, Sequence

from .errors import CapacityError, ShapeError
from .finset import FinSet
from .tables import all_contexts, hom_key

HOM_GUARD = 10_000


def carrier_dict(carriers) -> dict[str, FinSet]:
    """Accept {name: FinSet}, a list of FinSets (named S0, S1, ...), or
    plain sizes."""
    if isinstance(carriers, Mapping):
        items = list(carriers.items())
    else:
        items = [(f"S{i}", c) for i, c in enumerate(carriers)]
    out = {}
    for name, c in items:
        if isinstance(c, int):
            c = FinSet(str(i) for i in range(c))
        if not isinstance(c, FinSet):
            c = FinSet(c)
        if len(c) == 0:
            raise ShapeError(f"carrier {name} is empty")
        out[name] = c
    if not out:
        raise ShapeError("no carriers given")
    return out


class FunctionSpace:
    """Indexing helpers for functions prod(sizes) -> range(out_size)."""

    def __init__(self, sizes: Sequence[int], out_size: int):
        self.sizes = tuple(sizes)
        self.out_size = out_size
        self.points = list(itertools.product(*[range(n) for n in self.sizes]))
        strides = []
        acc = 1
        for n in reversed(self.sizes):
            strides.append(acc)
            acc *= n
        self.strides = tuple(reversed(strides))

    def count(self) -> int:
        return self.out_size ** len(self.points)

    def index(self, point: Sequence[int]) -> int:
        return sum(p * s for p, s in zip(point, self.strides))

    def all(self):
        return itertools.product(range(self.out_size), repeat=len(self.points))


def code(values: Sequence[int]) -> str:
    if all(v < 10 for v in values):
        return "".join(str(v) for v in values)
    return ".".join(str(v) for v in values)


class FunctionModel:
    """All functions between products of carriers (optionally threaded
    with a state set), keyed by name, with a capacity guard per hom."""

    def __init__(self, carriers: dict[str, FinSet], max_context: int, state_size: int = 0,
                 guard: int = HOM_GUARD):
        self.carriers = carriers
        self.state_size = state_size
        self.objects = tuple(carriers)
        self.max_context = max_context
        self.homs: dict = {}
        self.decode: dict[str, tuple] = {}
        self.encode: dict = {}
        self.spaces: dict = {}
        for ctx in all_contexts(self.objects, max_context):
            for target in self.objects:
                space = self.space(ctx, target)
                if space.count() > guard:
                    raise CapacityError(
                        f"hom {hom_key(ctx, target)} has {space.count()} terms (guard {guard})")
                key = hom_key(ctx, target)
                names = []
                for values in space.all():
                    name = f"{key}|{code(values)}"
                    names.append(name)
                    self.decode[name] = (ctx, target, values)
                    self.encode[(ctx, target, values)] = name
                self.homs[(ctx, target)] = names

    def space(self, ctx, target) -> FunctionSpace:
        k = (tuple(ctx), target)
        if k not in self.spaces:
            sizes = [len(self.carriers[a]) for a in ctx]
            out = len(self.carriers[target])
            if self.state_size:
                sizes.append(self.state_size)
                out *= self.state_size
            self.spaces[k] = FunctionSpace(sizes, out)
        return self.spaces[k]

    def name(self, ctx, target, values) -> str:
        return self.encode[(tuple(ctx), target, tuple(values))]
