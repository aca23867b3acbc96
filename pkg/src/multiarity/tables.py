"""Multi-hom tables shared by every multi-ary structure, plus lazily
computed operation tables and a small backtracking search."""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from typing import Callable, Iterable, Iterator, Sequence

from .errors import CapacityError, ShapeError

Context = tuple  # tuple of object names


def hom_key(ctx: Sequence[str], target: str) -> str:
    return ",".join(ctx) + "->" + target


def parse_hom_key(key: str) -> tuple[Context, str]:
    if "->" not in key:
        raise ShapeError(f"bad hom key {key!r}")
    lhs, target = key.rsplit("->", 1)
    ctx = tuple(lhs.split(",")) if lhs else ()
    return ctx, target


def all_contexts(objects: Sequence[str], max_len: int, min_len: int = 1) -> list[Context]:
    out = []
    for n in range(min_len, max_len + 1):
        out.extend(itertools.product(objects, repeat=n))
    return out


class MultiHomTable:
    """Terms per (context, target). Term names are unique across the whole
    table, so a name determines its hom."""

    def __init__(self, objects: Sequence[str], max_context: int, homs: Mapping):
        if max_context < 1:
            raise ShapeError("maxContext must be positive")
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise ShapeError("duplicate object names")
        self.max_context = max_context
        objs = set(self.objects)
        self.homs: dict[tuple[Context, str], tuple] = {}
        self._type: dict[str, tuple[Context, str]] = {}
        for (ctx, target), terms in homs.items():
            ctx = tuple(ctx)
            if not 1 <= len(ctx) <= max_context:
                raise ShapeError(f"context {ctx} outside 1..{max_context}")
            if target not in objs or any(a not in objs for a in ctx):
                raise ShapeError(f"unknown object in hom {hom_key(ctx, target)}")
            terms = tuple(terms)
            if not terms:
                continue
            for t in terms:
                if t in self._type:
                    raise ShapeError(f"term name {t!r} used twice")
                self._type[t] = (ctx, target)
            self.homs[(ctx, target)] = terms
        self._by_target: dict[str, list[str]] = {}
        for (ctx, target), terms in self.homs.items():
            self._by_target.setdefault(target, []).extend(terms)

    # lookups
    def type_of(self, term: str) -> tuple[Context, str]:
        try:
            return self._type[term]
        except KeyError:
            raise ShapeError(f"unknown term {term!r}") from None

    def ctx(self, term: str) -> Context:
        return self.type_of(term)[0]

    def target(self, term: str) -> str:
        return self.type_of(term)[1]

    def __contains__(self, term) -> bool:
        return term in self._type

    def hom(self, ctx: Sequence[str], target: str) -> tuple:
        return self.homs.get((tuple(ctx), target), ())

    @property
    def terms(self) -> list[str]:
        return [t for terms in self.homs.values() for t in terms]

    def into(self, target: str, max_len: int | None = None) -> list[str]:
        terms = self._by_target.get(target, [])
        if max_len is None:
            return terms
        return [t for t in terms if len(self._type[t][0]) <= max_len]

    def contexts(self) -> list[Context]:
        return all_contexts(self.objects, self.max_context)

    def restrict(self, keep: Callable[[str], bool]) -> "MultiHomTable":
        homs = {k: [t for t in v if keep(t)] for k, v in self.homs.items()}
        return MultiHomTable(self.objects, self.max_context, homs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiHomTable):
            return NotImplemented
        return (self.objects == other.objects and self.max_context == other.max_context
                and self.homs == other.homs)

    __hash__ = None

    def to_json(self) -> dict:
        return {hom_key(c, b): list(ts) for (c, b), ts in sorted(self.homs.items(), key=_hom_sort)}

    def __repr__(self) -> str:
        return f"MultiHomTable({len(self.objects)} objects, L={self.max_context}, {len(self._type)} terms)"


def _hom_sort(item):
    (ctx, target), _ = item
    return (len(ctx), ctx, target)


class ComputedTable(Mapping):
    """A read-only operation table whose entries are computed on demand.

    ``compute(key)`` returns the result or None when the key is not a
    well-typed entry; ``keys`` enumerates every defined key. Results are
    memoised."""

    def __init__(self, compute: Callable, keys: Callable[[], Iterable]):
        self._compute = compute
        self._keys = keys
        self._cache: dict = {}

    def __getitem__(self, key):
        try:
            r = self._cache[key]
        except KeyError:
            r = self._cache[key] = self._compute(key)
        except TypeError:
            raise KeyError(key) from None
        if r is None:
            raise KeyError(key)
        return r

    def __iter__(self) -> Iterator:
        return iter(self._keys())

    def __len__(self) -> int:
        return sum(1 for _ in self._keys())


def materialize(table: Mapping, limit: int = 500_000) -> dict:
    out = {}
    for k in table:
        r = table.get(k)
        if r is not None:
            out[k] = r
        if len(out) > limit:
            raise CapacityError(f"table has more than {limit} entries")
    return out


def tables_equal(a: Mapping, b: Mapping, limit: int = 500_000) -> tuple[bool, dict | None]:
    """Exact comparison; returns the first differing key on mismatch."""
    da, db = materialize(a, limit), materialize(b, limit)
    if da == db:
        return True, None
    for k in sorted(set(da) | set(db), key=repr):
        if da.get(k) != db.get(k):
            return False, {"key": _jsonable(k), "left": da.get(k), "right": db.get(k)}
    return False, None


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def concat_ctx(table: MultiHomTable, terms: Iterable[str]) -> Context:
    out: tuple = ()
    for t in terms:
        out += table.ctx(t)
    return out


def fill_slots(table: MultiHomTable, targets: Sequence[str], budget: int, pick,
               allowed: Callable[[str], bool] | None = None) -> Iterator[tuple]:
    """Tuples (u_1..u_n) with u_i into targets[i] and total context length
    at most ``budget``, chosen through ``pick``; ``allowed`` filters terms."""
    n = len(targets)

    def go(i: int, left: int, acc: tuple):
        if i == n:
            yield acc
            return
        room = left - (n - i - 1)
        options = [u for u in table.into(targets[i])
                   if len(table.ctx(u)) <= room and (allowed is None or allowed(u))]
        for u in pick(options):
            yield from go(i + 1, left - len(table.ctx(u)), acc + (u,))

    if budget >= n:
        yield from go(0, budget, ())


def search(
    variables: Sequence,
    candidates: Mapping,
    constraints: Sequence[tuple[tuple, Callable[[dict], bool]]],
    guard: int = 200_000,
) -> Iterator[dict]:
    """Backtracking over ``variables``; each constraint is checked as soon
    as all its variables are bound. Raises CapacityError past ``guard``
    search nodes."""
    order = {v: i for i, v in enumerate(variables)}
    attached: dict = {v: [] for v in variables}
    for vs, pred in constraints:
        if not vs:
            continue
        last = max(vs, key=lambda v: order[v])
        attached[last].append(pred)
    nodes = 0
    assign: dict = {}

    def go(i: int):
        nonlocal nodes
        if i == len(variables):
            yield dict(assign)
            return
        v = variables[i]
        for c in candidates[v]:
            nodes += 1
            if nodes > guard:
                raise CapacityError(f"search exceeded {guard} nodes")
            assign[v] = c
            if all(pred(assign) for pred in attached[v]):
                yield from go(i + 1)
            del assign[v]

    yield from go(0)
