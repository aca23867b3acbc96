"""JSON readers and writers for every structure. Writers emit keys in a
fixed order so outputs diff cleanly."""

from __future__ import annotations

import json
from pathlib import Path

from .arrowcat import ArrowObj, Square
from .category import ArrowGraph, FinCategory, FinGraph
from .clone import Clone
from .effectful import EffectfulMulticat
from .enriched import EnrichedMulticat
from .errors import ShapeError
from .finset import FinMap, FinSet, render
from .multicat import Multicat
from .premulticat import Premulticat
from .tables import MultiHomTable, hom_key, materialize, parse_hom_key


def read_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ShapeError(f"{path}: invalid JSON ({e})") from None
    except OSError as e:
        raise ShapeError(f"{path}: {e.strerror}") from None


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def write_json(path, data) -> None:
    Path(path).write_text(dumps(data) + "\n")


def _need(data: dict, *keys):
    for k in keys:
        if k not in data:
            raise ShapeError(f"missing field {k!r}")
    return [data[k] for k in keys]


def detect_kind(data: dict) -> str:
    if "pure" in data and "eff" in data:
        return "effectful"
    if "homs0" in data:
        return "enriched"
    if "projections" in data:
        return "clone"
    if "sub1" in data:
        return "premulticat"
    if "ids" in data and "homs" in data and "maxContext" in data:
        return "multicat"
    if "level0" in data:
        return "arrowobj"
    if "vertices" in data:
        return "graph"
    if "objects" in data and "homs" in data:
        return "category"
    raise ShapeError("cannot tell what structure this JSON describes")


# hom tables -----------------------------------------------------------------

def table_from_json(objects, max_context, homs: dict) -> MultiHomTable:
    parsed = {}
    for key, terms in homs.items():
        parsed[parse_hom_key(key)] = terms
    return MultiHomTable(objects, int(max_context), parsed)


def _table_json(T: MultiHomTable) -> dict:
    return {"objects": list(T.objects), "maxContext": T.max_context, "homs": T.to_json()}


def _key_sort(k):
    return repr(k)


# clones, multicategories, premulticategories --------------------------------

def clone_from_json(data: dict) -> Clone:
    objects, L, homs, prj = _need(data, "objects", "maxContext", "homs", "projections")
    T = table_from_json(objects, L, homs)
    projections = {}
    for key, p in prj.items():
        ctx_s, j = key.rsplit("#", 1)
        projections[(tuple(ctx_s.split(",")), int(j))] = p
    sub = {(e["t"], tuple(e["args"])): e["result"] for e in data.get("sub", [])}
    return Clone(T, projections, sub)


def clone_to_json(c: Clone) -> dict:
    out = _table_json(c.table)
    out["projections"] = {f"{','.join(ctx)}#{j}": p for (ctx, j), p in sorted(c.projections.items())}
    sub = materialize(c.sub)
    out["sub"] = [{"t": t, "args": list(a), "result": r} for (t, a), r in sorted(sub.items(), key=_key_sort)]
    return out


def multicat_from_json(data: dict) -> Multicat:
    objects, L, homs, ids = _need(data, "objects", "maxContext", "homs", "ids")
    T = table_from_json(objects, L, homs)
    sub = {(e["t"], tuple(e["args"])): e["result"] for e in data.get("sub", [])}
    return Multicat(T, ids, sub)


def multicat_to_json(m: Multicat) -> dict:
    out = _table_json(m.table)
    out["ids"] = dict(sorted(m.ids.items()))
    sub = materialize(m.sub)
    out["sub"] = [{"t": t, "args": list(a), "result": r} for (t, a), r in sorted(sub.items(), key=_key_sort)]
    return out


def premulticat_from_json(data: dict) -> Premulticat:
    objects, L, homs, ids = _need(data, "objects", "maxContext", "homs", "ids")
    T = table_from_json(objects, L, homs)
    sub1 = {(e["t"], int(e["pos"]), e["u"]): e["result"] for e in data.get("sub1", [])}
    return Premulticat(T, ids, sub1)


def premulticat_to_json(p: Premulticat) -> dict:
    out = _table_json(p.table)
    out["ids"] = dict(sorted(p.ids.items()))
    sub1 = materialize(p.sub1)
    out["sub1"] = [{"t": t, "pos": i, "u": u, "result": r}
                   for (t, i, u), r in sorted(sub1.items(), key=_key_sort)]
    return out


# effectful and enriched -----------------------------------------------------

def _per_hom(mapping: dict, table: MultiHomTable) -> dict:
    out: dict = {}
    for t in sorted(mapping):
        if t in table:
            ctx, b = table.type_of(t)
            out.setdefault(hom_key(ctx, b), {})[t] = mapping[t]
    return out


def _flatten_map(data: dict) -> dict:
    """Accept either {hom-key: {t: image}} or a flat {t: image}."""
    out = {}
    for k, v in data.items():
        if isinstance(v, dict):
            out.update(v)
        else:
            out[k] = v
    return out


def effectful_from_json(data: dict) -> EffectfulMulticat:
    pure, eff, J = _need(data, "pure", "eff", "J")
    return EffectfulMulticat(multicat_from_json(pure), premulticat_from_json(eff), _flatten_map(J))


def effectful_to_json(e: EffectfulMulticat) -> dict:
    return {"pure": multicat_to_json(e.pure), "eff": premulticat_to_json(e.eff),
            "J": _per_hom(e.J, e.pure.table)}


def enriched_from_json(data: dict) -> EnrichedMulticat:
    objects, h0, h1, bar, ids0 = _need(data, "objects", "homs0", "homs1", "bar", "ids0")
    L = data.get("maxContext")
    if L is None:
        lens = [len(parse_hom_key(k)[0]) for k in list(h0) + list(h1)]
        L = max(lens, default=1)
    H0 = table_from_json(objects, L, h0)
    H1 = table_from_json(objects, L, h1)
    psub = {(e["t"], tuple(e["args"])): e["result"] for e in data.get("psub", [])}
    esub = {(int(e["j"]), e["t"], tuple(e["args"])): e["result"] for e in data.get("esub", [])}
    return EnrichedMulticat(objects, H0, H1, _flatten_map(bar), ids0, psub, esub)


def enriched_to_json(d: EnrichedMulticat) -> dict:
    psub = materialize(d.psub)
    esub = materialize(d.esub)
    return {
        "objects": list(d.objects),
        "maxContext": d.max_context,
        "homs0": d.homs0.to_json(),
        "homs1": d.homs1.to_json(),
        "bar": _per_hom(d.bar, d.homs0),
        "ids0": dict(sorted(d.ids0.items())),
        "psub": [{"t": t, "args": list(a), "result": r} for (t, a), r in sorted(psub.items(), key=_key_sort)],
        "esub": [{"j": j, "t": t, "args": list(a), "result": r}
                 for (j, t, a), r in sorted(esub.items(), key=_key_sort)],
    }


# arrow objects --------------------------------------------------------------

def arrowobj_from_json(data: dict) -> ArrowObj:
    l0, l1, dia = _need(data, "level0", "level1", "diamond")
    return ArrowObj.make([str(x) for x in l0], [str(x) for x in l1], {str(k): str(v) for k, v in dia.items()})


def arrowobj_to_json(a: ArrowObj) -> dict:
    return {"level0": [render(x) for x in a.level0],
            "level1": [render(x) for x in a.level1],
            "diamond": {render(x): render(a.diamond(x)) for x in a.level0}}


def square_from_json(data: dict) -> Square:
    src = arrowobj_from_json(data["src"])
    dst = arrowobj_from_json(data["dst"])
    f0 = FinMap(src.level0, dst.level0, {str(k): str(v) for k, v in data["f0"].items()})
    f1 = FinMap(src.level1, dst.level1, {str(k): str(v) for k, v in data["f1"].items()})
    return Square(src, dst, f0, f1)


def square_to_json(s: Square) -> dict:
    return {"src": arrowobj_to_json(s.src), "dst": arrowobj_to_json(s.dst),
            "f0": {render(x): render(s.f0(x)) for x in s.src.level0},
            "f1": {render(x): render(s.f1(x)) for x in s.src.level1}}


def arrow_pool_from_json(data) -> list[ArrowObj]:
    items = data.get("objects", data) if isinstance(data, dict) else data
    if isinstance(items, dict):
        items = [items]
    return [arrowobj_from_json(x) for x in items]


# categories and graphs ------------------------------------------------------

def category_from_json(data: dict) -> FinCategory:
    objects, homs, ids = _need(data, "objects", "homs", "ids")
    hs = {}
    for key, ms in homs.items():
        a, b = key.split("->")
        hs[(a, b)] = ms
    comp = {(e["g"], e["f"]): e["result"] for e in data.get("comp", [])}
    return FinCategory(tuple(objects), hs, ids, comp)


def category_to_json(c: FinCategory) -> dict:
    return {
        "objects": list(c.objects),
        "homs": {f"{a}->{b}": list(ms) for (a, b), ms in c.homs.items()},
        "ids": dict(c.ids),
        "comp": [{"g": g, "f": f, "result": r} for (g, f), r in sorted(c.comp.items())],
    }


def graph_from_json(data: dict):
    vertices, edges = _need(data, "vertices", "edges")
    parsed = {}
    arrow = False
    for key, v in edges.items():
        a, b = key.split("->")
        if isinstance(v, dict):
            arrow = True
            parsed[(a, b)] = arrowobj_from_json(v)
        else:
            parsed[(a, b)] = v
    return ArrowGraph(vertices, parsed) if arrow else FinGraph(vertices, parsed)


def functor_from_json(data: dict):
    from .freecons import Functor
    objs, arrows = _need(data, "objects", "arrows")
    return Functor(dict(objs), dict(arrows))


READERS = {
    "clone": clone_from_json,
    "multicat": multicat_from_json,
    "premulticat": premulticat_from_json,
    "effectful": effectful_from_json,
    "enriched": enriched_from_json,
    "arrowobj": arrowobj_from_json,
    "category": category_from_json,
    "graph": graph_from_json,
}

WRITERS = {
    Clone: clone_to_json,
    Multicat: multicat_to_json,
    Premulticat: premulticat_to_json,
    EffectfulMulticat: effectful_to_json,
    EnrichedMulticat: enriched_to_json,
    ArrowObj: arrowobj_to_json,
    Square: square_to_json,
    FinCategory: category_to_json,
}


def load(path, kind: str | None = None):
    data = read_json(path)
    kind = kind or detect_kind(data)
    if kind not in READERS:
        raise ShapeError(f"unknown structure kind {kind!r}")
    try:
        return READERS[kind](data)
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise ShapeError(f"{path}: malformed {kind} ({e!r})") from None


def to_json(x) -> dict:
    for cls, writer in WRITERS.items():
        if isinstance(x, cls):
            return writer(x)
    raise ShapeError(f"no JSON writer for {type(x).__name__}")


def finset_json(s: FinSet) -> list:
    return [render(x) for x in s]
