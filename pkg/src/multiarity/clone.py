"""Finite truncated abstract clones, morphisms, transformations, the Set
clone fragment, and clone algebras."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .category import FinCategory
from .errors import CoverageError, ShapeError
from .report import DEFAULT, CheckConfig, Report, run_law
from .semantics import FunctionModel, carrier_dict
from .tables import ComputedTable, MultiHomTable, all_contexts, hom_key, search


class Clone:
    """Projections are keyed (context, j) with j 1-based; ``sub`` maps
    (t, (u_1..u_m)) to t[u_1..u_m]."""

    kind = "clone"

    def __init__(self, table: MultiHomTable, projections: Mapping, sub: Mapping, check: bool = True):
        self.table = table
        self.projections = {(tuple(c), j): p for (c, j), p in projections.items()}
        self.sub = sub
        if check:
            self.check_shape()

    @property
    def objects(self):
        return self.table.objects

    def check_shape(self) -> None:
        T = self.table
        for (ctx, j), p in self.projections.items():
            if not 1 <= j <= len(ctx) or T.type_of(p) != (ctx, ctx[j - 1]):
                raise ShapeError(f"projection {p!r} at ({hom_key(ctx, '?')}, {j}) is mistyped")
        if isinstance(self.sub, ComputedTable):
            return
        for (t, args), r in self.sub.items():
            ctx_t, c = T.type_of(t)
            if len(args) != len(ctx_t) or not args:
                raise ShapeError(f"sub entry for {t!r} has {len(args)} arguments")
            inner = T.ctx(args[0])
            for u, b in zip(args, ctx_t):
                if T.type_of(u) != (inner, b):
                    raise ShapeError(f"argument {u!r} of {t!r} is mistyped")
            if T.type_of(r) != (inner, c):
                raise ShapeError(f"result {r!r} of sub on {t!r} is mistyped")

    def pr(self, ctx, j: int) -> str:
        try:
            return self.projections[(tuple(ctx), j)]
        except KeyError:
            raise CoverageError("projection", [list(ctx), j]) from None

    def subst(self, t: str, args: Sequence[str]) -> str:
        key = (t, tuple(args))
        r = self.sub.get(key)
        if r is None:
            raise CoverageError("sub", [t, list(args)])
        return r

    def unary_category(self) -> FinCategory:
        """The unary restriction: identities pr^1, composition by sub."""
        homs = {(c[0], b): ts for (c, b), ts in self.table.homs.items() if len(c) == 1}
        ids = {a: self.projections.get(((a,), 1)) for a in self.objects}
        comp = {}
        for (a, b), fs in homs.items():
            for f in fs:
                for (b2, _), gs in homs.items():
                    if b2 == b:
                        for g in gs:
                            r = self.sub.get((g, (f,)))
                            if r is not None:
                                comp[(g, f)] = r
        return FinCategory(self.objects, homs, ids, comp)

    def materialized(self) -> "Clone":
        out = Clone(self.table, self.projections, dict(self.sub.items()), check=True)
        for extra in ("model", "decode", "category"):
            if hasattr(self, extra):
                setattr(out, extra, getattr(self, extra))
        return out


# validation -----------------------------------------------------------------

def _ctxs(c: Clone):
    return all_contexts(c.objects, c.table.max_context)


def validate_clone(c: Clone, config: CheckConfig = DEFAULT) -> Report:
    rep = Report("clone")
    T = c.table
    for ctx in _ctxs(c):
        for j in range(1, len(ctx) + 1):
            if (ctx, j) not in c.projections:
                rep.gap("projections-defined", {"context": list(ctx), "j": j})
            else:
                rep.passed("projections-defined")

    def left_unit(pick):
        for ctx in pick(_ctxs(c)):
            for j in pick(range(1, len(ctx) + 1)):
                for inner in pick(_ctxs(c)):
                    pools = [T.hom(inner, b) for b in ctx]
                    for us in _tuples(pools, pick):
                        yield {"context": list(ctx), "j": j, "args": list(us)}

    def right_unit(pick):
        for t in pick(T.terms):
            yield {"t": t}

    def assoc(pick):
        for t in pick(T.terms):
            ctx_t = T.ctx(t)
            for mid in pick(_ctxs(c)):
                for us in _tuples([T.hom(mid, b) for b in ctx_t], pick):
                    for inner in pick(_ctxs(c)):
                        for vs in _tuples([T.hom(inner, b) for b in mid], pick):
                            yield {"t": t, "u": list(us), "v": list(vs)}

    for law, gen in (("left-unit", left_unit), ("right-unit", right_unit), ("assoc", assoc)):
        run_law(rep, law, gen, lambda w, law=law: LAWS[law](c, w), config)
    return rep


def _tuples(pools, pick):
    def go(i, acc):
        if i == len(pools):
            yield acc
            return
        for u in pick(pools[i]):
            yield from go(i + 1, acc + (u,))
    return go(0, ())


def _left_unit(c: Clone, w: dict) -> tuple:
    return c.subst(c.pr(w["context"], w["j"]), w["args"]), w["args"][w["j"] - 1]


def _right_unit(c: Clone, w: dict) -> tuple:
    ctx = c.table.ctx(w["t"])
    return c.subst(w["t"], [c.pr(ctx, i) for i in range(1, len(ctx) + 1)]), w["t"]


def _assoc(c: Clone, w: dict) -> tuple:
    return (c.subst(c.subst(w["t"], w["u"]), w["v"]),
            c.subst(w["t"], [c.subst(u, w["v"]) for u in w["u"]]))


# evaluators by law name; replaying a reported witness recomputes both sides
LAWS = {"left-unit": _left_unit, "right-unit": _right_unit, "assoc": _assoc}


# morphisms and transformations ---------------------------------------------

@dataclass
class CloneMorphism:
    src: Clone
    dst: Clone
    obj_map: dict
    term_map: dict

    def __call__(self, t: str) -> str:
        return self.term_map[t]

    def octx(self, ctx) -> tuple:
        return tuple(self.obj_map[a] for a in ctx)


def identity_morphism(c) -> "CloneMorphism":
    return CloneMorphism(c, c, {a: a for a in c.objects}, {t: t for t in c.table.terms})


def _check_morphism_shape(f, rep: Report) -> None:
    S, D = f.src.table, f.dst.table
    for a in f.src.objects:
        if f.obj_map.get(a) not in D.objects:
            raise ShapeError(f"object {a} maps outside the target")
    for t in S.terms:
        if t not in f.term_map:
            raise ShapeError(f"term {t!r} has no image")
        ctx, b = S.type_of(t)
        if D.type_of(f.term_map[t]) != (f.octx(ctx), f.obj_map[b]):
            rep.fail("respects-types", {"t": t, "image": f.term_map[t]})


def validate_clone_morphism(f: CloneMorphism, config: CheckConfig = DEFAULT) -> Report:
    rep = Report("clone morphism")
    _check_morphism_shape(f, rep)
    S = f.src

    def projections(pick):
        for (ctx, j) in pick(sorted(S.projections)):
            yield {"context": list(ctx), "j": j}

    def ev_proj(w):
        return f(S.pr(w["context"], w["j"])), f.dst.pr(f.octx(w["context"]), w["j"])

    def subs(pick):
        for t, args in pick(S.sub.keys()):
            yield {"t": t, "args": list(args)}

    def ev_sub(w):
        return f(S.subst(w["t"], w["args"])), f.dst.subst(f(w["t"]), [f(u) for u in w["args"]])

    run_law(rep, "preserves-projections", projections, ev_proj, config)
    run_law(rep, "preserves-sub", subs, ev_sub, config)
    return rep


@dataclass
class CloneTransformation:
    src: CloneMorphism
    dst: CloneMorphism
    components: dict


def _check_transformation_shape(eta, rep: Report) -> None:
    f, g = eta.src, eta.dst
    if f.src is not g.src or f.dst is not g.dst:
        raise ShapeError("transformation between non-parallel morphisms")
    D = f.dst.table
    for a in f.src.objects:
        comp = eta.components.get(a)
        if comp is None or D.type_of(comp) != ((f.obj_map[a],), g.obj_map[a]):
            rep.fail("component-type", {"object": a, "component": comp})


def validate_clone_transformation(eta: CloneTransformation, config: CheckConfig = DEFAULT) -> Report:
    rep = Report("clone transformation")
    _check_transformation_shape(eta, rep)
    if not rep.ok:
        return rep
    f, g, D = eta.src, eta.dst, eta.src.dst

    def inst(pick):
        for t in pick(f.src.table.terms):
            yield {"t": t}

    def ev(w):
        t = w["t"]
        ctx, b = f.src.table.type_of(t)
        fctx = f.octx(ctx)
        lhs = D.subst(eta.components[b], [f(t)])
        args = [D.subst(eta.components[a], [D.pr(fctx, i)]) for i, a in enumerate(ctx, 1)]
        return lhs, D.subst(g(t), args)

    run_law(rep, "naturality", inst, ev, config)
    return rep


def identity_clone_transformation(f: CloneMorphism) -> CloneTransformation:
    return CloneTransformation(f, f, {a: f.dst.pr((f.obj_map[a],), 1) for a in f.src.objects})


def compose_clone_transformations(eps: CloneTransformation, eta: CloneTransformation) -> CloneTransformation:
    """(eps * eta)_A = eps_A[eta_A]."""
    if eta.dst is not eps.src:
        raise ShapeError("transformations are not composable")
    D = eta.src.dst
    comps = {a: D.subst(eps.components[a], [eta.components[a]]) for a in eta.src.src.objects}
    return CloneTransformation(eta.src, eps.dst, comps)


def transformations_between(f: CloneMorphism, g: CloneMorphism, config: CheckConfig = DEFAULT):
    """All valid transformations f => g (component families are searched
    exhaustively over the unary hom-sets)."""
    D = f.dst.table
    objs = list(f.src.objects)
    pools = [D.hom((f.obj_map[a],), g.obj_map[a]) for a in objs]
    out = []
    for comps in itertools.product(*pools):
        eta = CloneTransformation(f, g, dict(zip(objs, comps)))
        if validate_clone_transformation(eta, config).ok:
            out.append(eta)
    return out


# the Set fragment -----------------------------------------------------------

def set_clone_fragment(carriers, max_arity: int, guard: int = 10_000) -> Clone:
    """All functions between products of the carriers, contexts up to
    ``max_arity``; substitution is composition with tupling."""
    model = FunctionModel(carrier_dict(carriers), max_arity, guard=guard)
    table = MultiHomTable(model.objects, max_arity, model.homs)
    projections = {}
    for ctx in all_contexts(model.objects, max_arity):
        for j in range(1, len(ctx) + 1):
            space = model.space(ctx, ctx[j - 1])
            projections[(ctx, j)] = model.name(ctx, ctx[j - 1], [p[j - 1] for p in space.points])

    def compute(key):
        t, args = key
        if t not in model.decode or not args or any(u not in model.decode for u in args):
            return None
        ctx_t, c, tv = model.decode[t]
        if len(args) != len(ctx_t):
            return None
        inner = model.decode[args[0]][0]
        decoded = [model.decode[u] for u in args]
        if any(d[0] != inner or d[1] != b for d, b in zip(decoded, ctx_t)):
            return None
        t_space = model.space(ctx_t, c)
        points = model.space(inner, c).points
        values = tuple(tv[t_space.index([d[2][i] for d in decoded])] for i in range(len(points)))
        return model.name(inner, c, values)

    def keys():
        for t in table.terms:
            ctx_t = table.ctx(t)
            for inner in all_contexts(model.objects, max_arity):
                for us in itertools.product(*[table.hom(inner, b) for b in ctx_t]):
                    yield (t, us)

    clone = Clone(table, projections, ComputedTable(compute, keys))
    clone.model = model
    return clone


def fragment_function(c: Clone, term: str):
    """Decode a fragment term as (context, target, values)."""
    return c.model.decode[term]


# algebras -------------------------------------------------------------------

def morphism_search(src, dst, obj_map: dict, unit_constraints, op_constraints, guard: int,
                    fixed: dict | None = None):
    """Shared search for structure morphisms with a fixed object map."""
    S, D = src.table, dst.table
    variables = list(S.terms)
    cands = {}
    for t in variables:
        ctx, b = S.type_of(t)
        pool = list(D.hom(tuple(obj_map[a] for a in ctx), obj_map[b]))
        forced = unit_constraints.get(t)
        if forced is not None:
            pool = [x for x in pool if x == forced]
        if fixed and t in fixed:
            pool = [x for x in pool if x == fixed[t]]
        cands[t] = pool
    return search(variables, cands, op_constraints, guard)


def clone_morphisms(src: Clone, dst: Clone, guard: int = 200_000, fixed: dict | None = None,
                    obj_maps=None) -> list[CloneMorphism]:
    """Every clone morphism src -> dst (exhaustive, pruned)."""
    out = []
    maps = obj_maps if obj_maps is not None else [
        dict(zip(src.objects, img)) for img in itertools.product(dst.objects, repeat=len(src.objects))]
    for om in maps:
        octx = lambda ctx: tuple(om[a] for a in ctx)  # noqa: E731
        forced = {}
        for (ctx, j), p in src.projections.items():
            q = dst.projections.get((octx(ctx), j))
            forced[p] = q
        cons = []
        for (t, args), r in src.sub.items():
            vs = (t, *args, r)

            def pred(a, t=t, args=args, r=r):
                return dst.sub.get((a[t], tuple(a[u] for u in args))) == a[r]
            cons.append((vs, pred))
        for tm in morphism_search(src, dst, om, forced, cons, guard, fixed):
            out.append(CloneMorphism(src, dst, dict(om), tm))
    return out


def clone_algebras(c: Clone, fragment: Clone, guard: int = 200_000) -> list[CloneMorphism]:
    return clone_morphisms(c, fragment, guard)
