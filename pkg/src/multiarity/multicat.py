"""Finite truncated multicategories with simultaneous substitution, their
morphisms and transformations, and the clone-to-multicategory and
discrete constructions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .category import FinCategory, validate_category
from .clone import Clone, morphism_search
from .errors import CoverageError, LawError, ShapeError
from .report import DEFAULT, CheckConfig, Report, run_law
from .tables import ComputedTable, MultiHomTable, concat_ctx, fill_slots


class Multicat:
    """``sub`` maps (t, (u_1..u_m)) to t<u_1..u_m>; the result context is
    the concatenation of the argument contexts."""

    kind = "multicat"

    def __init__(self, table: MultiHomTable, ids: Mapping, sub: Mapping, check: bool = True):
        self.table = table
        self.ids = dict(ids)
        self.sub = sub
        if check:
            self.check_shape()

    @property
    def objects(self):
        return self.table.objects

    def check_shape(self) -> None:
        T = self.table
        for a, i in self.ids.items():
            if T.type_of(i) != ((a,), a):
                raise ShapeError(f"identity {i!r} for {a} is mistyped")
        if isinstance(self.sub, ComputedTable):
            return
        for (t, args), r in self.sub.items():
            ctx_t, c = T.type_of(t)
            if len(args) != len(ctx_t):
                raise ShapeError(f"sub entry for {t!r} has {len(args)} arguments")
            for u, b in zip(args, ctx_t):
                if T.target(u) != b:
                    raise ShapeError(f"argument {u!r} of {t!r} is mistyped")
            if T.type_of(r) != (concat_ctx(T, args), c):
                raise ShapeError(f"result {r!r} of sub on {t!r} is mistyped")

    def id(self, a: str) -> str:
        try:
            return self.ids[a]
        except KeyError:
            raise CoverageError("id", a) from None

    def subst(self, t: str, args: Sequence[str]) -> str:
        r = self.sub.get((t, tuple(args)))
        if r is None:
            n = len(concat_ctx(self.table, args))
            raise CoverageError("sub", [t, list(args)], truncated=n > self.table.max_context)
        return r

    def unary_category(self) -> FinCategory:
        homs = {(c[0], b): ts for (c, b), ts in self.table.homs.items() if len(c) == 1}
        comp = {}
        for (a, b), fs in homs.items():
            for f in fs:
                for (b2, _), gs in homs.items():
                    if b2 == b:
                        for g in gs:
                            r = self.sub.get((g, (f,)))
                            if r is not None:
                                comp[(g, f)] = r
        return FinCategory(self.objects, homs, self.ids, comp)

    def keys(self):
        """Every well-typed sub key with result context within L."""
        T = self.table
        for t in T.terms:
            yield from ((t, us) for us in fill_slots(T, T.ctx(t), T.max_context, iter))

    def materialized(self) -> "Multicat":
        return Multicat(self.table, self.ids, {k: self.sub[k] for k in self.sub}, check=True)


def _left_unit(m: Multicat, w: dict) -> tuple:
    u = w["u"]
    return m.subst(m.id(m.table.target(u)), [u]), u


def _right_unit(m: Multicat, w: dict) -> tuple:
    t = w["t"]
    return m.subst(t, [m.id(a) for a in m.table.ctx(t)]), t


def _blocks(m: Multicat, us, vs) -> list[list[str]]:
    out, i = [], 0
    for u in us:
        k = len(m.table.ctx(u))
        out.append(list(vs[i:i + k]))
        i += k
    return out


def _assoc(m: Multicat, w: dict) -> tuple:
    t, us, vs = w["t"], w["u"], w["v"]
    lhs = m.subst(m.subst(t, us), vs)
    rhs = m.subst(t, [m.subst(u, blk) for u, blk in zip(us, _blocks(m, us, vs))])
    return lhs, rhs


LAWS = {"left-unit": _left_unit, "right-unit": _right_unit, "assoc": _assoc}


def validate_multicat(m: Multicat, config: CheckConfig = DEFAULT) -> Report:
    rep = Report("multicat")
    T = m.table
    for a in m.objects:
        if a in m.ids:
            rep.passed("ids-defined")
        else:
            rep.gap("ids-defined", {"object": a})
    L = T.max_context

    def left_unit(pick):
        for u in pick(T.terms):
            yield {"u": u}

    def right_unit(pick):
        for t in pick(T.terms):
            yield {"t": t}

    def assoc(pick):
        for t in pick(T.terms):
            for us in fill_slots(T, T.ctx(t), L, pick):
                for vs in fill_slots(T, concat_ctx(T, us), L, pick):
                    yield {"t": t, "u": list(us), "v": list(vs)}

    for law, gen in (("left-unit", left_unit), ("right-unit", right_unit), ("assoc", assoc)):
        run_law(rep, law, gen, lambda w, law=law: LAWS[law](m, w), config)
    return rep


# constructions --------------------------------------------------------------

def clone_to_multicat(c: Clone) -> Multicat:
    """Same homs; ids are first projections and
    t<u_1..u_m> = t[u_1[pr^{1,1}..], ..., u_m[..]] over the concatenated
    context."""
    T = c.table
    ids = {}
    for a in c.objects:
        ids[a] = c.pr((a,), 1)

    def compute(key):
        t, us = key
        if t not in T or any(u not in T for u in us):
            return None
        ctx_t, _ = T.type_of(t)
        if len(us) != len(ctx_t) or any(T.target(u) != b for u, b in zip(us, ctx_t)):
            return None
        delta = concat_ctx(T, us)
        if len(delta) > T.max_context:
            return None
        padded, pos = [], 1
        for u in us:
            k = len(T.ctx(u))
            prs = [c.pr(delta, pos + i) for i in range(k)]
            padded.append(c.subst(u, prs))
            pos += k
        return c.subst(t, padded)

    m = Multicat(T, ids, None, check=False)
    m.sub = ComputedTable(compute, m.keys)
    return m


def discrete_multicat(cat: FinCategory, max_context: int = 1) -> Multicat:
    """Unary homs copy the category; every other hom is empty."""
    rep = validate_category(cat)
    if not rep.ok:
        raise LawError("input is not a category", rep.violations[0].witness)
    homs = {((a,), b): ms for (a, b), ms in cat.homs.items()}
    table = MultiHomTable(cat.objects, max_context, homs)
    sub = {(g, (f,)): r for (g, f), r in cat.comp.items()}
    return Multicat(table, cat.ids, sub)


def lower(m: Multicat):
    """The premulticategory with sub1(t, i, u) = t<id,..,u,..,id>."""
    from .premulticat import Premulticat

    T = m.table

    def compute(key):
        t, pos, u = key
        if t not in T or u not in T:
            return None
        ctx = T.ctx(t)
        if not 1 <= pos <= len(ctx) or T.target(u) != ctx[pos - 1]:
            return None
        if len(ctx) - 1 + len(T.ctx(u)) > T.max_context:
            return None
        args = [m.ids.get(a) for a in ctx]
        args[pos - 1] = u
        if any(a is None for a in args):
            return None
        return m.sub.get((t, tuple(args)))

    p = Premulticat(T, m.ids, None, check=False)
    p.sub1 = ComputedTable(compute, p.keys)
    return p


# morphisms and transformations ---------------------------------------------

@dataclass
class MulticatMorphism:
    src: Multicat
    dst: Multicat
    obj_map: dict
    term_map: dict

    def __call__(self, t: str) -> str:
        return self.term_map[t]

    def octx(self, ctx) -> tuple:
        return tuple(self.obj_map[a] for a in ctx)


def identity_multicat_morphism(m: Multicat) -> MulticatMorphism:
    return MulticatMorphism(m, m, {a: a for a in m.objects}, {t: t for t in m.table.terms})


def validate_multicat_morphism(f: MulticatMorphism, config: CheckConfig = DEFAULT) -> Report:
    from .clone import _check_morphism_shape

    rep = Report("multicat morphism")
    _check_morphism_shape(f, rep)
    S = f.src

    def ids(pick):
        for a in pick(sorted(S.ids)):
            yield {"object": a}

    def subs(pick):
        for t, args in pick(S.sub.keys()):
            yield {"t": t, "args": list(args)}

    run_law(rep, "preserves-ids", ids,
            lambda w: (f(S.id(w["object"])), f.dst.id(f.obj_map[w["object"]])), config)
    run_law(rep, "preserves-sub", subs,
            lambda w: (f(S.subst(w["t"], w["args"])), f.dst.subst(f(w["t"]), [f(u) for u in w["args"]])),
            config)
    return rep


@dataclass
class MulticatTransformation:
    src: MulticatMorphism
    dst: MulticatMorphism
    components: dict


def validate_multicat_transformation(eta: MulticatTransformation, config: CheckConfig = DEFAULT) -> Report:
    from .clone import _check_transformation_shape

    rep = Report("multicat transformation")
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
        return (D.subst(eta.components[b], [f(t)]),
                D.subst(g(t), [eta.components[a] for a in ctx]))

    run_law(rep, "naturality", inst, ev, config)
    return rep


def identity_multicat_transformation(f: MulticatMorphism) -> MulticatTransformation:
    return MulticatTransformation(f, f, {a: f.dst.id(f.obj_map[a]) for a in f.src.objects})


def compose_multicat_transformations(eps: MulticatTransformation,
                                     eta: MulticatTransformation) -> MulticatTransformation:
    """(eps * eta)_A = eps_A<eta_A>."""
    if eta.dst is not eps.src:
        raise ShapeError("transformations are not composable")
    D = eta.src.dst
    comps = {a: D.subst(eps.components[a], [eta.components[a]]) for a in eta.src.src.objects}
    return MulticatTransformation(eta.src, eps.dst, comps)


def multicat_morphisms(src: Multicat, dst: Multicat, guard: int = 200_000) -> list[MulticatMorphism]:
    out = []
    for img in itertools.product(dst.objects, repeat=len(src.objects)):
        om = dict(zip(src.objects, img))
        forced = {src.ids[a]: dst.ids.get(om[a]) for a in src.objects if a in src.ids}
        cons = []
        for (t, args) in src.sub:
            r = src.sub[(t, args)]

            def pred(a, t=t, args=args, r=r):
                return dst.sub.get((a[t], tuple(a[u] for u in args))) == a[r]
            cons.append(((t, *args, r), pred))
        for tm in morphism_search(src, dst, om, forced, cons, guard):
            out.append(MulticatMorphism(src, dst, om, tm))
    return out


def multicat_transformations_between(f: MulticatMorphism, g: MulticatMorphism,
                                     config: CheckConfig = DEFAULT) -> list[MulticatTransformation]:
    D = f.dst.table
    objs = list(f.src.objects)
    pools = [D.hom((f.obj_map[a],), g.obj_map[a]) for a in objs]
    out = []
    for comps in itertools.product(*pools):
        eta = MulticatTransformation(f, g, dict(zip(objs, comps)))
        if validate_multicat_transformation(eta, config).ok:
            out.append(eta)
    return out
