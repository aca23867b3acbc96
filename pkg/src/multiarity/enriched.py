"""Multicategories enriched in arrows of sets, in unwrapped form: two
levels of hom-sets linked by a bar map, pure substitution ``psub`` and
one-effectful-slot substitution ``esub_j``.

Includes the eight law families, the translations F (to effectful
multicategories) and G (back), exact round-trip checks, morphisms,
transformations and algebra categories."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .effectful import EffectfulMulticat, EffectfulMorphism, effectful_equal
from .errors import CoverageError, ShapeError
from .multicat import Multicat
from .premulticat import Premulticat, isub
from .report import DEFAULT, CheckConfig, Report, run_law
from .tables import ComputedTable, MultiHomTable, concat_ctx, materialize, search, tables_equal


class EnrichedMulticat:
    kind = "enriched"

    def __init__(self, objects, homs0: MultiHomTable, homs1: MultiHomTable, bar: Mapping,
                 ids0: Mapping, psub: Mapping, esub: Mapping, check: bool = True):
        self.objects = tuple(objects)
        self.homs0, self.homs1 = homs0, homs1
        self.bar = dict(bar)
        self.ids0 = dict(ids0)
        self.psub = psub
        self.esub = esub
        if check:
            self.check_shape()

    @property
    def max_context(self) -> int:
        return self.homs0.max_context

    def check_shape(self) -> None:
        H0, H1 = self.homs0, self.homs1
        if H0.objects != self.objects or H1.objects != self.objects:
            raise ShapeError("hom tables disagree on objects")
        if H0.max_context != H1.max_context:
            raise ShapeError("hom tables disagree on maxContext")
        for t in H0.terms:
            if t not in self.bar:
                raise ShapeError(f"bar is undefined on {t!r}")
            if H1.type_of(self.bar[t]) != H0.type_of(t):
                raise ShapeError(f"bar sends {t!r} to a different hom")
        for a, i in self.ids0.items():
            if H0.type_of(i) != ((a,), a):
                raise ShapeError(f"identity {i!r} for {a} is mistyped")
        if not isinstance(self.psub, ComputedTable):
            for (t, us), r in self.psub.items():
                self._check_entry(t, us, r, H0, [H0] * len(us), H0, "psub")
        if not isinstance(self.esub, ComputedTable):
            for (j, t, us), r in self.esub.items():
                if not 1 <= j <= len(us):
                    raise ShapeError(f"esub slot {j} out of range for {t!r}")
                levels = [H1 if i == j - 1 else H0 for i in range(len(us))]
                self._check_entry(t, us, r, H1, levels, H1, "esub")

    @staticmethod
    def _check_entry(t, us, r, outer, inner, res, op):
        ctx, b = outer.type_of(t)
        if len(us) != len(ctx):
            raise ShapeError(f"{op} entry for {t!r} has {len(us)} arguments")
        for u, a, table in zip(us, ctx, inner):
            if table.target(u) != a:
                raise ShapeError(f"{op} argument {u!r} of {t!r} is mistyped")
        want = sum((table.ctx(u) for u, table in zip(us, inner)), ())
        if res.type_of(r) != (want, b):
            raise ShapeError(f"{op} result {r!r} is mistyped")

    # operations
    def id0(self, a: str) -> str:
        try:
            return self.ids0[a]
        except KeyError:
            raise CoverageError("ids0", a) from None

    def ps(self, t: str, us: Sequence[str]) -> str:
        r = self.psub.get((t, tuple(us)))
        if r is None:
            n = len(concat_ctx(self.homs0, us))
            raise CoverageError("psub", [t, list(us)], truncated=n > self.max_context)
        return r

    def es(self, j: int, t: str, us: Sequence[str]) -> str:
        r = self.esub.get((j, t, tuple(us)))
        if r is None:
            n = sum(len((self.homs1 if i == j - 1 else self.homs0).ctx(u)) for i, u in enumerate(us))
            raise CoverageError("esub", [j, t, list(us)], truncated=n > self.max_context)
        return r

    def fill(self, targets, levels, budget: int, pick, allowed=None):
        """Argument tuples with slot i drawn from level ``levels[i]``."""
        tables = (self.homs0, self.homs1)
        n = len(targets)

        def go(i, left, acc):
            if i == n:
                yield acc
                return
            T = tables[levels[i]]
            room = left - (n - i - 1)
            opts = [u for u in T.into(targets[i]) if len(T.ctx(u)) <= room]
            for u in pick(opts):
                yield from go(i + 1, left - len(T.ctx(u)), acc + (u,))

        if budget >= n:
            yield from go(0, budget, ())

    def psub_keys(self):
        H0 = self.homs0
        for t in H0.terms:
            ctx = H0.ctx(t)
            for us in self.fill(ctx, [0] * len(ctx), self.max_context, iter):
                yield (t, us)

    def esub_keys(self):
        H1 = self.homs1
        for t in H1.terms:
            ctx = H1.ctx(t)
            for j in range(1, len(ctx) + 1):
                levels = [int(i == j - 1) for i in range(len(ctx))]
                for us in self.fill(ctx, levels, self.max_context, iter):
                    yield (j, t, us)

    def materialized(self) -> "EnrichedMulticat":
        return EnrichedMulticat(self.objects, self.homs0, self.homs1, self.bar, self.ids0,
                                materialize(self.psub), materialize(self.esub))


# laws -----------------------------------------------------------------------

def _with(us, j, x):
    us = list(us)
    us[j - 1] = x
    return us


def _coh_a(d, w):
    t, us, j = w["t"], w["u"], w["j"]
    return d.bar[d.ps(t, us)], d.es(j, d.bar[t], _with(us, j, d.bar[us[j - 1]]))


def _coh_b(d, w):
    t, us, j, k = w["t"], w["u"], w["j"], w["k"]
    return (d.es(j, t, _with(us, j, d.bar[us[j - 1]])),
            d.es(k, t, _with(us, k, d.bar[us[k - 1]])))


def _left_unit_a(d, w):
    u = w["u"]
    return d.ps(d.id0(d.homs0.target(u)), [u]), u


def _left_unit_b(d, w):
    u = w["u"]
    return d.es(1, d.bar[d.id0(d.homs1.target(u))], [u]), u


def _right_unit_a(d, w):
    t = w["t"]
    return d.ps(t, [d.id0(a) for a in d.homs0.ctx(t)]), t


def _right_unit_b(d, w):
    t, j = w["t"], w["j"]
    ids = [d.id0(a) for a in d.homs1.ctx(t)]
    return d.es(j, t, _with(ids, j, d.bar[ids[j - 1]])), t


def _split(d, us, vs, levels):
    out, i = [], 0
    for u, lv in zip(us, levels):
        k = len((d.homs0, d.homs1)[lv].ctx(u))
        out.append(list(vs[i:i + k]))
        i += k
    return out


def _assoc_a(d, w):
    t, us, vs = w["t"], w["u"], w["v"]
    blocks = _split(d, us, vs, [0] * len(us))
    lhs = d.ps(t, [d.ps(u, b) for u, b in zip(us, blocks)])
    rhs = d.ps(d.ps(t, us), vs)
    return lhs, rhs


def _assoc_b(d, w):
    t, us, vs, l, m = w["t"], w["u"], w["v"], w["l"], w["m"]
    levels = [int(i == l - 1) for i in range(len(us))]
    blocks = _split(d, us, vs, levels)
    inner = [d.es(m, u, b) if i == l - 1 else d.ps(u, b) for i, (u, b) in enumerate(zip(us, blocks))]
    pos = sum(len(b) for b in blocks[:l - 1]) + m
    return d.es(l, t, inner), d.es(pos, d.es(l, t, us), vs)


LAWS = {
    "coherence-a": _coh_a, "coherence-b": _coh_b,
    "left-unit-a": _left_unit_a, "left-unit-b": _left_unit_b,
    "right-unit-a": _right_unit_a, "right-unit-b": _right_unit_b,
    "assoc-a": _assoc_a, "assoc-b": _assoc_b,
}


def validate_enriched(d: EnrichedMulticat, config: CheckConfig = DEFAULT) -> Report:
    rep = Report("enriched multicat")
    H0, H1, L = d.homs0, d.homs1, d.max_context
    for a in d.objects:
        if a in d.ids0:
            rep.passed("ids-defined")
        else:
            rep.gap("ids-defined", {"object": a})

    def coh_a(pick):
        for t in pick(H0.terms):
            ctx = H0.ctx(t)
            for us in d.fill(ctx, [0] * len(ctx), L, pick):
                for j in pick(range(1, len(ctx) + 1)):
                    yield {"t": t, "u": list(us), "j": j}

    def coh_b(pick):
        for t in pick([t for t in H1.terms if len(H1.ctx(t)) >= 2]):
            ctx = H1.ctx(t)
            for us in d.fill(ctx, [0] * len(ctx), L, pick):
                for j, k in pick(list(itertools.combinations(range(1, len(ctx) + 1), 2))):
                    yield {"t": t, "u": list(us), "j": j, "k": k}

    def unary(table, key):
        def gen(pick):
            for u in pick(table.terms):
                yield {key: u}
        return gen

    def right_b(pick):
        for t in pick(H1.terms):
            for j in pick(range(1, len(H1.ctx(t)) + 1)):
                yield {"t": t, "j": j}

    def assoc_a(pick):
        for t in pick(H0.terms):
            ctx = H0.ctx(t)
            for us in d.fill(ctx, [0] * len(ctx), L, pick):
                inner = concat_ctx(H0, us)
                for vs in d.fill(inner, [0] * len(inner), L, pick):
                    yield {"t": t, "u": list(us), "v": list(vs)}

    def assoc_b(pick):
        for t in pick(H1.terms):
            ctx = H1.ctx(t)
            n = len(ctx)
            for l in pick(range(1, n + 1)):
                levels = [int(i == l - 1) for i in range(n)]
                for us in d.fill(ctx, levels, L, pick):
                    widths = [len((H0, H1)[lv].ctx(u)) for u, lv in zip(us, levels)]
                    inner = sum(((H0, H1)[lv].ctx(u) for u, lv in zip(us, levels)), ())
                    offset = sum(widths[:l - 1])
                    for m in pick(range(1, widths[l - 1] + 1)):
                        vlev = [int(i == offset + m - 1) for i in range(len(inner))]
                        for vs in d.fill(inner, vlev, L, pick):
                            yield {"t": t, "l": l, "u": list(us), "m": m, "v": list(vs)}

    gens = {
        "coherence-a": coh_a, "coherence-b": coh_b,
        "left-unit-a": unary(H0, "u"), "left-unit-b": unary(H1, "u"),
        "right-unit-a": unary(H0, "t"), "right-unit-b": right_b,
        "assoc-a": assoc_a, "assoc-b": assoc_b,
    }
    for law, gen in gens.items():
        run_law(rep, law, gen, lambda w, law=law: LAWS[law](d, w), config)
    return rep


# F and G --------------------------------------------------------------------

def to_effectful(d: EnrichedMulticat) -> EffectfulMulticat:
    """F: pure part (homs0, psub), effectful part (homs1) with
    sub1(t, j, u) = esub_j(t, ids0 .. u .. ids0), and J = bar."""
    pure = Multicat(d.homs0, d.ids0, d.psub, check=False)
    ids1 = {a: d.bar[i] for a, i in d.ids0.items()}
    eff = Premulticat(d.homs1, ids1, None, check=False)

    def compute(key):
        t, pos, u = key
        H1 = d.homs1
        if t not in H1 or u not in H1:
            return None
        ctx = H1.ctx(t)
        if not 1 <= pos <= len(ctx) or H1.target(u) != ctx[pos - 1]:
            return None
        args = [d.ids0.get(a) for a in ctx]
        if any(x is None for x in args):
            return None
        return d.esub.get((pos, t, tuple(_with(args, pos, u))))

    eff.sub1 = ComputedTable(compute, eff.keys)
    return EffectfulMulticat(pure, eff, dict(d.bar))


def to_enriched(e: EffectfulMulticat) -> EnrichedMulticat:
    """G: psub is the pure substitution and
    esub_j(t, us) = t<J u_1, .., u_j, .., J u_n> by left-most-first isub."""
    d = EnrichedMulticat(e.objects, e.pure.table, e.eff.table, e.J, e.pure.ids, e.pure.sub, None,
                         check=False)

    def compute(key):
        j, t, us = key
        H1 = d.homs1
        if t not in H1 or not 1 <= j <= len(us) or len(us) != len(H1.ctx(t)):
            return None
        args = []
        for i, u in enumerate(us):
            if i == j - 1:
                if u not in H1:
                    return None
                args.append(u)
            else:
                if u not in e.J:
                    return None
                args.append(e.J[u])
        if any(H1.target(x) != a for x, a in zip(args, H1.ctx(t))):
            return None
        if len(concat_ctx(H1, args)) > d.max_context:
            return None
        try:
            return isub(e.eff, t, args, 1)
        except CoverageError:
            return None

    d.esub = ComputedTable(compute, d.esub_keys)
    return d


def enriched_equal(a: EnrichedMulticat, b: EnrichedMulticat) -> tuple[bool, dict | None]:
    """Exact equality of every table, term names included."""
    for name in ("objects", "homs0", "homs1", "bar", "ids0"):
        if getattr(a, name) != getattr(b, name):
            return False, {"component": name}
    for name in ("psub", "esub"):
        ok, diff = tables_equal(getattr(a, name), getattr(b, name))
        if not ok:
            return False, dict(diff or {}, component=name)
    return True, None


def roundtrip_check(x) -> Report:
    """G(F(d)) = d for enriched input, F(G(e)) = e for effectful input."""
    rep = Report("round trip")
    if isinstance(x, EnrichedMulticat):
        ok, diff = enriched_equal(to_enriched(to_effectful(x)), x)
        law = "G(F(d)) = d"
    elif isinstance(x, EffectfulMulticat):
        ok, diff = effectful_equal(to_effectful(to_enriched(x)), x)
        law = "F(G(e)) = e"
    else:
        raise ShapeError(f"cannot round-trip a {type(x).__name__}")
    if ok:
        rep.passed(law)
    else:
        rep.fail(law, diff or {})
    return rep


# morphisms ------------------------------------------------------------------

@dataclass
class EnrichedMorphism:
    src: EnrichedMulticat
    dst: EnrichedMulticat
    obj_map: dict
    f0: dict
    f1: dict

    def octx(self, ctx) -> tuple:
        return tuple(self.obj_map[a] for a in ctx)

    def at(self, level: int, t: str) -> str:
        return (self.f0, self.f1)[level][t]


def identity_enriched_morphism(d: EnrichedMulticat) -> EnrichedMorphism:
    return EnrichedMorphism(d, d, {a: a for a in d.objects},
                            {t: t for t in d.homs0.terms}, {t: t for t in d.homs1.terms})


def enriched_of(m: EffectfulMorphism) -> EnrichedMorphism:
    """G on morphisms: the same pair of term maps."""
    return EnrichedMorphism(to_enriched(m.src), to_enriched(m.dst), dict(m.f0.obj_map),
                            dict(m.f0.term_map), dict(m.f1.term_map))


def validate_enriched_morphism(f: EnrichedMorphism, config: CheckConfig = DEFAULT) -> Report:
    rep = Report("enriched morphism")
    S, D = f.src, f.dst
    for a in S.objects:
        if f.obj_map.get(a) not in D.objects:
            raise ShapeError(f"object {a} maps outside the target")
    for level, (ST, DT, fm) in enumerate(((S.homs0, D.homs0, f.f0), (S.homs1, D.homs1, f.f1))):
        for t in ST.terms:
            if t not in fm:
                raise ShapeError(f"level-{level} term {t!r} has no image")
            ctx, b = ST.type_of(t)
            if DT.type_of(fm[t]) != (f.octx(ctx), f.obj_map[b]):
                rep.fail("respects-types", {"level": level, "t": t, "image": fm[t]})

    def coh(pick):
        for t in pick(S.homs0.terms):
            yield {"t": t}

    def ids(pick):
        for a in pick(sorted(S.ids0)):
            yield {"object": a}

    def psubs(pick):
        for t, us in pick(list(S.psub_keys())):
            yield {"t": t, "u": list(us)}

    def esubs(pick):
        for j, t, us in pick(list(S.esub_keys())):
            yield {"j": j, "t": t, "u": list(us)}

    def ev_esub(w):
        j, t, us = w["j"], w["t"], w["u"]
        args = [f.f1[u] if i == j - 1 else f.f0[u] for i, u in enumerate(us)]
        return f.f1[S.es(j, t, us)], D.es(j, f.f1[t], args)

    run_law(rep, "coh-eq", coh, lambda w: (f.f1[S.bar[w["t"]]], D.bar[f.f0[w["t"]]]), config)
    run_law(rep, "id-eq", ids, lambda w: (f.f0[S.id0(w["object"])], D.id0(f.obj_map[w["object"]])), config)
    run_law(rep, "psub-eq", psubs,
            lambda w: (f.f0[S.ps(w["t"], w["u"])], D.ps(f.f0[w["t"]], [f.f0[u] for u in w["u"]])), config)
    run_law(rep, "esub-eq", esubs, ev_esub, config)
    return rep


def enriched_morphisms(src: EnrichedMulticat, dst: EnrichedMulticat, guard: int = 200_000,
                       obj_maps=None) -> list[EnrichedMorphism]:
    """Every enriched morphism src -> dst, by pruned backtracking."""
    S0, S1 = src.homs0, src.homs1
    psub = materialize(src.psub)
    esub = materialize(src.esub)
    maps = obj_maps if obj_maps is not None else [
        dict(zip(src.objects, img)) for img in itertools.product(dst.objects, repeat=len(src.objects))]
    out = []
    for om in maps:
        octx = lambda ctx: tuple(om[a] for a in ctx)  # noqa: E731
        variables, cands = [], {}
        for level, (ST, DT) in enumerate(((S0, dst.homs0), (S1, dst.homs1))):
            for t in ST.terms:
                ctx, b = ST.type_of(t)
                variables.append((level, t))
                cands[(level, t)] = list(DT.hom(octx(ctx), om[b]))
        for a, i in src.ids0.items():
            want = dst.ids0.get(om[a])
            cands[(0, i)] = [x for x in cands[(0, i)] if x == want]
        cons = []
        for t in S0.terms:
            cons.append((((0, t), (1, src.bar[t])),
                         lambda a, t=t: a[(1, src.bar[t])] == dst.bar[a[(0, t)]]))
        for (t, us), r in psub.items():
            vs = ((0, t), *[(0, u) for u in us], (0, r))
            cons.append((vs, lambda a, t=t, us=us, r=r:
                         dst.psub.get((a[(0, t)], tuple(a[(0, u)] for u in us))) == a[(0, r)]))
        for (j, t, us), r in esub.items():
            uv = [(int(i == j - 1), u) for i, u in enumerate(us)]
            vs = ((1, t), *uv, (1, r))
            cons.append((vs, lambda a, j=j, t=t, uv=uv, r=r:
                         dst.esub.get((j, a[(1, t)], tuple(a[x] for x in uv))) == a[(1, r)]))
        for sol in search(variables, cands, cons, guard):
            f0 = {t: sol[(0, t)] for t in S0.terms}
            f1 = {t: sol[(1, t)] for t in S1.terms}
            out.append(EnrichedMorphism(src, dst, dict(om), f0, f1))
    return out


# transformations ------------------------------------------------------------

@dataclass
class EnrichedTransformation:
    src: EnrichedMorphism
    dst: EnrichedMorphism
    components: dict  # object -> level-0 term in homs0(fA; gA)


def validate_enriched_transformation(eta: EnrichedTransformation, config: CheckConfig = DEFAULT) -> Report:
    """Level 0: psub(g0 t, eta..) = psub(eta_B, [f0 t]).
    Level 1, each slot j: esub_j(g1 t, eta.. bar(eta_Aj) ..) = esub_1(bar eta_B, [f1 t])."""
    rep = Report("enriched transformation")
    f, g = eta.src, eta.dst
    C, D = f.src, f.dst
    if g.src is not C or g.dst is not D:
        raise ShapeError("transformation between non-parallel morphisms")
    for a in C.objects:
        comp = eta.components.get(a)
        if comp is None:
            raise ShapeError(f"missing component at {a}")
        if D.homs0.type_of(comp) != ((f.obj_map[a],), g.obj_map[a]):
            rep.fail("component-typed", {"object": a, "component": comp})
    if not rep.ok:
        return rep
    c = eta.components

    def level0(pick):
        for t in pick(C.homs0.terms):
            yield {"t": t}

    def ev0(w):
        ctx, b = C.homs0.type_of(w["t"])
        return D.ps(g.f0[w["t"]], [c[a] for a in ctx]), D.ps(c[b], [f.f0[w["t"]]])

    def level1(pick):
        for t in pick(C.homs1.terms):
            for j in pick(range(1, len(C.homs1.ctx(t)) + 1)):
                yield {"t": t, "j": j}

    def ev1(w):
        t, j = w["t"], w["j"]
        ctx, b = C.homs1.type_of(t)
        args = [c[a] for a in ctx]
        args[j - 1] = D.bar[args[j - 1]]
        return D.es(j, g.f1[t], args), D.es(1, D.bar[c[b]], [f.f1[t]])

    run_law(rep, "naturality-0", level0, ev0, config)
    run_law(rep, "naturality-1", level1, ev1, config)
    return rep


def identity_enriched_transformation(f: EnrichedMorphism) -> EnrichedTransformation:
    return EnrichedTransformation(f, f, {a: f.dst.id0(f.obj_map[a]) for a in f.src.objects})


def compose_enriched_transformations(eps: EnrichedTransformation,
                                     eta: EnrichedTransformation) -> EnrichedTransformation:
    """(eps * eta)_A = psub(eps_A, [eta_A])."""
    if eta.dst is not eps.src:
        raise ShapeError("transformations are not composable")
    D = eta.src.dst
    comps = {a: D.ps(eps.components[a], [eta.components[a]]) for a in eta.src.src.objects}
    return EnrichedTransformation(eta.src, eps.dst, comps)


def enriched_transformations_between(f: EnrichedMorphism, g: EnrichedMorphism,
                                     config: CheckConfig = DEFAULT) -> list[EnrichedTransformation]:
    D = f.dst.homs0
    objs = list(f.src.objects)
    pools = [D.hom((f.obj_map[a],), g.obj_map[a]) for a in objs]
    out = []
    for comps in itertools.product(*pools):
        eta = EnrichedTransformation(f, g, dict(zip(objs, comps)))
        if validate_enriched_transformation(eta, config).ok:
            out.append(eta)
    return out


def algebra_category(c: EnrichedMulticat, target: EnrichedMulticat, guard: int = 200_000,
                     config: CheckConfig = DEFAULT) -> Report:
    """Algebras of c in target: the category of enriched morphisms and
    transformations, with its category laws checked exhaustively."""
    from .homcat import hom_category_report

    morphisms = enriched_morphisms(c, target, guard)
    rep = hom_category_report(
        "algebras", morphisms,
        lambda f, g: enriched_transformations_between(f, g, config),
        identity_enriched_transformation, compose_enriched_transformations,
        lambda eta: validate_enriched_transformation(eta, config), config)
    rep.data["algebras"] = [{"objects": m.obj_map, "f0": m.f0, "f1": m.f1} for m in morphisms]
    return rep
