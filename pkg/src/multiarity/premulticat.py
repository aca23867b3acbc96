"""Finite truncated premulticategories: single-slot substitution, laws,
centrality and the centre, left-most-first iterated substitution with its
derived lemmas, the stateful-functions example, morphisms and
transformations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import CoverageError, InternalConsistencyError, ShapeError
from .report import DEFAULT, CheckConfig, Report, run_law
from .semantics import FunctionModel, carrier_dict
from .tables import ComputedTable, MultiHomTable, fill_slots


class Premulticat:
    """``sub1`` maps (t, pos, u) to t[Gamma, u, Gamma'] where pos is the
    1-based slot of t's context being replaced by u's context."""

    kind = "premulticat"

    def __init__(self, table: MultiHomTable, ids: Mapping, sub1: Mapping, check: bool = True):
        self.table = table
        self.ids = dict(ids)
        self.sub1 = sub1
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
        if isinstance(self.sub1, ComputedTable):
            return
        for (t, pos, u), r in self.sub1.items():
            ctx, b = T.type_of(t)
            if not 1 <= pos <= len(ctx) or T.target(u) != ctx[pos - 1]:
                raise ShapeError(f"sub1 entry ({t!r}, {pos}, {u!r}) does not splice")
            want = ctx[:pos - 1] + T.ctx(u) + ctx[pos:]
            if T.type_of(r) != (want, b):
                raise ShapeError(f"sub1 result {r!r} is mistyped")

    def id(self, a: str) -> str:
        try:
            return self.ids[a]
        except KeyError:
            raise CoverageError("id", a) from None

    def subst1(self, t: str, pos: int, u: str) -> str:
        r = self.sub1.get((t, pos, u))
        if r is None:
            n = len(self.table.ctx(t)) - 1 + len(self.table.ctx(u))
            raise CoverageError("sub1", [t, pos, u], truncated=n > self.table.max_context)
        return r

    def keys(self, allowed: Callable[[str], bool] | None = None):
        """Every well-typed sub1 key with result context within L."""
        T = self.table
        ok = allowed or (lambda _: True)
        for t in T.terms:
            if not ok(t):
                continue
            ctx = T.ctx(t)
            room = T.max_context - len(ctx) + 1
            for pos, a in enumerate(ctx, 1):
                for u in T.into(a, room):
                    if ok(u):
                        yield (t, pos, u)

    def materialized(self) -> "Premulticat":
        out = Premulticat(self.table, self.ids, {k: self.sub1[k] for k in self.sub1}, check=True)
        if hasattr(self, "model"):
            out.model = self.model
        return out


# laws -----------------------------------------------------------------------

def _left_unit(p: Premulticat, w: dict) -> tuple:
    u = w["u"]
    return p.subst1(p.id(p.table.target(u)), 1, u), u


def _right_unit(p: Premulticat, w: dict) -> tuple:
    t, pos = w["t"], w["pos"]
    return p.subst1(t, pos, p.id(p.table.ctx(t)[pos - 1])), t


def _assoc(p: Premulticat, w: dict) -> tuple:
    t, i, u, k, v = w["t"], w["pos"], w["u"], w["upos"], w["v"]
    lhs = p.subst1(p.subst1(t, i, u), i - 1 + k, v)
    rhs = p.subst1(t, i, p.subst1(u, k, v))
    return lhs, rhs


def _commute(p: Premulticat, w: dict) -> tuple:
    """u-first versus v-first for u at slot a and v at slot b of t."""
    T = p.table
    t, u, a, v, b = w["t"], w["u"], w["upos"], w["v"], w["vpos"]
    nu, nv = len(T.ctx(u)), len(T.ctx(v))
    if a < b:
        lhs = p.subst1(p.subst1(t, a, u), b + nu - 1, v)
        rhs = p.subst1(p.subst1(t, b, v), a, u)
    else:
        lhs = p.subst1(p.subst1(t, a, u), b, v)
        rhs = p.subst1(p.subst1(t, b, v), a + nv - 1, u)
    return lhs, rhs


LAWS = {"left-unit": _left_unit, "right-unit": _right_unit, "assoc": _assoc, "central": _commute}


def validate_premulticat(p: Premulticat, config: CheckConfig = DEFAULT) -> Report:
    rep = Report("premulticat")
    T = p.table
    L = T.max_context
    for a in p.objects:
        if a in p.ids:
            rep.passed("ids-defined")
        else:
            rep.gap("ids-defined", {"object": a})

    def left_unit(pick):
        for u in pick(T.terms):
            yield {"u": u}

    def right_unit(pick):
        for t in pick(T.terms):
            for pos in pick(range(1, len(T.ctx(t)) + 1)):
                yield {"t": t, "pos": pos}

    def assoc(pick):
        for t in pick(T.terms):
            ctx = T.ctx(t)
            for i in pick(range(1, len(ctx) + 1)):
                for u in pick(T.into(ctx[i - 1], L - len(ctx) + 1)):
                    uctx = T.ctx(u)
                    for k in pick(range(1, len(uctx) + 1)):
                        room = L - len(ctx) - len(uctx) + 2
                        for v in pick(T.into(uctx[k - 1], room)):
                            yield {"t": t, "pos": i, "u": u, "upos": k, "v": v}

    for law, gen in (("left-unit", left_unit), ("right-unit", right_unit), ("assoc", assoc)):
        run_law(rep, law, gen, lambda w, law=law: LAWS[law](p, w), config)
    return rep


# centrality -----------------------------------------------------------------

def _commute_instances(p: Premulticat, u: str, pick):
    T = p.table
    L = T.max_context
    a_obj, nu = T.target(u), len(T.ctx(u))
    for t in pick([t for t in T.terms if len(T.ctx(t)) >= 2]):
        ctx = T.ctx(t)
        for a in pick([i for i, x in enumerate(ctx, 1) if x == a_obj]):
            for b in pick([j for j in range(1, len(ctx) + 1) if j != a]):
                room = L - len(ctx) - nu + 2
                for v in pick(T.into(ctx[b - 1], room)):
                    yield {"u": u, "t": t, "upos": a, "v": v, "vpos": b}


def is_central(p: Premulticat, u: str, config: CheckConfig = DEFAULT) -> tuple[bool, dict | None]:
    """Central within the table: both exchange equations hold on every
    tabled instance. Returns the first failing witness otherwise."""
    for w in _commute_instances(p, u, iter):
        try:
            lhs, rhs = _commute(p, w)
        except CoverageError:
            continue
        if lhs != rhs:
            return False, dict(w, lhs=lhs, rhs=rhs)
    return True, None


def centrality_report(p: Premulticat, terms: Iterable[str] | None = None) -> dict:
    out = {}
    for u in (p.table.terms if terms is None else terms):
        ok, w = is_central(p, u)
        out[u] = {"central": ok, "witness": w}
    return out


def central_terms(p: Premulticat) -> set[str]:
    return {u for u, r in centrality_report(p).items() if r["central"]}


def centre(p: Premulticat, central: set[str] | None = None) -> Premulticat:
    """Restrict to central terms. Closure under sub1 is checked: a
    non-central result raises InternalConsistencyError."""
    central = central_terms(p) if central is None else central
    table = p.table.restrict(lambda t: t in central)
    sub1 = {}
    for key in p.keys(lambda t: t in central):
        r = p.sub1.get(key)
        if r is None:
            continue
        if r not in central:
            raise InternalConsistencyError(
                "substitution of central terms is not central",
                {"t": key[0], "pos": key[1], "u": key[2], "result": r},
            )
        sub1[key] = r
    ids = {a: i for a, i in p.ids.items() if i in central}
    return Premulticat(table, ids, sub1)


# iterated substitution ------------------------------------------------------

def isub_sparse(p: Premulticat, t: str, plugs: Mapping[int, str]) -> str:
    """Plug terms into the given slots of t, left-most first."""
    r, shift = t, 0
    for pos in sorted(plugs):
        u = plugs[pos]
        r = p.subst1(r, pos + shift, u)
        shift += len(p.table.ctx(u)) - 1
    return r


def isub(p: Premulticat, t: str, us: Sequence[str], start: int = 1) -> str:
    """t<Gamma, u_1..u_n, Gamma'> with u_1 at slot ``start``."""
    if not us:
        return t
    return isub_sparse(p, t, {start + i: u for i, u in enumerate(us)})


def _width(p: Premulticat, us: Sequence[str]) -> int:
    return sum(len(p.table.ctx(u)) for u in us)


# derived lemma suites -------------------------------------------------------

def _blocks_of(p: Premulticat, t: str, pick, budget_extra: int = 0, allowed=None, min_n: int = 1):
    """(start, us) filling a contiguous block of t's context."""
    T = p.table
    ctx = T.ctx(t)
    n_t = len(ctx)
    for s in pick(range(1, n_t + 1)):
        for n in pick(range(min_n, n_t - s + 2)):
            room = T.max_context - (n_t - n) - budget_extra
            for us in fill_slots(T, ctx[s - 1:s - 1 + n], room, pick, allowed):
                yield s, list(us)


def _splitting(p, w):
    t, s, us, j = w["t"], w["start"], w["u"], w["j"]
    lhs = isub(p, t, us, s)
    r = isub(p, t, us[:j], s)
    rhs = isub(p, r, us[j:], s + _width(p, us[:j]))
    return lhs, rhs


def _isub_assoc(p, w):
    t, i, u, s, vs = w["t"], w["pos"], w["u"], w["start"], w["v"]
    lhs = isub(p, p.subst1(t, i, u), vs, i - 1 + s)
    rhs = p.subst1(t, i, isub(p, u, vs, s))
    return lhs, rhs


def _exchange(p, w):
    """t<..U1..,Lambda,A..><..Delta..,U2..> = t<..A..,U2><..U1..,Delta..>."""
    t, s1, u1, s2, u2 = w["t"], w["start1"], w["u1"], w["start2"], w["u2"]
    shift = _width(p, u1) - len(u1)
    lhs = isub(p, isub(p, t, u1, s1), u2, s2 + shift)
    rhs = isub(p, isub(p, t, u2, s2), u1, s1)
    return lhs, rhs


def _simultaneous_assoc(p, w):
    t, s, us, vs = w["t"], w["start"], w["u"], w["v"]
    inner = [isub(p, u, v, 1) for u, v in zip(us, vs)]
    lhs = isub(p, t, inner, s)
    rhs = isub(p, isub(p, t, us, s), [x for v in vs for x in v], s)
    return lhs, rhs


DERIVED = {
    "splitting": _splitting,
    "isub-assoc": _isub_assoc,
    "un-cent": _exchange,
    "cent-left": _exchange,
    "cent-right": _exchange,
    "multicat-assoc": _simultaneous_assoc,
    "freyd-assoc": _simultaneous_assoc,
}


def derived_lemma_suite(p: Premulticat, central: set[str] | None = None, morphisms: Sequence = (),
                        config: CheckConfig = DEFAULT) -> Report:
    """Instance checks of the derived isub lemmas on a law-clean table."""
    central = central_terms(p) if central is None else central
    is_c = central.__contains__
    T = p.table
    L = T.max_context
    rep = Report("derived isub lemmas")

    def splitting(pick):
        for t in pick(T.terms):
            for s, us in _blocks_of(p, t, pick, min_n=2):
                for j in pick(range(1, len(us) + 1)):
                    yield {"t": t, "start": s, "u": us, "j": j}

    def isub_assoc(pick):
        for t in pick(T.terms):
            ctx = T.ctx(t)
            for i in pick(range(1, len(ctx) + 1)):
                for u in pick(T.into(ctx[i - 1], L - len(ctx) + 1)):
                    extra = len(ctx) - 1
                    for s, vs in _blocks_of(p, u, pick, budget_extra=extra):
                        yield {"t": t, "pos": i, "u": u, "start": s, "v": vs}

    def exchange(first_ok, second_ok, single_first=False):
        def gen(pick):
            for t in pick([t for t in T.terms if len(T.ctx(t)) >= 2]):
                ctx = T.ctx(t)
                n_t = len(ctx)
                for s1 in pick(range(1, n_t)):
                    max_n1 = 1 if single_first else n_t - s1
                    for n1 in pick(range(1, max_n1 + 1)):
                        for s2 in pick(range(s1 + n1, n_t + 1)):
                            for n2 in pick(range(1, n_t - s2 + 2)):
                                room = L - (n_t - n1 - n2)
                                for u1 in fill_slots(T, ctx[s1 - 1:s1 - 1 + n1], room - n2, pick, first_ok):
                                    left = room - _width(p, u1)
                                    for u2 in fill_slots(T, ctx[s2 - 1:s2 - 1 + n2], left, pick, second_ok):
                                        yield {"t": t, "start1": s1, "u1": list(u1),
                                               "start2": s2, "u2": list(u2)}
        return gen

    def simultaneous(free_column: bool):
        def gen(pick):
            for t in pick(T.terms):
                ctx = T.ctx(t)
                for s in pick(range(1, len(ctx) + 1)):
                    for n in pick(range(1, len(ctx) - s + 2)):
                        cols = [None] if not free_column else list(range(n))
                        for col in pick(cols):
                            yield from _nested(t, s, n, col, pick)
        return gen

    def _nested(t, s, n, col, pick):
        ctx = T.ctx(t)
        outer = L - (len(ctx) - n)
        allowed_u = [(lambda x: True) if i == col else is_c for i in range(n)]

        def go(i, left, us, vs):
            if i == n:
                yield {"t": t, "start": s, "u": list(us), "v": [list(v) for v in vs], "column": col}
                return
            need_after = n - i - 1
            for u in pick([u for u in T.into(ctx[s - 1 + i]) if allowed_u[i](u)]):
                uctx = T.ctx(u)
                if len(uctx) > left - need_after:
                    continue
                ok_v = (lambda x: True) if i == col else is_c
                for v in fill_slots(T, uctx, left - need_after, pick, ok_v):
                    yield from go(i + 1, left - _width(p, v), us + (u,), vs + (v,))

        yield from go(0, outer, (), ())

    suites = [
        ("splitting", splitting),
        ("isub-assoc", isub_assoc),
        ("un-cent", exchange(is_c, None, single_first=True)),
        ("cent-left", exchange(is_c, None)),
        ("cent-right", exchange(None, is_c)),
        ("multicat-assoc", simultaneous(False)),
        ("freyd-assoc", simultaneous(True)),
    ]
    for law, gen in suites:
        run_law(rep, law, gen, lambda w, law=law: DERIVED[law](p, w), config)
    for k, f in enumerate(morphisms):
        def pres(pick, f=f):
            S = f.src.table
            for t in pick(S.terms):
                for s, us in _blocks_of(f.src, t, pick):
                    yield {"t": t, "start": s, "u": us}

        def ev(w, f=f):
            return (f(isub(f.src, w["t"], w["u"], w["start"])),
                    isub(f.dst, f(w["t"]), [f(u) for u in w["u"]], w["start"]))
        run_law(rep, f"isub-pres[{k}]", pres, ev, config)
    return rep


# stateful functions ---------------------------------------------------------

def stateful_premulticat(state, carriers, max_arity: int, guard: int = 10_000) -> Premulticat:
    """Terms are all functions (prod A_i) x S -> B x S; substituting u
    runs u first and threads its output state into t."""
    states = state if isinstance(state, int) else len(state)
    model = FunctionModel(carrier_dict(carriers), max_arity, state_size=states, guard=guard)
    table = MultiHomTable(model.objects, max_arity, model.homs)
    ids = {}
    for a in model.objects:
        space = model.space((a,), a)
        ids[a] = model.name((a,), a, [x * states + s for x, s in space.points])

    def compute(key):
        t, pos, u = key
        if t not in model.decode or u not in model.decode:
            return None
        ctx, b, tv = model.decode[t]
        uctx, a, uv = model.decode[u]
        if not 1 <= pos <= len(ctx) or ctx[pos - 1] != a:
            return None
        new_ctx = ctx[:pos - 1] + uctx + ctx[pos:]
        if len(new_ctx) > max_arity:
            return None
        ts, us_ = model.space(ctx, b), model.space(uctx, a)
        k = len(uctx)
        values = []
        for point in model.space(new_ctx, b).points:
            left, mid, right, s = point[:pos - 1], point[pos - 1:pos - 1 + k], point[pos - 1 + k:-1], point[-1]
            c, s1 = divmod(uv[us_.index(mid + (s,))], states)
            values.append(tv[ts.index(left + (c,) + right + (s1,))])
        return model.name(new_ctx, b, values)

    p = Premulticat(table, ids, None, check=False)
    p.sub1 = ComputedTable(compute, p.keys)
    p.model = model
    return p


# morphisms and transformations ---------------------------------------------

@dataclass
class PremultMorphism:
    src: Premulticat
    dst: Premulticat
    obj_map: dict
    term_map: dict

    def __call__(self, t: str) -> str:
        return self.term_map[t]

    def octx(self, ctx) -> tuple:
        return tuple(self.obj_map[a] for a in ctx)


def identity_premult_morphism(p: Premulticat) -> PremultMorphism:
    return PremultMorphism(p, p, {a: a for a in p.objects}, {t: t for t in p.table.terms})


def validate_premult_morphism(f: PremultMorphism, config: CheckConfig = DEFAULT) -> Report:
    from .clone import _check_morphism_shape

    rep = Report("premulticat morphism")
    _check_morphism_shape(f, rep)
    S = f.src

    def ids(pick):
        for a in pick(sorted(S.ids)):
            yield {"object": a}

    def subs(pick):
        for key in pick(S.keys()):
            yield {"t": key[0], "pos": key[1], "u": key[2]}

    run_law(rep, "preserves-ids", ids,
            lambda w: (f(S.id(w["object"])), f.dst.id(f.obj_map[w["object"]])), config)
    run_law(rep, "preserves-sub1", subs,
            lambda w: (f(S.subst1(w["t"], w["pos"], w["u"])), f.dst.subst1(f(w["t"]), w["pos"], f(w["u"]))),
            config)
    return rep


@dataclass
class PremultTransformation:
    src: PremultMorphism
    dst: PremultMorphism
    components: dict


def validate_premult_transformation(eta: PremultTransformation, config: CheckConfig = DEFAULT) -> Report:
    from .clone import _check_transformation_shape

    rep = Report("premulticat transformation")
    _check_transformation_shape(eta, rep)
    if not rep.ok:
        return rep
    f, g, D = eta.src, eta.dst, eta.src.dst
    for a, comp in sorted(eta.components.items()):
        ok, w = is_central(D, comp)
        if ok:
            rep.passed("component-central")
        else:
            rep.fail("component-central", dict(w, object=a))

    def inst(pick):
        for t in pick(f.src.table.terms):
            yield {"t": t}

    def ev(w):
        t = w["t"]
        ctx, b = f.src.table.type_of(t)
        return (D.subst1(eta.components[b], 1, f(t)),
                isub(D, g(t), [eta.components[a] for a in ctx], 1))

    run_law(rep, "naturality", inst, ev, config)
    return rep


def identity_premult_transformation(f: PremultMorphism) -> PremultTransformation:
    return PremultTransformation(f, f, {a: f.dst.id(f.obj_map[a]) for a in f.src.objects})


def compose_premult_transformations(eps: PremultTransformation,
                                    eta: PremultTransformation) -> PremultTransformation:
    if eta.dst is not eps.src:
        raise ShapeError("transformations are not composable")
    D = eta.src.dst
    comps = {a: D.subst1(eps.components[a], 1, eta.components[a]) for a in eta.src.src.objects}
    return PremultTransformation(eta.src, eps.dst, comps)


def premult_morphisms(src: Premulticat, dst: Premulticat, guard: int = 200_000) -> list[PremultMorphism]:
    from .clone import morphism_search

    out = []
    keys = [(k, src.sub1[k]) for k in src.keys() if k in src.sub1]
    for img in itertools.product(dst.objects, repeat=len(src.objects)):
        om = dict(zip(src.objects, img))
        forced = {src.ids[a]: dst.ids.get(om[a]) for a in src.objects if a in src.ids}
        cons = []
        for (t, pos, u), r in keys:
            def pred(a, t=t, pos=pos, u=u, r=r):
                return dst.sub1.get((a[t], pos, a[u])) == a[r]
            cons.append(((t, u, r), pred))
        for tm in morphism_search(src, dst, om, forced, cons, guard):
            out.append(PremultMorphism(src, dst, om, tm))
    return out


def premult_transformations_between(f: PremultMorphism, g: PremultMorphism,
                                    config: CheckConfig = DEFAULT) -> list[PremultTransformation]:
    D = f.dst.table
    objs = list(f.src.objects)
    pools = [D.hom((f.obj_map[a],), g.obj_map[a]) for a in objs]
    out = []
    for comps in itertools.product(*pools):
        eta = PremultTransformation(f, g, dict(zip(objs, comps)))
        if validate_premult_transformation(eta, config).ok:
            out.append(eta)
    return out
