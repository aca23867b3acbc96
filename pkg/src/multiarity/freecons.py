"""Free constructions, truncated to finite presentations: the free clone
on a category and its universal property, free cartesian and free strict
monoidal categories of lists, free categories on graphs, and the free
category enriched in arrows of sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .arrowcat import UNIT, ArrowObj, arrow_coproduct, pointwise_product
from .category import ArrowGraph, FinCategory, FinGraph, validate_category
from .clone import Clone, CloneMorphism, clone_morphisms
from .errors import CapacityError, LawError, ShapeError
from .multicat import Multicat
from .report import Report
from .tables import ComputedTable, MultiHomTable, all_contexts, hom_key


# free clone -----------------------------------------------------------------

def free_term(ctx, target: str, i: int, f: str) -> str:
    return f"{hom_key(ctx, target)}|{i}:{f}"


def free_clone(cat: FinCategory, max_context: int) -> Clone:
    """Mhom(A_1..A_n; B) = sum_i Hom(A_i, B); pr^j = (j, id); substitution
    (k, f)[u_1..u_m] = (k', f . g) where u_k = (k', g)."""
    rep = validate_category(cat)
    if not rep.ok:
        raise LawError("input is not a category", rep.violations[0].witness)
    decode = {}
    homs = {}
    for ctx in all_contexts(cat.objects, max_context):
        for b in cat.objects:
            names = []
            for i, a in enumerate(ctx, 1):
                for f in cat.hom(a, b):
                    name = free_term(ctx, b, i, f)
                    decode[name] = (ctx, b, i, f)
                    names.append(name)
            homs[(ctx, b)] = names
    table = MultiHomTable(cat.objects, max_context, homs)
    projections = {}
    for ctx in all_contexts(cat.objects, max_context):
        for j, a in enumerate(ctx, 1):
            projections[(ctx, j)] = free_term(ctx, a, j, cat.ids[a])

    def compute(key):
        t, us = key
        if t not in decode or not us or any(u not in decode for u in us):
            return None
        ctx, b, k, f = decode[t]
        if len(us) != len(ctx):
            return None
        inner = decode[us[0]][0]
        if any(decode[u][0] != inner or decode[u][1] != a for u, a in zip(us, ctx)):
            return None
        _, _, k2, g = decode[us[k - 1]]
        fg = cat.compose(f, g)
        return None if fg is None else free_term(inner, b, k2, fg)

    def keys():
        for t in table.terms:
            ctx = table.ctx(t)
            for inner in all_contexts(cat.objects, max_context):
                for us in itertools.product(*[table.hom(inner, a) for a in ctx]):
                    yield (t, us)

    c = Clone(table, projections, ComputedTable(compute, keys))
    c.decode = decode
    c.category = cat
    return c


def freeness_report(c: Clone) -> Report:
    """(1, t)[pr^j] = (j, t) on every tabled instance."""
    rep = Report("freeness")
    T = c.table
    for ctx in all_contexts(c.objects, T.max_context):
        for j, a in enumerate(ctx, 1):
            for b in c.objects:
                for f in c.category.hom(a, b):
                    lhs = c.subst(free_term((a,), b, 1, f), [c.pr(ctx, j)])
                    rhs = free_term(ctx, b, j, f)
                    if lhs == rhs:
                        rep.passed("freeness")
                    else:
                        rep.fail("freeness", {"t": f, "context": list(ctx), "j": j, "lhs": lhs, "rhs": rhs})
    return rep


@dataclass
class Functor:
    """A functor from a finite category into the unary part of a clone."""

    obj_map: dict
    arrow_map: dict


def check_functor(cat: FinCategory, target: Clone, F: Functor) -> Report:
    rep = Report("functor")
    for a in cat.objects:
        fa = F.obj_map[a]
        lhs, rhs = F.arrow_map[cat.ids[a]], target.pr((fa,), 1)
        if lhs == rhs:
            rep.passed("preserves-ids")
        else:
            rep.fail("preserves-ids", {"object": a, "lhs": lhs, "rhs": rhs})
    for (g, f), gf in cat.comp.items():
        lhs, rhs = F.arrow_map[gf], target.sub.get((F.arrow_map[g], (F.arrow_map[f],)))
        if lhs == rhs:
            rep.passed("preserves-comp")
        else:
            rep.fail("preserves-comp", {"g": g, "f": f, "lhs": lhs, "rhs": rhs})
    for m in cat.morphisms:
        a, b = cat.type_of(m)
        if target.table.type_of(F.arrow_map[m]) != ((F.obj_map[a],), F.obj_map[b]):
            rep.fail("respects-types", {"arrow": m, "image": F.arrow_map[m]})
    return rep


def eta_functor(free: Clone) -> Functor:
    """The unit: f goes to (1, f) in the unary hom."""
    cat = free.category
    return Functor({a: a for a in cat.objects},
                   {m: free_term((cat.type_of(m)[0],), cat.type_of(m)[1], 1, m) for m in cat.morphisms})


def mediating_clone_morphism(free: Clone, target: Clone, F: Functor) -> CloneMorphism:
    """F*(j, f) = F(f)[pr^j over F(A_1..A_n)]."""
    cat = free.category
    rep = check_functor(cat, target, F)
    if not rep.ok:
        raise LawError("F is not a functor into the unary part of the target", rep.violations[0].witness)
    term_map = {}
    for t, (ctx, b, j, f) in free.decode.items():
        fctx = tuple(F.obj_map[a] for a in ctx)
        term_map[t] = target.subst(F.arrow_map[f], [target.pr(fctx, j)])
    return CloneMorphism(free, target, dict(F.obj_map), term_map)


def mediating_competitors(free: Clone, target: Clone, F: Functor, guard: int = 200_000) -> list[CloneMorphism]:
    """Every clone morphism whose unary restriction (after the unit) is F."""
    eta = eta_functor(free)
    fixed = {eta.arrow_map[m]: F.arrow_map[m] for m in free.category.morphisms}
    return clone_morphisms(free, target, guard, fixed=fixed, obj_maps=[dict(F.obj_map)])


# lists ----------------------------------------------------------------------

def list_name(xs) -> str:
    return "[" + ",".join(xs) + "]"


def _lists(objects, k):
    out = []
    for n in range(k + 1):
        out.extend(itertools.product(objects, repeat=n))
    return out


@dataclass
class ListCategory:
    """A category whose objects are lists; ``decode`` sends a morphism name
    to (domain, codomain, tuple of terms)."""

    category: FinCategory
    lists: dict  # name -> tuple
    decode: dict
    encode: dict = field(repr=False)

    def obj(self, xs) -> str:
        return list_name(xs)

    def arrow(self, dom, cod, terms) -> str:
        return self.encode[(tuple(dom), tuple(cod), tuple(terms))]


def _arrow_name(dom, cod, terms) -> str:
    return f"{list_name(dom)}=>{list_name(cod)}:(" + ";".join(terms) + ")"


def _build(objects, k, hom_of, compose, identity) -> ListCategory:
    lists = _lists(objects, k)
    decode, encode, homs = {}, {}, {}
    for x in lists:
        for y in lists:
            names = []
            for terms in hom_of(x, y):
                n = _arrow_name(x, y, terms)
                decode[n] = (x, y, tuple(terms))
                encode[(x, y, tuple(terms))] = n
                names.append(n)
            homs[(list_name(x), list_name(y))] = names
    ids = {list_name(x): encode[(x, x, tuple(identity(x)))] for x in lists}
    comp = {}
    by_dom = {}
    for n, (x, y, _) in decode.items():
        by_dom.setdefault(x, []).append(n)
    for f, (x, y, fs) in decode.items():
        for g in by_dom.get(y, []):
            _, z, gs = decode[g]
            r = compose(gs, fs, x, y, z)
            if r is not None:
                comp[(g, f)] = encode[(x, z, tuple(r))]
    cat = FinCategory(tuple(list_name(x) for x in lists), homs, ids, comp)
    return ListCategory(cat, {list_name(x): x for x in lists}, decode, encode)


def free_cartesian(c: Clone, max_len: int) -> ListCategory:
    """Lists of length <= K; Hom([A..],[B_1..B_m]) = prod_i Mhom(A..; B_i),
    composition g_i[f_1..f_m]. Hom([], nonempty) is empty since contexts
    have length at least 1."""
    if max_len > c.table.max_context:
        raise ShapeError("list length exceeds the clone's maxContext")
    T = c.table

    def hom_of(x, y):
        if not x:
            return [()] if not y else []
        return itertools.product(*[T.hom(x, b) for b in y])

    def compose(gs, fs, x, y, z):
        if not y:
            return () if not z else None
        out = []
        for g in gs:
            r = c.sub.get((g, tuple(fs)))
            if r is None:
                return None
            out.append(r)
        return out

    def identity(x):
        return [c.pr(x, j) for j in range(1, len(x) + 1)]

    lc = _build(c.objects, max_len, hom_of, compose, identity)
    lc.clone = c
    return lc


def cartesian_report(lc: ListCategory) -> Report:
    """Category laws, terminal object [] and binary products by
    concatenation, the latter against every tabled cone."""
    rep = validate_category(lc.category)
    cat, c = lc.category, lc.clone
    K = max(len(x) for x in lc.lists.values())
    for name in cat.objects:
        n = len(cat.hom(name, "[]"))
        if n == 1:
            rep.passed("terminal")
        else:
            rep.fail("terminal", {"object": name, "arrows": n})
    for xn, x in lc.lists.items():
        for yn, y in lc.lists.items():
            if len(x) + len(y) > K:
                continue
            p = x + y
            pi1 = lc.arrow(p, x, [c.pr(p, j) for j in range(1, len(x) + 1)])
            pi2 = lc.arrow(p, y, [c.pr(p, len(x) + j) for j in range(1, len(y) + 1)])
            pn = list_name(p)
            for zn in cat.objects:
                for f in cat.hom(zn, xn):
                    for g in cat.hom(zn, yn):
                        hs = [h for h in cat.hom(zn, pn)
                              if cat.compose(pi1, h) == f and cat.compose(pi2, h) == g]
                        if len(hs) == 1:
                            rep.passed("product")
                        else:
                            rep.fail("product", {"x": xn, "y": yn, "z": zn, "f": f, "g": g, "mediators": hs})
    return rep


def cartesian_formula(cat: FinCategory, xs, ys) -> int:
    """prod_i sum_j |Hom(A_j, B_i)| for the free cartesian category."""
    out = 1
    for b in ys:
        out *= sum(len(cat.hom(a, b)) for a in xs)
    return out


def cartesian_clone(lc: ListCategory) -> Clone:
    """Cl of the free cartesian category, restricted to the singleton lists:
    Mhom([A_1]..[A_n]; [B]) = Hom([A_1..A_n], [B]), projections are the
    product projections and substitution is composition after tupling."""
    c, cat = lc.clone, lc.category
    K = max(len(x) for x in lc.lists.values())
    wrap = {a: list_name((a,)) for a in c.objects}
    homs, projections = {}, {}
    for ctx in all_contexts(c.objects, K):
        for b in c.objects:
            homs[(tuple(wrap[a] for a in ctx), wrap[b])] = list(cat.hom(list_name(ctx), wrap[b]))
        for j in range(1, len(ctx) + 1):
            projections[(tuple(wrap[a] for a in ctx), j)] = lc.arrow(ctx, (ctx[j - 1],), [c.pr(ctx, j)])
    table = MultiHomTable(tuple(wrap[a] for a in c.objects), K, homs)

    def compute(key):
        t, us = key
        if t not in lc.decode or any(u not in lc.decode for u in us):
            return None
        x, _, _ = lc.decode[t]
        decoded = [lc.decode[u] for u in us]
        if not us or len(us) != len(x):
            return None
        y = decoded[0][0]
        if any(d[0] != y or d[1] != (a,) for d, a in zip(decoded, x)):
            return None
        tupled = lc.encode.get((y, x, tuple(d[2][0] for d in decoded)))
        return None if tupled is None else cat.compose(t, tupled)

    def keys():
        for t in table.terms:
            ctx = table.ctx(t)
            for inner in all_contexts(table.objects, K):
                for us in itertools.product(*[table.hom(inner, a) for a in ctx]):
                    yield (t, us)

    return Clone(table, projections, ComputedTable(compute, keys))


def cartesian_unit(lc: ListCategory, target: Clone | None = None) -> CloneMorphism:
    """eta: C -> Cl(Cart C), A to [A] and t to the arrow with the single
    component t."""
    c = lc.clone
    target = target or cartesian_clone(lc)
    obj_map = {a: list_name((a,)) for a in c.objects}
    term_map = {}
    for t in c.table.terms:
        ctx, b = c.table.type_of(t)
        if len(ctx) <= max(len(x) for x in lc.lists.values()):
            term_map[t] = lc.arrow(ctx, (b,), [t])
    return CloneMorphism(c, target, obj_map, term_map)


def free_strict_monoidal(m: Multicat, max_len: int) -> ListCategory:
    """Morphisms [A..] -> [B_1..B_m] are m-tuples of terms whose contexts
    partition the domain into nonempty consecutive blocks; composition is
    blockwise simultaneous substitution."""
    if max_len > m.table.max_context:
        raise ShapeError("list length exceeds the multicategory's maxContext")
    T = m.table

    def hom_of(x, y):
        n, k = len(x), len(y)
        if k == 0:
            return [()] if n == 0 else []
        out = []
        for cuts in itertools.combinations(range(1, n), k - 1):
            bounds = (0, *cuts, n)
            blocks = [x[bounds[i]:bounds[i + 1]] for i in range(k)]
            out.extend(itertools.product(*[T.hom(bl, b) for bl, b in zip(blocks, y)]))
        return out

    def compose(gs, fs, x, y, z):
        out, i = [], 0
        for g in gs:
            n = len(T.ctx(g))
            r = m.sub.get((g, tuple(fs[i:i + n])))
            if r is None:
                return None
            out.append(r)
            i += n
        return out

    def identity(x):
        return [m.ids[a] for a in x]

    lc = _build(m.objects, max_len, hom_of, compose, identity)
    lc.multicat = m
    return lc


def tensor(lc: ListCategory, f: str, g: str) -> str | None:
    x1, y1, fs = lc.decode[f]
    x2, y2, gs = lc.decode[g]
    return lc.encode.get((x1 + x2, y1 + y2, fs + gs))


def monoidal_report(lc: ListCategory) -> Report:
    """Category laws plus strict monoidal laws: the unit and associativity
    of the tensor on arrows, id tensor id = id, and interchange."""
    rep = validate_category(lc.category)
    cat = lc.category
    unit = cat.ids["[]"]
    arrows = cat.morphisms
    for f in arrows:
        for law, val in (("unit-left", tensor(lc, unit, f)), ("unit-right", tensor(lc, f, unit))):
            if val == f:
                rep.passed(law)
            else:
                rep.fail(law, {"f": f, "lhs": val})
    for xn in cat.objects:
        for yn in cat.objects:
            t = tensor(lc, cat.ids[xn], cat.ids[yn])
            if t is None:
                continue
            want = cat.ids[list_name(lc.lists[xn] + lc.lists[yn])]
            if t == want:
                rep.passed("tensor-ids")
            else:
                rep.fail("tensor-ids", {"x": xn, "y": yn, "lhs": t, "rhs": want})
    for f, g, h in itertools.product(arrows, repeat=3):
        fg = tensor(lc, f, g)
        if fg is None:
            continue
        a, b = tensor(lc, fg, h), None
        gh = tensor(lc, g, h)
        if gh is not None:
            b = tensor(lc, f, gh)
        if a is None and b is None:
            continue
        if a == b:
            rep.passed("tensor-assoc")
        else:
            rep.fail("tensor-assoc", {"f": f, "g": g, "h": h, "lhs": a, "rhs": b})
    by_dom = {}
    for m in arrows:
        by_dom.setdefault(cat.type_of(m)[0], []).append(m)
    for f1 in arrows:
        for f2 in arrows:
            f12 = tensor(lc, f1, f2)
            if f12 is None:
                continue
            for g1 in by_dom.get(cat.type_of(f1)[1], []):
                for g2 in by_dom.get(cat.type_of(f2)[1], []):
                    g12 = tensor(lc, g1, g2)
                    if g12 is None:
                        continue
                    lhs = cat.compose(g12, f12)
                    c1, c2 = cat.compose(g1, f1), cat.compose(g2, f2)
                    rhs = None if c1 is None or c2 is None else tensor(lc, c1, c2)
                    if lhs is None or rhs is None:
                        rep.law("interchange").skipped += 1
                    elif lhs == rhs:
                        rep.passed("interchange")
                    else:
                        rep.fail("interchange", {"f1": f1, "f2": f2, "g1": g1, "g2": g2, "lhs": lhs, "rhs": rhs})
    return rep


# free categories on graphs --------------------------------------------------

def _paths(vertices, edges: dict, max_len: int):
    """(source, target, tuple of edge labels) for paths of length 1..P."""
    out_edges = {}
    for (a, b), es in edges.items():
        for e in es:
            out_edges.setdefault(a, []).append((e, b))
    frontier = [(a, a, ()) for a in vertices]
    out = []
    for _ in range(max_len):
        nxt = []
        for a, b, path in frontier:
            for e, c in out_edges.get(b, []):
                nxt.append((a, c, path + (e,)))
        out.extend(nxt)
        frontier = nxt
    return out


def free_category_on_graph(g: FinGraph, max_len: int) -> FinCategory:
    """Paths of length <= P plus formal identities; composition is
    concatenation and is undefined beyond P."""
    homs = {}
    ids = {a: f"id_{a}" for a in g.vertices}
    for a in g.vertices:
        homs.setdefault((a, a), []).append(ids[a])
    typ = {ids[a]: (a, a, ()) for a in g.vertices}
    named = {}
    for a, b, path in _paths(g.vertices, g.edges, max_len):
        name = ".".join(reversed(path))  # composite order: last edge first
        homs.setdefault((a, b), []).append(name)
        typ[name] = (a, b, path)
        named[(a, path)] = name
    comp = {}
    for f, (a, b, p) in typ.items():
        for h, (b2, c, q) in typ.items():
            if b2 != b:
                continue
            if not p:
                comp[(h, f)] = h
            elif not q:
                comp[(h, f)] = f
            elif len(p) + len(q) <= max_len:
                comp[(h, f)] = named[(a, p + q)]
    return FinCategory(g.vertices, homs, ids, comp)


@dataclass
class EnrichedFreeCategory:
    """Hom arrow objects plus their realisation as two ordinary categories
    and the identity-on-objects functor between them."""

    homs: dict  # (A, B) -> ArrowObj
    level0: FinCategory
    level1: FinCategory
    functor: dict  # level-0 arrow -> level-1 arrow


def _elements(objs, level):
    sets = [getattr(o, level) for o in objs]
    return list(itertools.product(*[s.elements for s in sets]))


def free_enriched_category(g: ArrowGraph, max_len: int, guard: int = 100_000) -> EnrichedFreeCategory:
    """Hom(A, B) = sum over paths of length <= P of the pointwise product of
    the edge arrow objects, plus the unit when A = B."""
    edge_names = {}
    edges = {}
    for k, ((a, b), obj) in enumerate(sorted(g.edges.items())):
        name = f"e{k}"
        edge_names[name] = obj
        edges[(a, b)] = [name]
    paths = _paths(g.vertices, edges, max_len)
    summands: dict = {}
    for a in g.vertices:
        summands.setdefault((a, a), []).append(("id", ()))
    for a, b, path in paths:
        summands.setdefault((a, b), []).append((a, path))

    def summand_obj(path):
        objs = [edge_names[e] for e in path]
        if not objs:
            return UNIT
        acc = objs[0]
        for o in objs[1:]:
            acc = pointwise_product(acc, o)[0]
        return acc

    homs = {}
    cats = []
    total = 0
    for (a, b), ss in summands.items():
        homs[(a, b)] = arrow_coproduct([summand_obj(p) for _, p in ss])[0]
        total += len(homs[(a, b)].level0)
    if total > guard:
        raise CapacityError(f"free enriched category has {total} level-0 arrows (guard {guard})")

    def name(a, b, path, elems):
        if not path:
            return f"id_{a}"
        return f"{a}->{b}:" + ".".join(f"{e}<{x}>" for e, x in zip(path, elems))

    decode = ({}, {})
    for level_i, level in enumerate(("level0", "level1")):
        hs = {}
        for (a, b), ss in summands.items():
            for _, path in ss:
                objs = [edge_names[e] for e in path]
                for elems in (_elements(objs, level) if path else [()]):
                    n = name(a, b, path, elems)
                    hs.setdefault((a, b), []).append(n)
                    decode[level_i][n] = (a, b, path, elems)
        ids = {a: f"id_{a}" for a in g.vertices}
        index = {(a, p, e): n for n, (a, _, p, e) in decode[level_i].items()}
        comp = {}
        for f, (a, b, p, pe) in decode[level_i].items():
            for h, (b2, c, q, qe) in decode[level_i].items():
                if b2 == b and len(p) + len(q) <= max_len:
                    comp[(h, f)] = index[(a, p + q, pe + qe)]
        cats.append(FinCategory(g.vertices, hs, ids, comp))
    functor = {}
    for n, (a, b, p, elems) in decode[0].items():
        img = tuple(edge_names[e].diamond(x) for e, x in zip(p, elems))
        functor[n] = name(a, b, p, img)
    return EnrichedFreeCategory(homs, cats[0], cats[1], functor)


def functor_report(src: FinCategory, dst: FinCategory, F: dict) -> Report:
    rep = Report("identity-on-objects functor")
    for a in src.objects:
        if F[src.ids[a]] == dst.ids[a]:
            rep.passed("preserves-ids")
        else:
            rep.fail("preserves-ids", {"object": a})
    for (h, f), r in src.comp.items():
        lhs, rhs = F[r], dst.compose(F[h], F[f])
        if lhs == rhs:
            rep.passed("preserves-comp")
        else:
            rep.fail("preserves-comp", {"h": h, "f": f, "lhs": lhs, "rhs": rhs})
    return rep
