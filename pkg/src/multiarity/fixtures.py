"""Standard desk-scale structures used by the tests, the experiment
scripts and the JSON fixtures, plus a catalog of single-entry mutations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .arrowcat import UNIT, ArrowObj, Square, check_duoidal, interchange
from .category import FinCategory, category_from_arrows
from .clone import (Clone, CloneTransformation, identity_morphism, set_clone_fragment, validate_clone,
                    validate_clone_morphism, validate_clone_transformation, LAWS as CLONE_LAWS)
from .finset import FinMap
from .effectful import lowered_effectful, premult_to_effectful, validate_effectful
from .enriched import (EnrichedMulticat, identity_enriched_morphism, to_enriched, validate_enriched,
                       validate_enriched_morphism, LAWS as ENRICHED_LAWS)
from .multicat import Multicat, clone_to_multicat, discrete_multicat, validate_multicat, LAWS as MULTICAT_LAWS
from .premulticat import Premulticat, stateful_premulticat, validate_premulticat, LAWS as PREMULT_LAWS
from .report import CheckConfig, Report
from .tables import MultiHomTable, all_contexts, materialize


def A(l0, l1, table) -> ArrowObj:
    return ArrowObj.make(l0, l1, table)


def arrow_pool() -> list[ArrowObj]:
    """Six arrow objects with both levels of size at most 3."""
    return [
        UNIT,
        A(["0", "1"], ["*"], {"0": "*", "1": "*"}),
        A(["0", "1"], ["0", "1"], {"0": "0", "1": "1"}),
        A(["0", "1"], ["0", "1"], {"0": "1", "1": "0"}),
        A(["0"], ["0", "1"], {"0": "0"}),
        A(["0", "1", "2"], ["0", "1"], {"0": "0", "1": "0", "2": "1"}),
    ]


# categories -----------------------------------------------------------------

def fixture_categories() -> dict[str, FinCategory]:
    return {
        "point": category_from_arrows(["A"], {}),
        "arrow": category_from_arrows(["A", "B"], {"f": ("A", "B")}),
        "parallel": category_from_arrows(["A", "B"], {"f": ("A", "B"), "g": ("A", "B")}),
        "chain": category_from_arrows(["A", "B", "C"], {"f": ("A", "B"), "g": ("B", "C"), "gf": ("A", "C")},
                                      {("g", "f"): "gf"}),
        "idempotent": category_from_arrows(["A"], {"e": ("A", "A")}, {("e", "e"): "e"}),
    }


# clones ---------------------------------------------------------------------

def projection_clone(objects=("X",), max_context: int = 2) -> Clone:
    """Only projections: t[u_1..u_n] = u_j when t = pr^j."""
    homs, prs, decode = {}, {}, {}
    for ctx in all_contexts(objects, max_context):
        for j, a in enumerate(ctx, 1):
            name = f"pr{j}:{','.join(ctx)}"
            homs.setdefault((ctx, a), []).append(name)
            prs[(ctx, j)] = name
            decode[name] = j
    table = MultiHomTable(objects, max_context, homs)
    sub = {}
    for t, j in decode.items():
        ctx = table.ctx(t)
        for inner in all_contexts(objects, max_context):
            pools = [table.hom(inner, b) for b in ctx]
            for us in itertools.product(*pools):
                sub[(t, us)] = us[j - 1]
    return Clone(table, prs, sub)


# stateful -------------------------------------------------------------------

UNARY_NAMES = {"01": "id", "10": "flip", "00": "w0", "11": "w1"}


def rename_premulticat(p: Premulticat, names: dict) -> Premulticat:
    r = lambda t: names.get(t, t)  # noqa: E731
    T = p.table
    table = MultiHomTable(T.objects, T.max_context, {k: [r(t) for t in v] for k, v in T.homs.items()})
    sub1 = {(r(t), i, r(u)): r(v) for (t, i, u), v in materialize(p.sub1).items()}
    return Premulticat(table, {a: r(i) for a, i in p.ids.items()}, sub1)


def stateful2(max_arity: int = 2) -> Premulticat:
    """Stateful functions over a one-element carrier with two states; the
    unary terms are renamed id, flip, w0 (write 0) and w1 (write 1)."""
    p = stateful_premulticat(2, {"A": 1}, max_arity)
    names = {f"A->A|{code}": n for code, n in UNARY_NAMES.items()}
    return rename_premulticat(p, names)


def stateful_fixtures() -> dict[str, Premulticat]:
    """Stateful premulticategories inside the per-hom size guard."""
    return {
        "S2-A1-L2": stateful_premulticat(2, {"A": 1}, 2),
        "S2-A1-L3": stateful_premulticat(2, {"A": 1}, 3),
        "S1-A2-L2": stateful_premulticat(1, {"A": 2}, 2),
        "S2-A2-L1": stateful_premulticat(2, {"A": 2}, 1),
        "S2-A1B1-L2": stateful_premulticat(2, {"A": 1, "B": 1}, 2),
        "S1-A1B2-L2": stateful_premulticat(1, {"A": 1, "B": 2}, 2),
    }


def g_of_stateful(max_arity: int = 2):
    """The enriched structure G(premult_to_effectful(stateful2))."""
    return to_enriched(premult_to_effectful(stateful2(max_arity))).materialized()


def trivial_effectful(max_context: int = 1):
    """One object and a single term in every hom (the functions on a
    one-element set); eff is the lowered copy. Terminal at its bound."""
    return lowered_effectful(clone_to_multicat(set_clone_fragment([1], max_context)).materialized())


def roundtrip_fixtures() -> dict:
    """Effectful and enriched structures with at most 3 objects, hom-sets of
    size at most 4 and L at most 3, keyed by name."""
    eff = {
        "trivial": trivial_effectful(),
        "stateful-L2": premult_to_effectful(stateful2(2)),
        "stateful-L3": premult_to_effectful(stateful2(3)),
        "stateful-AB-L2": premult_to_effectful(stateful_premulticat(2, {"A": 1, "B": 1}, 2)),
        "lowered-frag2-L1": lowered_effectful(clone_to_multicat(set_clone_fragment([2], 1))),
        "lowered-chain-L2": lowered_effectful(discrete_multicat(fixture_categories()["chain"], 2)),
    }
    out = {f"eff:{k}": v for k, v in eff.items()}
    out.update({f"enr:{k}": to_enriched(v).materialized() for k, v in eff.items()})
    return out


# mutations ------------------------------------------------------------------

@dataclass
class Mutation:
    """A single-entry corruption of a law-clean structure. ``build`` returns
    the mutated structure, ``check`` its report, ``laws`` the law family
    (name to evaluator) used to replay a witness, or None."""

    name: str
    build: Callable
    check: Callable[[object], Report]
    expect: str
    laws: dict | None = None


def _frag_clone() -> Clone:
    return set_clone_fragment([2], 2).materialized()


def _mut_clone_sub() -> Clone:
    c = _frag_clone()
    sub = dict(c.sub)
    pr = c.pr(("S0",), 1)
    u = "S0->S0|01"
    sub[(pr, (u,))] = "S0->S0|10"
    return Clone(c.table, c.projections, sub)


def _mut_clone_projection() -> Clone:
    c = _frag_clone()
    prs = dict(c.projections)
    prs[(("S0", "S0"), 1)] = prs[(("S0", "S0"), 2)]
    return Clone(c.table, prs, c.sub)


def _frag_multicat() -> Multicat:
    return clone_to_multicat(set_clone_fragment([2], 2)).materialized()


def _mut_multicat_id() -> Multicat:
    m = _frag_multicat()
    return Multicat(m.table, {"S0": "S0->S0|10"}, m.sub)


def _mut_multicat_sub() -> Multicat:
    m = _frag_multicat()
    sub = dict(m.sub)
    sub[("S0->S0|01", ("S0->S0|00",))] = "S0->S0|11"
    return Multicat(m.table, m.ids, sub)


def _mut_premult_sub1() -> Premulticat:
    p = stateful2(3)
    sub1 = dict(p.sub1)
    key = ("A,A->A|10", 1, "w1")
    others = [t for t in p.table.hom(("A", "A"), "A") if t != sub1[key]]
    sub1[key] = others[0]
    return Premulticat(p.table, p.ids, sub1)


def _mut_premult_id() -> Premulticat:
    p = stateful2(2)
    return Premulticat(p.table, {"A": "flip"}, p.sub1)


def _mut_clone_morphism():
    c = _frag_clone()
    f = identity_morphism(c)
    f.term_map[c.pr(("S0", "S0"), 1)] = c.pr(("S0", "S0"), 2)
    return f


def _mut_clone_transformation():
    c = _frag_clone()
    f = identity_morphism(c)
    return CloneTransformation(f, f, {"S0": "S0->S0|10"})


def _mut_effectful():
    e = premult_to_effectful(stateful2(2))
    J = dict(e.J)
    J["id"] = "w1"
    e.J = J
    return e


def _mut_enriched_esub():
    d = g_of_stateful(2)
    esub = dict(d.esub)
    t = "A,A->A|10"
    key = (1, t, ("id", "id"))
    others = [x for x in d.homs1.hom(("A", "A"), "A") if x != esub[key]]
    esub[key] = others[0]
    return EnrichedMulticat(d.objects, d.homs0, d.homs1, d.bar, d.ids0, d.psub, esub)


def _mut_enriched_morphism():
    d = g_of_stateful(2)
    f = identity_enriched_morphism(d)
    f.f1 = dict(f.f1)
    f.f1["id"] = "flip"
    return f


def _mut_duoidal():
    pool = arrow_pool()

    def bad_zeta(a, b, c, d):
        sq = interchange(a, b, c, d)
        if all(o.sizes == (2, 1) for o in (a, b, c, d)):
            els = sq.src.level0.elements
            table = {x: sq.f0(x) for x in els}
            table[els[0]], table[els[1]] = table[els[1]], table[els[0]]
            return Square(sq.src, sq.dst, FinMap(sq.src.level0, sq.dst.level0, table), sq.f1)
        return sq
    return pool[:2], bad_zeta


def mutation_catalog(config: CheckConfig | None = None) -> list[Mutation]:
    cfg = config or CheckConfig(max_instances=20_000)
    return [
        Mutation("clone-sub-entry", _mut_clone_sub, lambda x: validate_clone(x, cfg), "left-unit", CLONE_LAWS),
        Mutation("clone-projection", _mut_clone_projection, lambda x: validate_clone(x, cfg), "right-unit",
                 CLONE_LAWS),
        Mutation("multicat-id", _mut_multicat_id, lambda x: validate_multicat(x, cfg), "left-unit",
                 MULTICAT_LAWS),
        Mutation("multicat-sub-entry", _mut_multicat_sub, lambda x: validate_multicat(x, cfg), "left-unit",
                 MULTICAT_LAWS),
        Mutation("premulticat-sub1-entry", _mut_premult_sub1, lambda x: validate_premulticat(x, cfg), "assoc",
                 PREMULT_LAWS),
        Mutation("premulticat-id", _mut_premult_id, lambda x: validate_premulticat(x, cfg), "left-unit",
                 PREMULT_LAWS),
        Mutation("clone-morphism-projection", _mut_clone_morphism, lambda x: validate_clone_morphism(x, cfg),
                 "preserves-projections"),
        Mutation("clone-transformation-component", _mut_clone_transformation,
                 lambda x: validate_clone_transformation(x, cfg), "naturality"),
        Mutation("effectful-J-noncentral", _mut_effectful, lambda x: validate_effectful(x, cfg), "J-central"),
        Mutation("enriched-esub-entry", _mut_enriched_esub, lambda x: validate_enriched(x, cfg), "coherence-b",
                 ENRICHED_LAWS),
        Mutation("enriched-morphism-coh", _mut_enriched_morphism, lambda x: validate_enriched_morphism(x, cfg),
                 "coh-eq"),
        Mutation("duoidal-zeta", _mut_duoidal, lambda x: check_duoidal(x[0], zeta=x[1]), "zeta=zeta'"),
    ]
