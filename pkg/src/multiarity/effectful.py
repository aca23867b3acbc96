"""Effectful multicategories: a pure multicategory, an effectful
premulticategory and an identity-on-objects inclusion J whose images
are central."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ShapeError
from .multicat import (Multicat, MulticatMorphism, identity_multicat_morphism, lower,
                       validate_multicat, validate_multicat_morphism)
from .premulticat import (Premulticat, PremultMorphism, central_terms, centre, identity_premult_morphism,
                          is_central, isub, validate_premult_morphism, validate_premulticat)
from .report import DEFAULT, CheckConfig, Report, run_law
from .tables import ComputedTable, hom_key, tables_equal


@dataclass
class EffectfulMulticat:
    pure: Multicat
    eff: Premulticat
    J: dict  # pure term -> eff term
    kind: str = field(default="effectful", init=False)

    @property
    def objects(self):
        return self.pure.objects

    def j_morphism(self) -> PremultMorphism:
        """J seen as a premulticategory morphism out of the lowered pure part."""
        return PremultMorphism(lower(self.pure), self.eff, {a: a for a in self.objects}, self.J)


def validate_effectful(e: EffectfulMulticat, config: CheckConfig = DEFAULT) -> Report:
    if tuple(e.pure.objects) != tuple(e.eff.objects):
        raise ShapeError("pure and effectful parts have different objects")
    rep = Report("effectful multicat")
    rep.merge(validate_multicat(e.pure, config), "pure/")
    rep.merge(validate_premulticat(e.eff, config), "eff/")
    rep.merge(validate_premult_morphism(e.j_morphism(), config), "J/")
    images = set()
    for t in e.pure.table.terms:
        u = e.J.get(t)
        if u is None:
            continue
        images.add(u)
        ok, w = is_central(e.eff, u)
        if ok:
            rep.passed("J-central")
        else:
            rep.fail("J-central", dict(w, pure=t))
    extra = sorted(central_terms(e.eff) - images)
    rep.notes.append(f"{len(extra)} central effectful terms lie outside the image of J")
    rep.data["central_outside_J"] = extra
    return rep


def centre_multicat(p: Premulticat, central: set[str] | None = None) -> Multicat:
    """The centre as a multicategory; simultaneous substitution is the
    left-most-first iterated one."""
    z = centre(p, central)
    m = Multicat(z.table, z.ids, None, check=False)

    def compute(key):
        t, us = key
        T = z.table
        if t not in T or any(u not in T for u in us) or len(us) != len(T.ctx(t)):
            return None
        if sum(len(T.ctx(u)) for u in us) > T.max_context:
            return None
        if any(T.target(u) != a for u, a in zip(us, T.ctx(t))):
            return None
        return isub(p, t, list(us), 1)

    m.sub = ComputedTable(compute, m.keys)
    return m


def premult_to_effectful(p: Premulticat, central: set[str] | None = None) -> EffectfulMulticat:
    pure = centre_multicat(p, central)
    return EffectfulMulticat(pure, p, {t: t for t in pure.table.terms})


def lowered_effectful(m: Multicat) -> EffectfulMulticat:
    """The trivially effectful structure with eff = lowered pure part."""
    return EffectfulMulticat(m, lower(m), {t: t for t in m.table.terms})


def effectful_equal(a: EffectfulMulticat, b: EffectfulMulticat) -> tuple[bool, dict | None]:
    """Exact equality of every table, term names included."""
    checks = [
        ("pure.homs", a.pure.table == b.pure.table),
        ("eff.homs", a.eff.table == b.eff.table),
        ("pure.ids", a.pure.ids == b.pure.ids),
        ("eff.ids", a.eff.ids == b.eff.ids),
        ("J", dict(a.J) == dict(b.J)),
    ]
    for name, ok in checks:
        if not ok:
            return False, {"component": name}
    for name, x, y in (("pure.sub", a.pure.sub, b.pure.sub), ("eff.sub1", a.eff.sub1, b.eff.sub1)):
        ok, diff = tables_equal(x, y)
        if not ok:
            return False, dict(diff or {}, component=name)
    return True, None


@dataclass
class EffectfulMorphism:
    src: EffectfulMulticat
    dst: EffectfulMulticat
    f0: MulticatMorphism
    f1: PremultMorphism


def identity_effectful_morphism(e: EffectfulMulticat) -> EffectfulMorphism:
    return EffectfulMorphism(e, e, identity_multicat_morphism(e.pure), identity_premult_morphism(e.eff))


def validate_effectful_morphism(m: EffectfulMorphism, config: CheckConfig = DEFAULT) -> Report:
    rep = Report("effectful morphism")
    rep.merge(validate_multicat_morphism(m.f0, config), "f0/")
    rep.merge(validate_premult_morphism(m.f1, config), "f1/")
    if m.f0.obj_map != m.f1.obj_map:
        rep.fail("object-maps-agree", {"f0": m.f0.obj_map, "f1": m.f1.obj_map})

    def inst(pick):
        for t in pick(m.src.pure.table.terms):
            yield {"t": t, "hom": _hom_of(m.src.pure, t)}

    def ev(w):
        t = w["t"]
        return m.dst.J.get(m.f0.term_map.get(t)), m.f1.term_map.get(m.src.J.get(t))

    run_law(rep, "square", inst, ev, config)
    return rep


def _hom_of(m: Multicat, t: str) -> str:
    ctx, b = m.table.type_of(t)
    return hom_key(ctx, b)
