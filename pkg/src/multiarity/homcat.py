"""Category laws for a hom-category of morphisms and transformations,
shared by the clone, multicategory, premulticategory and enriched layers."""

from __future__ import annotations

from typing import Callable, Sequence

from .report import DEFAULT, CheckConfig, Report, run_law


def hom_category_report(name: str, morphisms: Sequence, between: Callable, identity: Callable,
                        compose: Callable, validate: Callable, config: CheckConfig = DEFAULT) -> Report:
    """``between(f, g)`` lists the transformations f => g; ``compose(eps, eta)``
    is eps after eta. Transformations compare by their components."""
    rep = Report(name)
    n = len(morphisms)
    homs = {(i, j): between(morphisms[i], morphisms[j]) for i in range(n) for j in range(n)}
    ids = [identity(f) for f in morphisms]
    rep.data["morphisms"] = n
    rep.data["transformations"] = sum(len(v) for v in homs.values())

    def comps(x):
        return x.components

    for i, f in enumerate(morphisms):
        r = validate(ids[i])
        if r.ok:
            rep.passed("identity-valid")
        else:
            rep.fail("identity-valid", {"morphism": i, "laws": sorted(r.laws_failed())})

    def units(pick):
        for (i, j), ts in pick(list(homs.items())):
            for k in pick(range(len(ts))):
                yield {"src": i, "dst": j, "eta": k}

    def ev_left(w):
        eta = homs[(w["src"], w["dst"])][w["eta"]]
        return comps(compose(ids[w["dst"]], eta)), comps(eta)

    def ev_right(w):
        eta = homs[(w["src"], w["dst"])][w["eta"]]
        return comps(compose(eta, ids[w["src"]])), comps(eta)

    def pairs(pick):
        for i in pick(range(n)):
            for j in pick(range(n)):
                for k in pick(range(n)):
                    for a in pick(range(len(homs[(i, j)]))):
                        for b in pick(range(len(homs[(j, k)]))):
                            yield {"f": i, "g": j, "h": k, "eta": a, "eps": b}

    def ev_closed(w):
        eta = homs[(w["f"], w["g"])][w["eta"]]
        eps = homs[(w["g"], w["h"])][w["eps"]]
        c = compose(eps, eta)
        return validate(c).ok, True

    def triples(pick):
        for w in pairs(pick):
            h = w["h"]
            for m in pick(range(n)):
                for c in pick(range(len(homs[(h, m)]))):
                    yield dict(w, k=m, kappa=c)

    def ev_assoc(w):
        eta = homs[(w["f"], w["g"])][w["eta"]]
        eps = homs[(w["g"], w["h"])][w["eps"]]
        kap = homs[(w["h"], w["k"])][w["kappa"]]
        return (comps(compose(kap, compose(eps, eta))), comps(compose(compose(kap, eps), eta)))

    run_law(rep, "left-unit", units, ev_left, config)
    run_law(rep, "right-unit", units, ev_right, config)
    run_law(rep, "composite-valid", pairs, ev_closed, config)
    run_law(rep, "assoc", triples, ev_assoc, config)
    return rep
