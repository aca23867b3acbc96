import itertools

import pytest

from multiarity.effectful import (EffectfulMorphism, effectful_equal, identity_effectful_morphism,
                                  premult_to_effectful, validate_effectful, validate_effectful_morphism)
from multiarity.enriched import (LAWS, EnrichedMulticat, EnrichedTransformation, algebra_category,
                                 compose_enriched_transformations, enriched_equal, enriched_morphisms,
                                 enriched_of, enriched_transformations_between, identity_enriched_morphism,
                                 identity_enriched_transformation, roundtrip_check, to_effectful, to_enriched,
                                 validate_enriched, validate_enriched_morphism,
                                 validate_enriched_transformation)
from multiarity.errors import ShapeError
from multiarity.fixtures import (_mut_enriched_esub, _mut_enriched_morphism, g_of_stateful, roundtrip_fixtures,
                                 stateful2, trivial_effectful)
from multiarity.multicat import MulticatMorphism
from multiarity.premulticat import (PremultMorphism, derived_lemma_suite, premult_transformations_between,
                                    stateful_premulticat)
from multiarity.tables import MultiHomTable, materialize

FIXTURES = roundtrip_fixtures()
G2 = g_of_stateful(2)
AB = to_enriched(premult_to_effectful(stateful_premulticat(2, {"A": 1, "B": 1}, 2))).materialized()


def rename_level1(d: EnrichedMulticat, names: dict) -> EnrichedMulticat:
    r = lambda t: names.get(t, t)  # noqa: E731
    H1 = d.homs1
    homs1 = MultiHomTable(H1.objects, H1.max_context, {k: [r(t) for t in v] for k, v in H1.homs.items()})
    esub = {(j, r(t), tuple(u if i != j - 1 else r(u) for i, u in enumerate(us))): r(v)
            for (j, t, us), v in materialize(d.esub).items()}
    return EnrichedMulticat(d.objects, d.homs0, homs1, {t: r(u) for t, u in d.bar.items()}, d.ids0,
                            materialize(d.psub), esub)


def test_trivial_structure():
    d = to_enriched(trivial_effectful()).materialized()
    assert len(d.homs0.terms) == len(d.homs1.terms) == 1
    assert validate_enriched(d).status == "pass"
    assert effectful_equal(to_effectful(d), trivial_effectful())[0]


@pytest.mark.parametrize("name", sorted(k for k in FIXTURES if k.startswith("enr:")))
def test_enriched_fixtures_valid(name, big_cfg):
    assert validate_enriched(FIXTURES[name], big_cfg).status == "pass"


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_round_trips_exact(name):
    assert roundtrip_check(FIXTURES[name]).status == "pass"


def test_F_of_G_image_is_valid_effectful(big_cfg):
    e = to_effectful(AB)
    rep = validate_effectful(e, big_cfg)
    assert rep.status == "pass"
    assert rep.stats["J-central"].checked == len(AB.homs0.terms)


def test_lowered_G_has_bijective_bar():
    d = FIXTURES["enr:lowered-frag2-L1"]
    assert sorted(d.bar.values()) == sorted(d.homs1.terms)
    assert d.homs0.homs == d.homs1.homs


def test_coherence_b_mutation():
    rep = validate_enriched(_mut_enriched_esub())
    assert "coherence-b" in rep.laws_failed()
    d = _mut_enriched_esub()
    for e in rep.violations:
        w = {k: v for k, v in e.witness.items() if k not in ("lhs", "rhs")}
        lhs, rhs = LAWS[e.law](d, w)
        assert lhs != rhs


def test_renamed_terms_compare_unequal_but_round_trip():
    names = {"flip": "w0", "w0": "flip"}
    d = rename_level1(G2, names)
    assert validate_enriched(d).status == "pass"
    assert roundtrip_check(d).status == "pass"
    ok, diff = enriched_equal(d, G2)
    assert not ok and diff["component"] in ("homs1", "bar")


def test_roundtrip_rejects_other_types():
    with pytest.raises(ShapeError):
        roundtrip_check(stateful2(2))


def test_derived_lemmas_on_G_eff(big_cfg):
    e = to_effectful(G2)
    assert derived_lemma_suite(e.eff, config=big_cfg).violation_count == 0


# morphisms ------------------------------------------------------------------

def test_identity_enriched_morphism(cfg):
    assert validate_enriched_morphism(identity_enriched_morphism(AB), cfg).status == "pass"


def test_coh_eq_mutation(cfg):
    assert "coh-eq" in validate_enriched_morphism(_mut_enriched_morphism(), cfg).laws_failed()


def test_G_of_effectful_morphisms(cfg):
    e = premult_to_effectful(stateful2(2))
    ms = enriched_morphisms(G2, G2)
    assert len(ms) == 10
    for f in ms:
        eff = EffectfulMorphism(e, e, MulticatMorphism(e.pure, e.pure, f.obj_map, f.f0),
                                PremultMorphism(e.eff, e.eff, f.obj_map, f.f1))
        assert validate_effectful_morphism(eff, cfg).status == "pass"
        back = enriched_of(eff)
        assert (back.f0, back.f1) == (f.f0, f.f1)
        assert validate_enriched_morphism(back, cfg).status == "pass"
    assert validate_enriched_morphism(enriched_of(identity_effectful_morphism(e)), cfg).ok


# transformations ------------------------------------------------------------

def test_identity_transformation(cfg):
    f = identity_enriched_morphism(AB)
    assert validate_enriched_transformation(identity_enriched_transformation(f), cfg).ok


def test_component_at_wrong_object(cfg):
    f = identity_enriched_morphism(AB)
    comps = {"A": AB.ids0["A"], "B": AB.ids0["A"]}
    rep = validate_enriched_transformation(EnrichedTransformation(f, f, comps), cfg)
    assert "component-typed" in rep.laws_failed()


def test_composites_valid(cfg):
    ms = enriched_morphisms(G2, G2)
    for f, g, h in itertools.product(ms, repeat=3):
        for eta in enriched_transformations_between(f, g, cfg):
            for eps in enriched_transformations_between(g, h, cfg):
                assert validate_enriched_transformation(compose_enriched_transformations(eps, eta), cfg).ok


def test_transformations_match_premulticat_transformations(cfg):
    """Enriched transformations between G-images correspond to premulticat
    transformations of the effectful parts, via bar."""
    e = to_effectful(G2)
    ms = enriched_morphisms(G2, G2)
    for f, g in itertools.product(ms, repeat=2):
        enr = {tuple(G2.bar[c] for _, c in sorted(t.components.items()))
               for t in enriched_transformations_between(f, g, cfg)}
        pf = PremultMorphism(e.eff, e.eff, f.obj_map, f.f1)
        pg = PremultMorphism(e.eff, e.eff, g.obj_map, g.f1)
        pre = {tuple(c for _, c in sorted(t.components.items()))
               for t in premult_transformations_between(pf, pg, cfg)}
        assert enr == pre


def test_algebra_category_examples(cfg):
    triv = to_enriched(trivial_effectful(2)).materialized()
    rep = algebra_category(G2, triv, config=cfg)
    assert rep.data["morphisms"] == 1 and rep.status == "pass"
    point = to_enriched(trivial_effectful(1)).materialized()
    rep = algebra_category(point, AB, config=cfg)
    assert rep.data["morphisms"] == len(AB.objects) and rep.status == "pass"
    rep = algebra_category(G2, G2, config=cfg)
    assert rep.status == "pass" and rep.data["morphisms"] == 10
