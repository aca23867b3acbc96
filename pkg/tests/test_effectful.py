import pytest

from multiarity.clone import set_clone_fragment
from multiarity.effectful import (EffectfulMorphism, EffectfulMulticat, effectful_equal,
                                  identity_effectful_morphism, lowered_effectful, premult_to_effectful,
                                  validate_effectful, validate_effectful_morphism)
from multiarity.errors import ShapeError
from multiarity.fixtures import _mut_effectful, fixture_categories, stateful2, stateful_fixtures
from multiarity.multicat import MulticatMorphism, clone_to_multicat, discrete_multicat
from multiarity.premulticat import PremultMorphism, is_central, stateful_premulticat

from test_premulticat import transparent


@pytest.mark.parametrize("p", [stateful2(2), stateful2(3), stateful_fixtures()["S2-A1B1-L2"]])
def test_centre_based_effectful_is_valid(p, big_cfg):
    assert validate_effectful(premult_to_effectful(p), big_cfg).status == "pass"


def test_lowered_effectful_is_valid(cfg):
    for m in (clone_to_multicat(set_clone_fragment([2], 1)), discrete_multicat(fixture_categories()["chain"], 2)):
        e = lowered_effectful(m)
        rep = validate_effectful(e, cfg)
        assert rep.status == "pass"
        assert rep.data["central_outside_J"] == []


def test_noncentral_J_image_is_caught(cfg):
    rep = validate_effectful(_mut_effectful(), cfg)
    assert "J-central" in rep.laws_failed()
    w = next(e.witness for e in rep.violations if e.law == "J-central")
    assert w["pure"] == "id" and w["u"] == "w1"


def test_pure_part_is_state_transparent_below_bound():
    p = stateful_premulticat(2, {"A": 1, "B": 1}, 2)
    e = premult_to_effectful(p)
    unary = {t for t in p.table.terms if len(p.table.ctx(t)) == 1}
    assert {t for t in e.pure.table.terms if t in unary} == {t for t in unary if transparent(p, t)}


def test_lowered_multicat_pure_equals_eff():
    m = clone_to_multicat(set_clone_fragment([2], 1))
    e = premult_to_effectful(lowered_effectful(m).eff)
    assert set(e.pure.table.terms) == set(e.eff.table.terms)
    assert all(is_central(e.eff, u)[0] for u in e.J.values())


def test_premult_to_effectful_is_idempotent_on_eff():
    e = premult_to_effectful(stateful2(2))
    again = premult_to_effectful(e.eff)
    assert effectful_equal(e, again)[0]


def test_object_mismatch_is_shape_error():
    e = premult_to_effectful(stateful2(2))
    other = premult_to_effectful(stateful_premulticat(2, {"B": 1}, 2))
    with pytest.raises(ShapeError):
        validate_effectful(EffectfulMulticat(e.pure, other.eff, e.J))


def test_identity_effectful_morphism(cfg):
    e = premult_to_effectful(stateful2(2))
    assert validate_effectful_morphism(identity_effectful_morphism(e), cfg).status == "pass"


def test_broken_square_names_the_hom(cfg):
    e = premult_to_effectful(stateful2(2))
    f = identity_effectful_morphism(e)
    f1 = dict(f.f1.term_map)
    t = "A,A->A|01"
    assert t in e.pure.table.terms
    f1[t] = "A,A->A|10"
    bad = EffectfulMorphism(e, e, f.f0, PremultMorphism(e.eff, e.eff, f.f1.obj_map, f1))
    rep = validate_effectful_morphism(bad, cfg)
    assert "square" in rep.laws_failed()
    w = next(x.witness for x in rep.violations if x.law == "square")
    assert w["hom"] == "A,A->A"


def test_effectful_equal_reports_component():
    a = premult_to_effectful(stateful2(2))
    b = premult_to_effectful(stateful2(2))
    b.J = dict(b.J, id="flip")
    ok, diff = effectful_equal(a, b)
    assert not ok and diff["component"] == "J"
