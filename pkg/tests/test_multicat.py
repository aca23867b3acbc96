import itertools

from hypothesis import given, strategies as st

from multiarity.category import validate_category
from multiarity.clone import fragment_function, set_clone_fragment
from multiarity.fixtures import _mut_multicat_id, _mut_multicat_sub, fixture_categories, projection_clone
from multiarity.multicat import (MulticatTransformation, clone_to_multicat, compose_multicat_transformations,
                                 discrete_multicat, identity_multicat_morphism,
                                 identity_multicat_transformation, lower, multicat_morphisms,
                                 multicat_transformations_between, validate_multicat,
                                 validate_multicat_morphism, validate_multicat_transformation)
from multiarity.premulticat import central_terms, validate_premulticat

FRAG = set_clone_fragment([2], 2)
M = clone_to_multicat(FRAG)


def test_discrete_multicats_are_valid(cfg):
    for name, cat in fixture_categories().items():
        for L in (1, 2):
            assert validate_multicat(discrete_multicat(cat, L), cfg).ok, name


def test_discrete_examples():
    point = discrete_multicat(fixture_categories()["point"], 2)
    assert len(point.table.hom(("A",), "A")) == 1
    assert point.table.hom(("A", "A"), "A") == ()
    arrow = discrete_multicat(fixture_categories()["arrow"], 2)
    assert arrow.table.hom(("A", "A"), "B") == ()


def test_discrete_unary_part_is_the_category():
    for cat in fixture_categories().values():
        back = discrete_multicat(cat, 2).unary_category()
        assert back.objects == cat.objects
        assert {k: tuple(v) for k, v in back.homs.items() if v} == {k: tuple(v) for k, v in cat.homs.items() if v}
        assert back.ids == cat.ids
        assert back.comp == cat.comp


def test_clone_to_multicat_valid(cfg):
    assert validate_multicat(clone_to_multicat(projection_clone(("X", "Y"), 2)), cfg).status == "pass"
    assert validate_multicat(clone_to_multicat(set_clone_fragment([2], 1)), cfg).status == "pass"
    assert validate_multicat(M, cfg).violation_count == 0


def test_identity_is_first_projection():
    assert M.ids["S0"] == FRAG.pr(("S0",), 1)


def test_projection_multicat_selects_coordinates():
    c = projection_clone(("X",), 2)
    m = clone_to_multicat(c)
    pr2 = c.pr(("X", "X"), 2)
    idx = c.pr(("X",), 1)
    # pr2<id, id> over the concatenated context is the second projection
    assert m.subst(pr2, [idx, idx]) == pr2


@given(st.sampled_from(FRAG.table.hom(("S0",), "S0")), st.sampled_from(FRAG.table.hom(("S0",), "S0")),
       st.sampled_from(FRAG.table.hom(("S0", "S0"), "S0")))
def test_fragment_sub_is_product_composition(u, v, t):
    tv = fragment_function(FRAG, t)[2]
    uv, vv = fragment_function(FRAG, u)[2], fragment_function(FRAG, v)[2]
    r = fragment_function(FRAG, M.subst(t, [u, v]))[2]
    # t o (u x v) on the points (x, y) of 2 x 2
    expect = tuple(tv[2 * uv[x] + vv[y]] for x, y in itertools.product(range(2), range(2)))
    assert r == expect


def test_mutations_fail_left_unit(cfg):
    assert "left-unit" in validate_multicat(_mut_multicat_id(), cfg).laws_failed()
    assert "left-unit" in validate_multicat(_mut_multicat_sub(), cfg).laws_failed()


def test_lowered_multicats_are_all_central(cfg):
    for m in (M, clone_to_multicat(projection_clone(("X", "Y"), 2)),
              discrete_multicat(fixture_categories()["chain"], 2)):
        p = lower(m)
        assert validate_premulticat(p, cfg).violation_count == 0
        assert central_terms(p) == set(p.table.terms)


def test_morphisms_and_transformations(cfg):
    src = discrete_multicat(fixture_categories()["idempotent"], 1)
    dst = clone_to_multicat(set_clone_fragment([2], 1)).materialized()
    ms = multicat_morphisms(src, dst)
    assert len(ms) == 3
    for f in ms:
        assert validate_multicat_morphism(f, cfg).ok
        assert validate_multicat_transformation(identity_multicat_transformation(f), cfg).ok
    for f, g, h in itertools.product(ms, repeat=3):
        for eta in multicat_transformations_between(f, g, cfg):
            for eps in multicat_transformations_between(g, h, cfg):
                assert validate_multicat_transformation(compose_multicat_transformations(eps, eta), cfg).ok


def test_transformation_mutation(cfg):
    m = clone_to_multicat(set_clone_fragment([2], 1)).materialized()
    f = identity_multicat_morphism(m)
    assert validate_multicat_morphism(f, cfg).ok
    bad = MulticatTransformation(f, f, {"S0": "S0->S0|00"})
    assert "naturality" in validate_multicat_transformation(bad, cfg).laws_failed()


def test_unary_part_of_clone_multicat_is_category():
    assert validate_category(M.materialized().unary_category()).ok
