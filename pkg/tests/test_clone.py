import itertools

import pytest
from hypothesis import given, strategies as st

from multiarity.category import validate_category
from multiarity.clone import (Clone, CloneMorphism, CloneTransformation, clone_algebras,
                              compose_clone_transformations, fragment_function, identity_clone_transformation,
                              identity_morphism, set_clone_fragment, transformations_between, validate_clone,
                              validate_clone_morphism, validate_clone_transformation)
from multiarity.errors import CapacityError, ShapeError
from multiarity.fixtures import (_mut_clone_morphism, _mut_clone_projection, _mut_clone_sub,
                                 _mut_clone_transformation, fixture_categories, projection_clone)
from multiarity.freecons import cartesian_clone, cartesian_unit, free_cartesian, free_clone
from multiarity.tables import MultiHomTable


def idempotent_clone():
    # free clone on one object with one idempotent arrow, truncated at L = 1
    return free_clone(fixture_categories()["idempotent"], 1)


def test_projection_clone_is_valid(cfg):
    for objs, L in [(("X",), 1), (("X",), 3), (("X", "Y"), 2)]:
        assert validate_clone(projection_clone(objs, L), cfg).status == "pass"


def test_fragment_sizes():
    c = set_clone_fragment([2], 2)
    assert len(c.table.hom(("S0",), "S0")) == 4
    assert len(c.table.hom(("S0", "S0"), "S0")) == 16
    one = set_clone_fragment([1], 2)
    assert all(len(v) == 1 for v in one.table.homs.values())
    assert validate_clone(one).status == "pass"


def test_fragment_guard():
    with pytest.raises(CapacityError):
        set_clone_fragment([3], 2)


def test_left_unit_instance():
    c = set_clone_fragment([2], 2)
    u, v = "S0,S0->S0|0110", "S0,S0->S0|0001"
    assert c.subst(c.pr(("S0", "S0"), 1), [u, v]) == u
    assert c.subst(c.pr(("S0", "S0"), 2), [u, v]) == v


def test_fragment_terms_are_functions():
    c = set_clone_fragment([2], 2)
    ctx, b, values = fragment_function(c, "S0,S0->S0|0110")
    assert ctx == ("S0", "S0") and b == "S0" and values == (0, 1, 1, 0)


@pytest.mark.parametrize("carriers,L", [([2], 1), ([3], 1), ([1], 3), ([1, 1, 1], 2), ([1, 2], 1)])
def test_fragment_is_valid_exhaustively(carriers, L, big_cfg):
    assert validate_clone(set_clone_fragment(carriers, L), big_cfg).status == "pass"


@pytest.mark.parametrize("carriers,L", [([2], 2), ([2], 3), ([1, 2], 2)])
def test_fragment_is_valid_sampled(carriers, L, cfg):
    rep = validate_clone(set_clone_fragment(carriers, L), cfg)
    assert rep.violation_count == 0


def test_corrupted_sub_entry_is_named(cfg):
    rep = validate_clone(_mut_clone_sub(), cfg)
    assert "left-unit" in rep.laws_failed()
    w = next(e.witness for e in rep.violations if e.law == "left-unit")
    assert w["lhs"] == "S0->S0|10" and w["rhs"] == "S0->S0|01"


def test_corrupted_projection(cfg):
    assert not validate_clone(_mut_clone_projection(), cfg).ok


def test_bad_shape():
    T = MultiHomTable(("X",), 1, {(("X",), "X"): ["p"]})
    with pytest.raises(ShapeError):
        Clone(T, {(("X",), 1): "nope"}, {})


def test_unary_restriction_is_a_category():
    for carriers, L in [([2], 2), ([1, 2], 2)]:
        assert validate_category(set_clone_fragment(carriers, L).materialized().unary_category()).ok
    assert validate_category(projection_clone(("X", "Y"), 2).unary_category()).ok


# morphisms ------------------------------------------------------------------

def test_identity_morphism(cfg):
    c = set_clone_fragment([2], 2)
    assert validate_clone_morphism(identity_morphism(c), cfg).ok


def test_dropping_a_projection_is_caught(cfg):
    rep = validate_clone_morphism(_mut_clone_morphism(), cfg)
    assert "preserves-projections" in rep.laws_failed()


def test_morphism_object_map_outside_target():
    c = projection_clone(("X",), 1)
    f = CloneMorphism(c, c, {"X": "Z"}, {t: t for t in c.table.terms})
    with pytest.raises(ShapeError):
        validate_clone_morphism(f)


def test_unit_into_clone_of_free_cartesian(cfg):
    for cat in fixture_categories().values():
        lc = free_cartesian(free_clone(cat, 2).materialized(), 2)
        target = cartesian_clone(lc)
        assert validate_clone(target, cfg).status == "pass"
        eta = cartesian_unit(lc, target)
        assert validate_clone_morphism(eta, cfg).status == "pass"
        # the unit is a bijection on terms (it is the identity up to naming)
        assert len(set(eta.term_map.values())) == len(target.table.terms) == len(lc.clone.table.terms)


# algebras -------------------------------------------------------------------

def idempotents_on(n):
    """Brute force: all f: n -> n with f(f(x)) = f(x)."""
    return [f for f in itertools.product(range(n), repeat=n) if all(f[f[x]] == f[x] for x in range(n))]


def test_projection_clone_algebras():
    frag = set_clone_fragment([2], 2)
    algs = clone_algebras(projection_clone(("X",), 2), frag.materialized())
    assert len(algs) == 1
    assert all(v in frag.projections.values() for v in algs[0].term_map.values())


def test_idempotent_algebras_match_oracle():
    frag = set_clone_fragment([2], 1).materialized()
    algs = clone_algebras(idempotent_clone(), frag)
    assert len(algs) == len(idempotents_on(2)) == 3
    e = "A->A|1:e"
    images = sorted(fragment_function(frag, a.term_map[e])[2] for a in algs)
    assert images == sorted(idempotents_on(2))


def test_empty_clone_has_one_algebra():
    empty = Clone(MultiHomTable((), 1, {}), {}, {})
    assert validate_clone(empty).ok
    assert len(clone_algebras(empty, set_clone_fragment([2], 1).materialized())) == 1


# transformations ------------------------------------------------------------

def test_identity_transformation_valid(cfg):
    f = identity_morphism(set_clone_fragment([2], 2).materialized())
    assert validate_clone_transformation(identity_clone_transformation(f), cfg).ok


def test_swapped_component_fails(cfg):
    assert "naturality" in validate_clone_transformation(_mut_clone_transformation(), cfg).laws_failed()


def test_transformations_between_idempotent_algebras_match_oracle(cfg):
    frag = set_clone_fragment([2], 1).materialized()
    algs = clone_algebras(idempotent_clone(), frag)
    e = "A->A|1:e"
    for f, g in itertools.product(algs, algs):
        ff = fragment_function(frag, f.term_map[e])[2]
        gg = fragment_function(frag, g.term_map[e])[2]
        oracle = [h for h in itertools.product(range(2), repeat=2)
                  if all(h[ff[x]] == gg[h[x]] for x in range(2))]
        found = transformations_between(f, g, cfg)
        assert sorted(fragment_function(frag, t.components["A"])[2] for t in found) == sorted(oracle)


def test_composite_transformation_is_valid(cfg):
    frag = set_clone_fragment([2], 1).materialized()
    algs = clone_algebras(idempotent_clone(), frag)
    for f, g, h in itertools.product(algs, repeat=3):
        for eta in transformations_between(f, g, cfg):
            for eps in transformations_between(g, h, cfg):
                comp = compose_clone_transformations(eps, eta)
                assert validate_clone_transformation(comp, cfg).ok


def test_non_composable_transformations():
    frag = set_clone_fragment([2], 1).materialized()
    algs = clone_algebras(idempotent_clone(), frag)
    a = identity_clone_transformation(algs[0])
    b = identity_clone_transformation(algs[1])
    with pytest.raises(ShapeError):
        compose_clone_transformations(a, b)


@given(st.sampled_from(["S0->S0|00", "S0->S0|01", "S0->S0|10", "S0->S0|11"]),
       st.lists(st.sampled_from(["S0,S0->S0|0110", "S0,S0->S0|0001", "S0,S0->S0|0111", "S0,S0->S0|1000"]),
                min_size=1, max_size=1))
def test_fragment_sub_is_composition(t, us):
    c = set_clone_fragment([2], 2)
    r = c.subst(t, us)
    tv = fragment_function(c, t)[2]
    uv = fragment_function(c, us[0])[2]
    assert fragment_function(c, r)[2] == tuple(tv[x] for x in uv)
