import itertools

import pytest
from hypothesis import given, strategies as st

from multiarity.clone import set_clone_fragment
from multiarity.errors import CapacityError, InternalConsistencyError
from multiarity.fixtures import _mut_premult_id, _mut_premult_sub1, stateful2, stateful_fixtures
from multiarity.multicat import clone_to_multicat, lower
from multiarity.premulticat import (LAWS, Premulticat, PremultTransformation, central_terms, centre,
                                    compose_premult_transformations, derived_lemma_suite,
                                    identity_premult_morphism, identity_premult_transformation, is_central,
                                    isub, premult_morphisms, premult_transformations_between,
                                    stateful_premulticat, validate_premult_morphism,
                                    validate_premult_transformation, validate_premulticat)

P2 = stateful2(2)
P3 = stateful2(3)
# S2-A2-L1 has 256 unary terms, so its associativity instances (256^3) are sampled
SMALL = [k for k in sorted(stateful_fixtures()) if k != "S2-A2-L1"]


def transparent(p, t):
    """Oracle: t(x, s) = (g(x), s) for some g."""
    m = p.model
    S = m.state_size
    ctx, b, vals = m.decode[t]
    seen = {}
    for pt, v in zip(m.space(ctx, b).points, vals):
        c, s2 = divmod(v, S)
        if s2 != pt[-1] or seen.setdefault(pt[:-1], c) != c:
            return False
    return True


def test_stateful_hom_sizes():
    p = stateful_premulticat(2, {"A": 1, "B": 1}, 1)
    assert len(p.table.hom(("A",), "B")) == 4
    assert len(stateful_premulticat(2, {"A": 2}, 1).table.hom(("A",), "A")) == 4 ** 4


def test_stateful_guard():
    with pytest.raises(CapacityError):
        stateful_premulticat(2, {"A": 2}, 2)


@pytest.mark.parametrize("name", SMALL)
def test_stateful_fixtures_valid(name, big_cfg):
    rep = validate_premulticat(stateful_fixtures()[name], big_cfg)
    assert rep.status == "pass", rep.to_json()


def test_large_stateful_fixture_sampled(cfg):
    rep = validate_premulticat(stateful_fixtures()["S2-A2-L1"], cfg)
    assert rep.violation_count == 0
    assert rep.stats["assoc"].capped


def test_lowered_fragment_is_valid(cfg):
    assert validate_premulticat(lower(clone_to_multicat(set_clone_fragment([2], 2))), cfg).violation_count == 0


def test_corrupted_sub1_entry(cfg):
    rep = validate_premulticat(_mut_premult_sub1(), cfg)
    assert "assoc" in rep.laws_failed()
    w = next(e.witness for e in rep.violations if e.law == "assoc")
    assert {"t", "u", "v"} <= set(w)


def test_corrupted_identity(cfg):
    assert "left-unit" in validate_premulticat(_mut_premult_id(), cfg).laws_failed()


# centrality -------------------------------------------------------------------

def test_identity_is_central():
    for p in [P2, P3, *stateful_fixtures().values()]:
        for i in p.ids.values():
            assert is_central(p, i)[0]


def test_writes_do_not_commute():
    ok, w = is_central(P2, "w1")
    assert not ok
    assert w["u"] == "w1" and w["lhs"] != w["rhs"]
    # w0 and w1 disagree in both orders at the binary identity-like term
    t = "A,A->A|01"
    for u, v in (("w1", "w0"), ("w0", "w1")):
        lhs, rhs = LAWS["central"](P2, {"t": t, "u": u, "upos": 1, "v": v, "vpos": 2})
        assert lhs != rhs


def test_witness_replays():
    ok, w = is_central(P2, "w0")
    assert not ok
    lhs, rhs = LAWS["central"](P2, w)
    assert (lhs, rhs) == (w["lhs"], w["rhs"])


def test_one_state_means_everything_central():
    p = stateful_premulticat(1, {"A": 2}, 2)
    assert central_terms(p) == set(p.table.terms)


@pytest.mark.parametrize("p", [stateful_premulticat(2, {"A": 1}, 2), stateful_premulticat(2, {"A": 1}, 3),
                               stateful_premulticat(2, {"A": 1, "B": 1}, 2)])
def test_central_below_bound_means_state_transparent(p):
    L = p.table.max_context
    below = [t for t in p.table.terms if len(p.table.ctx(t)) < L]
    central = central_terms(p)
    assert {t for t in below if t in central} == {t for t in below if transparent(p, t)}


def test_maximal_arity_terms_are_vacuously_central():
    top = [t for t in P2.table.terms if len(P2.table.ctx(t)) == 2]
    assert all(is_central(P2, t)[0] for t in top)


def test_centre_of_lowered_multicat_is_everything(cfg):
    p = lower(clone_to_multicat(set_clone_fragment([2], 1)))
    z = centre(p)
    assert set(z.table.terms) == set(p.table.terms)


@pytest.mark.parametrize("p", [P2, P3, *(stateful_fixtures()[k] for k in SMALL)])
def test_centre_is_law_clean_and_central(p, big_cfg):
    z = centre(p)
    assert validate_premulticat(z, big_cfg).status == "pass"
    assert central_terms(z) == set(z.table.terms)


def test_centre_closure_failure_is_reported():
    # claiming a non-central term central breaks closure
    with pytest.raises(InternalConsistencyError):
        centre(P2, central={"id", "w1", "flip"})


# isub -------------------------------------------------------------------------

def test_isub_base_case():
    assert isub(P2, "A,A->A|01", ["w1"], 2) == P2.subst1("A,A->A|01", 2, "w1")


@given(st.sampled_from(P3.table.hom(("A", "A", "A"), "A")))
def test_isub_of_identities_is_identity(t):
    assert isub(P3, t, ["id", "id", "id"]) == t


def test_splitting_on_three_ary_instance():
    t = "A,A,A->A|01"
    us = ["w1", "flip", "w0"]
    direct = isub(P3, t, us)
    split = isub(P3, isub(P3, t, us[:1], 1), us[1:], 2)
    assert direct == split


def test_isub_is_left_first():
    t = "A,A->A|01"
    # left-first: w1 runs before w0, so the final state is 0
    r = isub(P2, t, ["w1", "w0"])
    assert r == P2.subst1(P2.subst1(t, 1, "w1"), 2, "w0")


@pytest.mark.parametrize("name", SMALL)
def test_derived_lemmas(name, big_cfg):
    p = stateful_fixtures()[name]
    rep = derived_lemma_suite(p, morphisms=[identity_premult_morphism(p)], config=big_cfg)
    assert rep.violation_count == 0
    assert rep.gap_count == 0


def test_derived_lemmas_on_lowered(cfg):
    p = lower(clone_to_multicat(set_clone_fragment([2], 1)))
    assert derived_lemma_suite(p, config=cfg).violation_count == 0


# morphisms and transformations ------------------------------------------------

def test_identity_morphism_and_transformation(cfg):
    f = identity_premult_morphism(P2)
    assert validate_premult_morphism(f, cfg).ok
    assert validate_premult_transformation(identity_premult_transformation(f), cfg).ok


def test_noncentral_component_rejected(cfg):
    f = identity_premult_morphism(P2)
    rep = validate_premult_transformation(PremultTransformation(f, f, {"A": "w1"}), cfg)
    assert "component-central" in rep.laws_failed()


def test_transformation_composites_valid(cfg):
    p = lower(clone_to_multicat(set_clone_fragment([2], 2))).materialized()
    ms = premult_morphisms(p, p)[:5]
    for f, g, h in itertools.product(ms, repeat=3):
        for eta in premult_transformations_between(f, g, cfg):
            for eps in premult_transformations_between(g, h, cfg):
                comp = compose_premult_transformations(eps, eta)
                assert validate_premult_transformation(comp, cfg).ok
