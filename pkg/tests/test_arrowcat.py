import itertools

import pytest
from hypothesis import given, strategies as st

from multiarity.arrowcat import (UNIT, ArrowObj, Square, all_squares, associator, braid, check_duoidal,
                                 coherence_isos, coproduct_comparison, funny_projections, funny_tensor,
                                 funny_tensor_n, interchange, interchange_prime, left_unitor, mu,
                                 pointwise_product, pushout_characterization, right_unitor, tensor_squares)
from multiarity.errors import ShapeError
from multiarity.fixtures import arrow_pool, _mut_duoidal

from test_finset import components

TWO_TO_ONE = ArrowObj.make(["0", "1"], ["*"], {"0": "*", "1": "*"})
ID2 = ArrowObj.make(["0", "1"], ["0", "1"], {"0": "0", "1": "1"})
SWAP = ArrowObj.make(["0", "1"], ["0", "1"], {"0": "1", "1": "0"})


@st.composite
def arrows(draw):
    n0 = draw(st.integers(0, 3))
    n1 = draw(st.integers(1, 3))
    imgs = draw(st.lists(st.integers(0, n1 - 1), min_size=n0, max_size=n0))
    return ArrowObj.make([str(i) for i in range(n0)], [str(i) for i in range(n1)],
                         {str(i): str(j) for i, j in enumerate(imgs)})


def tensor_level1_oracle(a, b):
    """Components of a1 x b0 + a0 x b1 glued along a0 x b0."""
    nodes = [("L", x, y) for x in a.level1 for y in b.level0] + [("R", x, y) for x in a.level0 for y in b.level1]
    edges = [(("L", a.diamond(x), y), ("R", x, b.diamond(y))) for x in a.level0 for y in b.level0]
    return components(nodes, edges)


def test_pointwise_product_sizes():
    assert pointwise_product(UNIT, UNIT)[0].sizes == (1, 1)
    assert pointwise_product(TWO_TO_ONE, TWO_TO_ONE)[0].sizes == (4, 1)


def test_funny_tensor_examples():
    assert funny_tensor(TWO_TO_ONE, TWO_TO_ONE).object.sizes == (4, 1)
    assert left_unitor(ID2).is_iso()
    r = funny_tensor(ID2, SWAP).object
    p = pointwise_product(ID2, SWAP)[0]
    assert r.sizes == p.sizes
    assert mu(ID2, SWAP).is_iso()


def test_funny_tensor_n_examples():
    assert funny_tensor_n([SWAP]).object == SWAP
    assert funny_tensor_n([UNIT, UNIT, UNIT]).object.sizes == (1, 1)
    t = funny_tensor_n([TWO_TO_ONE] * 3)
    assert t.object.sizes[0] == 8
    assert pushout_characterization([TWO_TO_ONE] * 3) is not None


def test_empty_tensor_is_shape_error():
    with pytest.raises(ShapeError):
        funny_tensor_n([])


def test_coherence_examples():
    # I box I has renamed elements, so lambda on I is the unique 1-to-1 square
    lam = left_unitor(UNIT)
    assert lam.is_iso() and lam.src.sizes == (1, 1) and lam.dst == UNIT
    s = braid(TWO_TO_ONE, SWAP)
    assert s.then(braid(SWAP, TWO_TO_ONE)) == Square.identity(funny_tensor(TWO_TO_ONE, SWAP).object)
    al = associator(TWO_TO_ONE, TWO_TO_ONE, UNIT)
    assert al.is_iso()
    isos = coherence_isos(TWO_TO_ONE, ID2, SWAP)
    assert sorted(isos) == ["assoc", "braid", "lambda", "rho"]
    assert all(sq.is_iso() for sq in isos.values())


def test_mu_examples():
    assert mu(UNIT, UNIT).is_iso()
    m = mu(TWO_TO_ONE, TWO_TO_ONE)
    assert (len(m.f1.dom), len(m.f1.cod)) == (1, 1)


def test_funny_projections_against_unitors():
    for a in arrow_pool():
        p, _ = funny_projections(a, UNIT)
        assert p == right_unitor(a)
        _, q = funny_projections(UNIT, a)
        assert q == left_unitor(a)


def test_interchange_units_and_corruption():
    assert interchange(UNIT, UNIT, UNIT, UNIT).is_iso()
    assert check_duoidal([UNIT]).ok
    samples, bad = _mut_duoidal()
    rep = check_duoidal(samples, zeta=bad)
    assert "zeta=zeta'" in rep.laws_failed()
    w = next(e.witness for e in rep.violations if e.law == "zeta=zeta'")
    assert w["objects"] == [1, 1, 1, 1] and "element" in w


def test_duoidal_small_sample_set():
    assert check_duoidal([TWO_TO_ONE, ID2, SWAP]).ok


# properties ------------------------------------------------------------------

@given(arrows(), arrows())
def test_tensor_level1_matches_component_oracle(a, b):
    t = funny_tensor(a, b).object
    assert len(t.level0) == len(a.level0) * len(b.level0)
    assert len(t.level1) == tensor_level1_oracle(a, b)


@given(arrows(), arrows())
def test_braid_is_involutive_iso(a, b):
    s = braid(a, b)
    assert s.is_iso()
    assert s.then(braid(b, a)) == Square.identity(s.src)


@given(arrows(), arrows(), arrows())
def test_coproduct_comparison_bijective(a1, a2, b):
    assert coproduct_comparison(a1, a2, b).is_iso()


@given(st.lists(arrows(), min_size=1, max_size=3))
def test_pushout_characterization(objs):
    assert pushout_characterization(objs) is not None


@given(arrows(), arrows(), arrows(), arrows())
def test_zeta_equals_zeta_prime(a, b, c, d):
    assert interchange(a, b, c, d) == interchange_prime(a, b, c, d)


def test_tensor_is_functorial_on_pool_squares():
    pool = arrow_pool()[:4]
    for a, b in itertools.product(pool, pool):
        assert tensor_squares(Square.identity(a), Square.identity(b)) == Square.identity(
            funny_tensor(a, b).object)
        fs, gs = all_squares(a, a)[:3], all_squares(b, b)[:3]
        for f, f2, g, g2 in itertools.product(fs, fs, gs, gs):
            lhs = tensor_squares(f.then(f2), g.then(g2))
            assert lhs == tensor_squares(f, g).then(tensor_squares(f2, g2))
