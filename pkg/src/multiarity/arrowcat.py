"""The arrow category [->, Set]: arrow objects, squares, the pointwise product
and the funny tensor with its coherence and duoidal data.

n-ary tensors are built over a bracketing tree. Every tree tensor records,
for each factor j, the leg k_j into level 1 from the product with the
level-1 set at position j. These legs form a wide pushout, so any map out of
a tensor is obtained from ``mediating_map`` by saying where each leg goes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import ShapeError
from .finset import (
    Cocone,
    FinMap,
    FinSet,
    canonical_bijection,
    coequalizer,
    coproduct,
    mediating_map,
    product,
    product_map,
    render,
    tuple_map,
    wide_pushout,
)


@dataclass(frozen=True, eq=False)
class ArrowObj:
    level0: FinSet
    level1: FinSet
    diamond: FinMap

    def __post_init__(self):
        if self.diamond.dom != self.level0 or self.diamond.cod != self.level1:
            raise ShapeError("diamond must map level0 to level1")

    @classmethod
    def make(cls, level0, level1, table: dict) -> "ArrowObj":
        l0, l1 = FinSet(level0), FinSet(level1)
        return cls(l0, l1, FinMap(l0, l1, dict(table)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArrowObj):
            return NotImplemented
        return self.level0 == other.level0 and self.level1 == other.level1 and self.diamond == other.diamond

    __hash__ = None

    @property
    def sizes(self) -> tuple[int, int]:
        return len(self.level0), len(self.level1)

    def is_unit_like(self) -> bool:
        return self.sizes == (1, 1)

    def __repr__(self) -> str:
        return f"ArrowObj({len(self.level0)}->{len(self.level1)})"


UNIT = ArrowObj.make(["*"], ["*"], {"*": "*"})


@dataclass(frozen=True, eq=False)
class Square:
    src: ArrowObj
    dst: ArrowObj
    f0: FinMap
    f1: FinMap

    def __post_init__(self):
        if self.f0.dom != self.src.level0 or self.f0.cod != self.dst.level0:
            raise ShapeError("f0 has the wrong type")
        if self.f1.dom != self.src.level1 or self.f1.cod != self.dst.level1:
            raise ShapeError("f1 has the wrong type")
        for x in self.src.level0:
            if self.f1(self.src.diamond(x)) != self.dst.diamond(self.f0(x)):
                raise ShapeError(f"square does not commute at {render(x)!r}")

    @classmethod
    def identity(cls, a: ArrowObj) -> "Square":
        return cls(a, a, FinMap.identity(a.level0), FinMap.identity(a.level1))

    def then(self, g: "Square") -> "Square":
        if self.dst != g.src:
            raise ShapeError("squares are not composable")
        return Square(self.src, g.dst, self.f0.then(g.f0), self.f1.then(g.f1))

    def is_iso(self) -> bool:
        return self.f0.is_bijective() and self.f1.is_bijective()

    def inverse(self) -> "Square":
        return Square(self.dst, self.src, self.f0.inverse(), self.f1.inverse())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Square):
            return NotImplemented
        return (self.src == other.src and self.dst == other.dst
                and self.f0 == other.f0 and self.f1 == other.f1)

    __hash__ = None


def all_squares(a: ArrowObj, b: ArrowObj, limit: int = 100_000) -> list[Square]:
    """Every commuting square a -> b (brute force, guarded)."""
    n0 = len(b.level0) ** len(a.level0)
    n1 = len(b.level1) ** len(a.level1)
    if n0 * n1 > limit:
        raise ShapeError("too many candidate squares")
    out = []
    for imgs0 in itertools.product(b.level0.elements, repeat=len(a.level0)):
        f0 = dict(zip(a.level0.elements, imgs0))
        for imgs1 in itertools.product(b.level1.elements, repeat=len(a.level1)):
            f1 = dict(zip(a.level1.elements, imgs1))
            if all(f1[a.diamond(x)] == b.diamond(f0[x]) for x in a.level0):
                out.append(Square(a, b, FinMap(a.level0, b.level0, f0), FinMap(a.level1, b.level1, f1)))
    return out


# pointwise structure ------------------------------------------------------

def pointwise_product(a: ArrowObj, b: ArrowObj) -> tuple[ArrowObj, tuple[Square, Square]]:
    p0, (x0, y0) = product([a.level0, b.level0])
    p1, (x1, y1) = product([a.level1, b.level1])
    obj = ArrowObj(p0, p1, product_map([a.diamond, b.diamond]))
    return obj, (Square(obj, a, x0, x1), Square(obj, b, y0, y1))


def product_squares(f: Square, g: Square) -> Square:
    src = pointwise_product(f.src, g.src)[0]
    dst = pointwise_product(f.dst, g.dst)[0]
    return Square(src, dst, product_map([f.f0, g.f0]), product_map([f.f1, g.f1]))


def tuple_squares(f: Square, g: Square) -> Square:
    """<f, g> into the pointwise product of the codomains."""
    dst = pointwise_product(f.dst, g.dst)[0]
    return Square(f.src, dst, tuple_map([f.f0, g.f0], dst.level0), tuple_map([f.f1, g.f1], dst.level1))


def product_assoc(a: ArrowObj, b: ArrowObj, c: ArrowObj) -> Square:
    src = pointwise_product(pointwise_product(a, b)[0], c)[0]
    dst = pointwise_product(a, pointwise_product(b, c)[0])[0]
    fn = lambda e: (e[0][0], (e[0][1], e[1]))  # noqa: E731
    return Square(src, dst, FinMap.from_fn(src.level0, dst.level0, fn),
                  FinMap.from_fn(src.level1, dst.level1, fn))


def product_right_unitor(a: ArrowObj) -> Square:
    src = pointwise_product(a, UNIT)[0]
    fn = lambda e: e[0]  # noqa: E731
    return Square(src, a, FinMap.from_fn(src.level0, a.level0, fn), FinMap.from_fn(src.level1, a.level1, fn))


def product_left_unitor(a: ArrowObj) -> Square:
    src = pointwise_product(UNIT, a)[0]
    fn = lambda e: e[1]  # noqa: E731
    return Square(src, a, FinMap.from_fn(src.level0, a.level0, fn), FinMap.from_fn(src.level1, a.level1, fn))


def arrow_coproduct(objs: Sequence[ArrowObj]) -> tuple[ArrowObj, list[Square]]:
    c0, inj0 = coproduct([a.level0 for a in objs])
    c1, inj1 = coproduct([a.level1 for a in objs])
    table = {}
    for a, i0, i1 in zip(objs, inj0, inj1):
        for x in a.level0:
            table[i0(x)] = i1(a.diamond(x))
    obj = ArrowObj(c0, c1, FinMap(c0, c1, table))
    return obj, [Square(a, obj, i0, i1) for a, i0, i1 in zip(objs, inj0, inj1)]


def arrow_coequalizer(f: Square, g: Square) -> tuple[ArrowObj, Square]:
    """Pointwise coequalizer of two parallel squares, with its quotient."""
    if f.src != g.src or f.dst != g.dst:
        raise ShapeError("coequalizer of non-parallel squares")
    c0, q0 = coequalizer(f.f0, g.f0)
    c1, q1 = coequalizer(f.f1, g.f1)
    b = f.dst
    c = ArrowObj(c0, c1, FinMap.from_fn(c0, c1, lambda x: q1(b.diamond(x))))
    return c, Square(b, c, q0, q1)


# funny tensor over trees --------------------------------------------------

def _flatten(shape, elem, out: dict) -> dict:
    if isinstance(shape, int):
        out[shape] = elem
    else:
        _flatten(shape[0], elem[0], out)
        _flatten(shape[1], elem[1], out)
    return out


def _nest(shape, coords: dict):
    if isinstance(shape, int):
        return coords[shape]
    return (_nest(shape[0], coords), _nest(shape[1], coords))


def _leaves(shape) -> list[int]:
    if isinstance(shape, int):
        return [shape]
    return _leaves(shape[0]) + _leaves(shape[1])


@dataclass(frozen=True, eq=False)
class TensorResult:
    """A tensor of ``factors`` bracketed by ``shape``.

    ``legs[j]`` maps the product with level 1 at factor j into
    ``object.level1``; ``spans[j]`` maps level 0 into that product. For a
    binary tensor ``legs[0]`` is iota' (from a1 x b0) and ``legs[1]`` is
    iota (from a0 x b1)."""

    object: ArrowObj
    factors: tuple
    shape: object
    legs: dict
    spans: dict

    @property
    def iota_prime(self) -> FinMap:
        return self.legs[0]

    @property
    def iota(self) -> FinMap:
        return self.legs[1]

    def cocone(self) -> Cocone:
        order = sorted(self.legs)
        return Cocone(self.object.level1, [self.legs[j] for j in order], [self.spans[j] for j in order])

    def flatten(self, elem) -> dict:
        return _flatten(self.shape, elem, {})

    def nest(self, coords: dict):
        return _nest(self.shape, coords)


def _tree(shape, factors: Sequence[ArrowObj]) -> TensorResult:
    if isinstance(shape, int):
        a = factors[shape]
        return TensorResult(a, tuple(factors), shape, {shape: FinMap.identity(a.level1)}, {shape: a.diamond})
    t, u = _tree(shape[0], factors), _tree(shape[1], factors)
    ta, ua = t.object, u.object
    id_t0, id_u0 = FinMap.identity(ta.level0), FinMap.identity(ua.level0)
    left = product_map([ta.diamond, id_u0])
    right = product_map([id_t0, ua.diamond])
    po = wide_pushout([left, right])
    iota_p, iota = po.legs
    obj = ArrowObj(left.dom, po.apex, left.then(iota_p))
    legs, spans = {}, {}
    for j, k in t.legs.items():
        legs[j] = product_map([k, id_u0]).then(iota_p)
        spans[j] = product_map([t.spans[j], id_u0])
    for j, k in u.legs.items():
        legs[j] = product_map([id_t0, k]).then(iota)
        spans[j] = product_map([id_t0, u.spans[j]])
    return TensorResult(obj, tuple(factors), shape, legs, spans)


def funny_tensor_tree(shape, factors: Sequence[ArrowObj]) -> TensorResult:
    if not factors:
        raise ShapeError("tensor of no factors")
    if sorted(_leaves(shape)) != list(range(len(factors))):
        raise ShapeError("shape must use each factor exactly once")
    return _tree(shape, factors)


def funny_tensor(a: ArrowObj, b: ArrowObj) -> TensorResult:
    return _tree((0, 1), [a, b])


def left_shape(n: int):
    shape = 0
    for i in range(1, n):
        shape = (shape, i)
    return shape


def right_shape(lo: int, hi: int):
    return lo if lo == hi else (lo, right_shape(lo + 1, hi))


def funny_tensor_n(objs: Sequence[ArrowObj]) -> TensorResult:
    if not objs:
        raise ShapeError("tensor of an empty list")
    return _tree(left_shape(len(objs)), list(objs))


def wide_presentation(objs: Sequence[ArrowObj]) -> Cocone:
    """Level 1 of the n-ary tensor as the wide pushout of the flat maps
    prod a_0 -> prod a_{delta(i,j)}."""
    if not objs:
        raise ShapeError("tensor of an empty list")
    n0 = product([a.level0 for a in objs])[0]
    spans = []
    for j, a in enumerate(objs):
        cod = product([b.level1 if i == j else b.level0 for i, b in enumerate(objs)])[0]
        spans.append(FinMap.from_fn(n0, cod, lambda x, j=j, a=a: x[:j] + (a.diamond(x[j]),) + x[j + 1:]))
    return wide_pushout(spans)


def pushout_characterization(objs: Sequence[ArrowObj]) -> FinMap | None:
    """Mediating bijection from the wide presentation to the iterated
    tensor's level 1, or None if the two disagree."""
    wide = wide_presentation(objs)
    it = funny_tensor_n(objs)
    legs = [FinMap.from_fn(w.dom, it.object.level1,
                           lambda d, j=j: it.legs[j](it.nest(dict(enumerate(d)))))
            for j, w in enumerate(wide.legs)]
    q = canonical_bijection(wide, Cocone(it.object.level1, legs, wide.diagram))
    if q is None:
        return None
    n0 = wide.diagram[0].dom
    for x in n0:
        via_wide = q(wide.legs[0](wide.diagram[0](x)))
        if via_wide != it.object.diamond(it.nest(dict(enumerate(x)))):
            return None
    return q


def tensor_map(src: TensorResult, dst: TensorResult, assign: Sequence, squares: Sequence | None = None) -> Square:
    """The map between tree tensors induced by sending factor i of ``src``
    to factor ``assign[i]`` of ``dst`` along ``squares[i]`` (identity when
    None). Unassigned factors on either side must be unit-like."""
    n = len(src.factors)
    squares = list(squares) if squares is not None else [None] * n
    hit = {k for k in assign if k is not None}
    if len(hit) != len([k for k in assign if k is not None]):
        raise ShapeError("a target factor is hit twice")
    fill = {}
    for k, b in enumerate(dst.factors):
        if k not in hit:
            if not b.is_unit_like():
                raise ShapeError("unmatched target factor must be a unit")
            fill[k] = b.level0.elements[0]
    for i, a in enumerate(src.factors):
        if assign[i] is None and not a.is_unit_like():
            raise ShapeError("dropped source factor must be a unit")
        sq = squares[i]
        if sq is not None and assign[i] is not None:
            if sq.src != a or sq.dst != dst.factors[assign[i]]:
                raise ShapeError("component square has the wrong endpoints")

    def f0_at(i, x):
        return squares[i].f0(x) if squares[i] is not None else x

    def f1_at(i, x):
        return squares[i].f1(x) if squares[i] is not None else x

    def level0(x):
        flat = src.flatten(x)
        coords = dict(fill)
        for i, k in enumerate(assign):
            if k is not None:
                coords[k] = f0_at(i, flat[i])
        return dst.nest(coords)

    f0 = FinMap.from_fn(src.object.level0, dst.object.level0, level0)

    def leg_target(j):
        def go(d):
            flat = src.flatten(d)
            coords = dict(fill)
            for i, k in enumerate(assign):
                if k is not None and i != j:
                    coords[k] = f0_at(i, flat[i])
            k = assign[j]
            if k is None:
                return dst.object.diamond(dst.nest(coords))
            coords[k] = f1_at(j, flat[j])
            return dst.legs[k](dst.nest(coords))
        return go

    cone = src.cocone()
    order = sorted(src.legs)
    target = Cocone(dst.object.level1,
                    [FinMap.from_fn(src.legs[j].dom, dst.object.level1, leg_target(j)) for j in order])
    f1 = mediating_map(cone, target)
    return Square(src.object, dst.object, f0, f1)


def tensor_squares(f: Square, g: Square) -> Square:
    """f box g on squares."""
    return tensor_map(funny_tensor(f.src, g.src), funny_tensor(f.dst, g.dst), [0, 1], [f, g])


def left_unitor(a: ArrowObj) -> Square:
    return tensor_map(_tree((0, 1), [UNIT, a]), _tree(0, [a]), [None, 0])


def right_unitor(a: ArrowObj) -> Square:
    return tensor_map(_tree((0, 1), [a, UNIT]), _tree(0, [a]), [0, None])


def braid(a: ArrowObj, b: ArrowObj) -> Square:
    return tensor_map(_tree((0, 1), [a, b]), _tree((0, 1), [b, a]), [1, 0])


def associator(a: ArrowObj, b: ArrowObj, c: ArrowObj) -> Square:
    return tensor_map(_tree(((0, 1), 2), [a, b, c]), _tree((0, (1, 2)), [a, b, c]), [0, 1, 2])


def coherence_isos(a: ArrowObj, b: ArrowObj, c: ArrowObj) -> dict[str, Square]:
    return {
        "lambda": left_unitor(a),
        "rho": right_unitor(a),
        "braid": braid(a, b),
        "assoc": associator(a, b, c),
    }


# duoidal data ------------------------------------------------------------

def mu(a: ArrowObj, b: ArrowObj) -> Square:
    t = funny_tensor(a, b)
    prod = pointwise_product(a, b)[0]
    legs = [
        FinMap.from_fn(t.legs[0].dom, prod.level1, lambda e: (e[0], b.diamond(e[1]))),
        FinMap.from_fn(t.legs[1].dom, prod.level1, lambda e: (a.diamond(e[0]), e[1])),
    ]
    f1 = mediating_map(t.cocone(), Cocone(prod.level1, legs))
    return Square(t.object, prod, FinMap.identity(t.object.level0), f1)


def funny_projections(a: ArrowObj, b: ArrowObj) -> tuple[Square, Square]:
    m = mu(a, b)
    _, (p, q) = pointwise_product(a, b)
    return m.then(p), m.then(q)


def interchange(a: ArrowObj, b: ArrowObj, c: ArrowObj, d: ArrowObj) -> Square:
    """zeta: (a x b) box (c x d) -> (a box c) x (b box d)."""
    ab = pointwise_product(a, b)[0]
    cd = pointwise_product(c, d)[0]
    src = funny_tensor(ab, cd)
    ac, bd = funny_tensor(a, c), funny_tensor(b, d)
    dst = pointwise_product(ac.object, bd.object)[0]
    f0 = FinMap.from_fn(src.object.level0, dst.level0,
                        lambda e: ((e[0][0], e[1][0]), (e[0][1], e[1][1])))
    legs = [
        FinMap.from_fn(src.legs[0].dom, dst.level1,
                       lambda e: (ac.legs[0]((e[0][0], e[1][0])), bd.legs[0]((e[0][1], e[1][1])))),
        FinMap.from_fn(src.legs[1].dom, dst.level1,
                       lambda e: (ac.legs[1]((e[0][0], e[1][0])), bd.legs[1]((e[0][1], e[1][1])))),
    ]
    f1 = mediating_map(src.cocone(), Cocone(dst.level1, legs))
    return Square(src.object, dst, f0, f1)


def interchange_prime(a: ArrowObj, b: ArrowObj, c: ArrowObj, d: ArrowObj) -> Square:
    """zeta' = <pi box pi, pi' box pi'> built from product projections."""
    _, (pa, pb) = pointwise_product(a, b)
    _, (pc, pd) = pointwise_product(c, d)
    return tuple_squares(tensor_squares(pa, pc), tensor_squares(pb, pd))


# cocontinuity -------------------------------------------------------------

def coproduct_comparison(a1: ArrowObj, a2: ArrowObj, b: ArrowObj) -> Square:
    """Canonical map (a1 + a2) box b -> (a1 box b) + (a2 box b)."""
    summed, _ = arrow_coproduct([a1, a2])
    src = funny_tensor(summed, b)
    parts = [funny_tensor(a1, b), funny_tensor(a2, b)]
    dst, inj = arrow_coproduct([p.object for p in parts])
    untag0 = {f"{i}:{render(x)}": (i, x) for i, a in enumerate((a1, a2)) for x in a.level0}
    untag1 = {f"{i}:{render(x)}": (i, x) for i, a in enumerate((a1, a2)) for x in a.level1}

    def lvl0(e):
        i, x = untag0[e[0]]
        return inj[i].f0((x, e[1]))

    def leg0(e):
        i, x = untag1[e[0]]
        return inj[i].f1(parts[i].legs[0]((x, e[1])))

    def leg1(e):
        i, x = untag0[e[0]]
        return inj[i].f1(parts[i].legs[1]((x, e[1])))

    f0 = FinMap.from_fn(src.object.level0, dst.level0, lvl0)
    target = Cocone(dst.level1, [FinMap.from_fn(src.legs[0].dom, dst.level1, leg0),
                                 FinMap.from_fn(src.legs[1].dom, dst.level1, leg1)])
    return Square(src.object, dst, f0, mediating_map(src.cocone(), target))


def coequalizer_comparison(f: Square, g: Square, d: ArrowObj) -> Square:
    """Canonical map coeq(f box d, g box d) -> coeq(f, g) box d."""
    c, q = arrow_coequalizer(f, g)
    e_obj, e = arrow_coequalizer(tensor_squares(f, Square.identity(d)), tensor_squares(g, Square.identity(d)))
    h = tensor_squares(q, Square.identity(d))
    maps = []
    for lvl, (e_i, h_i) in enumerate(((e.f0, h.f0), (e.f1, h.f1))):
        table: dict = {}
        for z in e_i.dom:
            k, v = e_i(z), h_i(z)
            if table.setdefault(k, v) != v:
                raise ShapeError(f"comparison map ill-defined at level {lvl}")
        maps.append(FinMap(e_i.cod, h_i.cod, table))
    return Square(e_obj, h.dst, maps[0], maps[1])


# suites --------------------------------------------------------------------

def _diff(f: Square, g: Square) -> dict | None:
    """First element where two parallel squares differ."""
    for lvl, (m, n) in enumerate(((f.f0, g.f0), (f.f1, g.f1))):
        for x in m.dom:
            if m(x) != n(x):
                return {"level": lvl, "element": render(x), "lhs": render(m(x)), "rhs": render(n(x))}
    return None


def _compare(report, law: str, where: dict, f: Square, g: Square) -> None:
    if f.src != g.src or f.dst != g.dst:
        report.fail(law, dict(where), "composites have different endpoints")
        return
    d = _diff(f, g)
    if d is None:
        report.passed(law)
    else:
        report.fail(law, dict(where, **d))


def _T(a: ArrowObj, b: ArrowObj) -> ArrowObj:
    return funny_tensor(a, b).object


def _id(a: ArrowObj) -> Square:
    return Square.identity(a)


def monoidal_suite(pool: Sequence[ArrowObj], pentagon_pool: Sequence[int] | None = None):
    """Unitors, braid and associator are isos; braid twice is the identity;
    pentagon, triangle and hexagon commute. Indices refer to ``pool``."""
    from .report import Report

    rep = Report("funny-tensor monoidal structure")
    idx = range(len(pool))
    for i in idx:
        a = pool[i]
        for name, sq in (("lambda-iso", left_unitor(a)), ("rho-iso", right_unitor(a))):
            rep.passed(name) if sq.is_iso() else rep.fail(name, {"a": i})
    for i, j in itertools.product(idx, idx):
        a, b = pool[i], pool[j]
        s = braid(a, b)
        rep.passed("braid-iso") if s.is_iso() else rep.fail("braid-iso", {"a": i, "b": j})
        _compare(rep, "braid-involutive", {"a": i, "b": j}, s.then(braid(b, a)), _id(_T(a, b)))
        tri_l = associator(a, UNIT, b).then(tensor_squares(_id(a), left_unitor(b)))
        tri_r = tensor_squares(right_unitor(a), _id(b))
        _compare(rep, "triangle", {"a": i, "b": j}, tri_l, tri_r)
    for i, j, k in itertools.product(idx, idx, idx):
        a, b, c = pool[i], pool[j], pool[k]
        al = associator(a, b, c)
        rep.passed("assoc-iso") if al.is_iso() else rep.fail("assoc-iso", {"a": i, "b": j, "c": k})
        hex_l = al.then(braid(a, _T(b, c))).then(associator(b, c, a))
        hex_r = (tensor_squares(braid(a, b), _id(c))
                 .then(associator(b, a, c))
                 .then(tensor_squares(_id(b), braid(a, c))))
        _compare(rep, "hexagon", {"a": i, "b": j, "c": k}, hex_l, hex_r)
    quad = pentagon_pool if pentagon_pool is not None else list(idx)
    for i, j, k, m in itertools.product(quad, quad, quad, quad):
        a, b, c, d = pool[i], pool[j], pool[k], pool[m]
        lhs = associator(_T(a, b), c, d).then(associator(a, b, _T(c, d)))
        rhs = (tensor_squares(associator(a, b, c), _id(d))
               .then(associator(a, _T(b, c), d))
               .then(tensor_squares(_id(a), associator(b, c, d))))
        _compare(rep, "pentagon", {"a": i, "b": j, "c": k, "d": m}, lhs, rhs)
    return rep


def pushout_char_suite(pool: Sequence[ArrowObj], max_n: int = 4, budget: int | None = None):
    from .report import Report

    rep = Report("n-ary pushout characterization")
    for n in range(1, max_n + 1):
        combos = list(itertools.product(range(len(pool)), repeat=n))
        if budget is not None and len(combos) > budget:
            step = len(combos) / budget
            combos = [combos[int(i * step)] for i in range(budget)]
            rep.notes.append(f"n={n}: {budget} of {len(pool) ** n} tuples, evenly strided")
        for combo in combos:
            q = pushout_characterization([pool[i] for i in combo])
            if q is None:
                rep.fail(f"pushout-char-n{n}", {"objects": list(combo)})
            else:
                rep.passed(f"pushout-char-n{n}")
    return rep


def cocontinuity_suite(pool: Sequence[ArrowObj]):
    from .report import Report

    rep = Report("cocontinuity of (-) box b")
    idx = range(len(pool))
    for i, j, k in itertools.product(idx, idx, idx):
        sq = coproduct_comparison(pool[i], pool[j], pool[k])
        w = {"a1": i, "a2": j, "b": k}
        rep.passed("coproduct-comparison") if sq.is_iso() else rep.fail("coproduct-comparison", w)
    for i, j in itertools.product(idx, idx):
        a, b = pool[i], pool[j]
        sqs = all_squares(a, b)
        pairs = [(f, g) for f in sqs for g in sqs][:12]
        for n, (f, g) in enumerate(pairs):
            for k in idx:
                w = {"a": i, "b": j, "pair": n, "d": k}
                try:
                    sq = coequalizer_comparison(f, g, pool[k])
                except ShapeError as e:
                    rep.fail("coequalizer-comparison", w, str(e))
                    continue
                rep.passed("coequalizer-comparison") if sq.is_iso() else rep.fail("coequalizer-comparison", w)
    return rep


def check_duoidal(samples: Sequence[ArrowObj], zeta=None, squares_per_pair: int = 2,
                  others_per_move: int | None = 6, seed: int = 0):
    """Interchange agreement and naturality, mu naturality, units and the
    lax-monoidality squares of the identity functor (box to x)."""
    import random

    from .report import Report

    zeta = zeta or interchange
    rng = random.Random(seed)
    rep = Report("duoidal structure")
    idx = range(len(samples))
    for q in itertools.product(idx, repeat=4):
        objs = [samples[i] for i in q]
        _compare(rep, "zeta=zeta'", {"objects": list(q)}, zeta(*objs), interchange_prime(*objs))

    def some_squares(x, y):
        sqs = all_squares(x, y)
        return rng.sample(sqs, min(squares_per_pair, len(sqs)))

    moves = [(i, j, f) for i in idx for j in idx for f in some_squares(samples[i], samples[j])]
    for (i, j, f), k in itertools.product(moves, idx):
        b = samples[k]
        w = {"f": [i, j], "other": k}
        lhs = tensor_squares(f, _id(b)).then(mu(f.dst, b))
        rhs = mu(f.src, b).then(product_squares(f, _id(b)))
        _compare(rep, "mu-natural-left", w, lhs, rhs)
        lhs = tensor_squares(_id(b), f).then(mu(b, f.dst))
        rhs = mu(b, f.src).then(product_squares(_id(b), f))
        _compare(rep, "mu-natural-right", w, lhs, rhs)
    pairs = list(itertools.product(idx, idx))
    for (i, j, f) in moves:
        chosen = pairs if others_per_move is None else rng.sample(pairs, min(others_per_move, len(pairs)))
        for k, m in chosen:
            _zeta_natural(rep, zeta, samples, i, j, f, k, m)
    _unit_and_lax_checks(rep, samples)
    return rep


def _zeta_natural(rep, zeta, samples, i, j, f, k, m):
    x, y = samples[k], samples[m]
    for slot in range(4):
        w = {"f": [i, j], "slot": slot, "others": [k, m]}
        srcs = [x, y, x, y]
        sqs = [_id(o) for o in srcs]
        srcs[slot], sqs[slot] = f.src, f
        dsts = [s.dst for s in sqs]
        lhs = tensor_squares(product_squares(sqs[0], sqs[1]), product_squares(sqs[2], sqs[3])).then(zeta(*dsts))
        rhs = zeta(*srcs).then(product_squares(tensor_squares(sqs[0], sqs[2]), tensor_squares(sqs[1], sqs[3])))
        _compare(rep, "zeta-natural", w, lhs, rhs)


def _unit_and_lax_checks(rep, samples):
    idx = range(len(samples))
    # units: both units are I, so the unit comparison maps must be identities
    _compare(rep, "unit-iota", {}, _id(UNIT), _id(UNIT))
    ii = pointwise_product(UNIT, UNIT)[0]
    diag = Square(UNIT, ii, FinMap.from_fn(UNIT.level0, ii.level0, lambda e: (e, e)),
                  FinMap.from_fn(UNIT.level1, ii.level1, lambda e: (e, e)))
    _compare(rep, "unit-delta", {}, diag.then(product_right_unitor(UNIT)), _id(UNIT))
    _compare(rep, "unit-mu", {}, left_unitor(UNIT), right_unitor(UNIT))
    _compare(rep, "unit-mu", {}, mu(UNIT, UNIT).then(product_right_unitor(UNIT)), left_unitor(UNIT))
    for i, j, k in itertools.product(idx, idx, idx):
        a, b, c = samples[i], samples[j], samples[k]
        w = {"objects": [i, j, k]}
        lhs = associator(a, b, c).then(mu(a, _T(b, c))).then(product_squares(_id(a), mu(b, c)))
        rhs = (mu(_T(a, b), c).then(product_squares(mu(a, b), _id(c)))
               .then(product_assoc(a, b, c)))
        _compare(rep, "lax-assoc", w, lhs, rhs)
    for i in idx:
        a = samples[i]
        _compare(rep, "lax-unit-right", {"a": i}, mu(a, UNIT).then(product_right_unitor(a)), right_unitor(a))
        _compare(rep, "lax-unit-left", {"a": i}, mu(UNIT, a).then(product_left_unitor(a)), left_unitor(a))
