"""Hopf algebras as structure-constant tensors, plus finite groups.

A HopfAlgebra is five LinMaps (mul, unit, comul, counit, antipode) over a
labelled space.  The axiom checker is parameterised by the ambient braided
category: in Vect the braiding is the flip, and the identical code verifies
braided Hopf algebras once the Yetter-Drinfeld braiding is supplied instead
(see the yd module).  Checks never assume the laws hold -- they report the
first failing entry as a witness.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import (DimensionCapExceeded, DimensionMismatch, InvalidGroup,
                     NonInvertibleAntipode, NotAProjection)
from .linalg import (SCALAR, LinMap, Space, composite_map, flip, iso_map,
                     left_unitor, right_unitor, tensor_space, try_inverse)
from .report import Report

_ENV_CAP = "HOPFFORGE_MAX_DIM"
_DEFAULT_CAP = 512


def max_dim() -> int:
    """Dimension cap for constructed objects (HOPFFORGE_MAX_DIM, default 512)."""
    raw = os.environ.get(_ENV_CAP)
    if raw is None:
        return _DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise DimensionCapExceeded(f"{_ENV_CAP} must be an integer, got {raw!r}")


def _check_cap(dim: int, what: str):
    cap = max_dim()
    if dim > cap:
        raise DimensionCapExceeded(
            f"{what} has dimension {dim} > {_ENV_CAP}={cap}")


class VectBraiding:
    """The symmetric monoidal structure of Vect: objects are Spaces."""

    depth = 0

    def braiding(self, v: Space, w: Space) -> LinMap:
        return flip(v, w)

    def space_of(self, obj: Space) -> Space:
        return obj

    def __repr__(self):
        return "Vect"


VECT = VectBraiding()


class HopfAlgebra:
    """Structure constants of a Hopf algebra in an ambient braided category.

    ``ambient`` supplies the braiding used in the bialgebra compatibility
    law; ``obj`` is the carrier as an object of that category (for Vect it
    is just the space).  The antipode inverse is computed eagerly: a
    singular antipode is rejected outright.
    """

    def __init__(self, space: Space, mul: LinMap, unit: LinMap, comul: LinMap,
                 counit: LinMap, antipode: LinMap, *, ambient=VECT, obj=None,
                 name: str = "H"):
        _check_cap(space.dim, name)
        sq = tensor_space(space, space)
        shapes = [
            ("mul", mul, sq, space),
            ("unit", unit, SCALAR, space),
            ("comul", comul, space, sq),
            ("counit", counit, space, SCALAR),
            ("antipode", antipode, space, space),
        ]
        for what, m, dom, cod in shapes:
            if m.dom != dom or m.cod != cod:
                raise DimensionMismatch(
                    f"{name}.{what}: expected {dom!r} -> {cod!r}, "
                    f"got {m.dom!r} -> {m.cod!r}")
        self.space = space
        self.mul = mul
        self.unit = unit
        self.comul = comul
        self.counit = counit
        self.antipode = antipode
        self.ambient = ambient
        self.obj = space if obj is None else obj
        self.name = name
        self.antipode_inv = try_inverse(antipode)
        if self.antipode_inv is None:
            raise NonInvertibleAntipode(f"{name}: antipode matrix is singular")

    @property
    def dim(self) -> int:
        return self.space.dim

    def id_map(self) -> LinMap:
        return LinMap.identity(self.space)

    def self_braiding(self) -> LinMap:
        return self.ambient.braiding(self.obj, self.obj)

    def unit_vector(self) -> dict:
        return self.unit.column(0)

    def __repr__(self):
        return f"HopfAlgebra({self.name}, dim={self.dim})"


def check_hopf(h: HopfAlgebra) -> Report:
    """All Hopf axioms, in the ambient braiding.

    Includes a non-fatal cocommutativity info line.  Cost grows with dim^3
    (associativity quantifies over H^3), so this is meant for moderate
    dimensions; simplicial levels are checked through morphism laws instead.
    """
    rep = Report(f"check-hopf {h.name}")
    S, V = h.space, h.space
    mul, unit, comul, counit, ant = h.mul, h.unit, h.comul, h.counit, h.antipode
    R = h.self_braiding()
    sq = tensor_space(S, S)
    cube = tensor_space(S, S, S)

    rep.equality("associativity",
                 composite_map(cube, S, [[mul, S], mul]),
                 composite_map(cube, S, [[S, mul], mul]))
    rep.equality("unit-left",
                 composite_map(tensor_space(SCALAR, S), S, [[unit, S], mul]),
                 iso_map(tensor_space(SCALAR, S), S))
    rep.equality("unit-right",
                 composite_map(tensor_space(S, SCALAR), S, [[S, unit], mul]),
                 iso_map(tensor_space(S, SCALAR), S))
    rep.equality("coassociativity",
                 composite_map(S, cube, [comul, [comul, S]]),
                 composite_map(S, cube, [comul, [S, comul]]))
    rep.equality("counit-left",
                 composite_map(S, tensor_space(SCALAR, S), [comul, [counit, S]]),
                 left_unitor(S))
    rep.equality("counit-right",
                 composite_map(S, tensor_space(S, SCALAR), [comul, [S, counit]]),
                 right_unitor(S))
    rep.equality("comul-mul-compatibility",
                 composite_map(sq, sq, [mul, comul]),
                 composite_map(sq, sq, [[comul, comul], [S, R, S], [mul, mul]]))
    rep.equality("comul-unit",
                 comul @ unit,
                 composite_map(SCALAR, sq,
                               [iso_map(SCALAR, tensor_space(SCALAR, SCALAR)),
                                [unit, unit]]))
    rep.equality("counit-mul",
                 composite_map(sq, SCALAR, [mul, counit]),
                 composite_map(sq, SCALAR,
                               [[counit, counit],
                                iso_map(tensor_space(SCALAR, SCALAR), SCALAR)]))
    rep.equality("counit-unit", counit @ unit, LinMap.identity(SCALAR))
    eta_eps = unit @ counit
    rep.equality("antipode-left",
                 composite_map(S, S, [comul, [ant, S], mul]), eta_eps)
    rep.equality("antipode-right",
                 composite_map(S, S, [comul, [S, ant], mul]), eta_eps)
    rep.add("antipode-invertible", h.antipode_inv is not None)
    rep.info("cocommutative", str(check_cocommutative(h)))
    return rep


def check_cocommutative(h: HopfAlgebra) -> bool:
    """True iff braiding . comul == comul exactly."""
    return (h.self_braiding() @ h.comul) == h.comul


class HopfMorphism:
    """A linear map between Hopf algebras, claimed to respect the structure."""

    def __init__(self, src: HopfAlgebra, dst: HopfAlgebra, lin: LinMap,
                 name: str = "f"):
        if lin.dom != src.space or lin.cod != dst.space:
            raise DimensionMismatch(
                f"{name}: matrix is {lin.dom!r}->{lin.cod!r}, expected "
                f"{src.space!r}->{dst.space!r}")
        self.src = src
        self.dst = dst
        self.lin = lin
        self.name = name

    def __repr__(self):
        return f"HopfMorphism({self.name}: {self.src.name}->{self.dst.name})"


def check_morphism(m: HopfMorphism) -> Report:
    """The five compatibility squares of a Hopf algebra map."""
    rep = Report(f"check-morphism {m.name}")
    s, d, f = m.src, m.dst, m.lin
    src_sq = tensor_space(s.space, s.space)
    dst_sq = tensor_space(d.space, d.space)
    rep.equality("respects-mul",
                 composite_map(src_sq, d.space, [s.mul, f]),
                 composite_map(src_sq, d.space, [[f, f], d.mul]))
    rep.equality("respects-unit", f @ s.unit, d.unit)
    rep.equality("respects-comul",
                 composite_map(s.space, dst_sq, [s.comul, [f, f]]),
                 composite_map(s.space, dst_sq, [f, d.comul]))
    rep.equality("respects-counit", d.counit @ f, s.counit)
    rep.equality("respects-antipode", f @ s.antipode, d.antipode @ f)
    return rep


def zero_morphism(src: HopfAlgebra, dst: HopfAlgebra) -> HopfMorphism:
    """unit . counit -- the zero map of the convolution monoid."""
    return HopfMorphism(src, dst, dst.unit @ src.counit, name="zeta")


class HopfProjection:
    """A split pair proj: I -> H, incl: H -> I with proj . incl == id.

    Both legs must be actual Hopf morphisms; violations raise NotAProjection
    so downstream theorems never run on junk.
    """

    def __init__(self, big: HopfAlgebra, small: HopfAlgebra, proj: LinMap,
                 incl: LinMap, name: str = "p", *, check: bool = True):
        self.big = big
        self.small = small
        self.proj = HopfMorphism(big, small, proj, name=f"{name}.proj")
        self.incl = HopfMorphism(small, big, incl, name=f"{name}.incl")
        self.name = name
        if check:
            if (proj @ incl) != LinMap.identity(small.space):
                raise NotAProjection(f"{name}: proj . incl != id")
            for leg in (self.proj, self.incl):
                leg_rep = check_morphism(leg)
                if not leg_rep.ok:
                    bad = leg_rep.failed()[0]
                    raise NotAProjection(
                        f"{name}: {leg.name} fails {bad.name}")

    def __repr__(self):
        return f"HopfProjection({self.big.name} -> {self.small.name})"


def adjoint_action(h: HopfAlgebra, side: str = "left") -> LinMap:
    """The (co)adjoint action of h on itself: a |> b = sum a' b S(a'').

    side='right' gives b <| a = sum S(a') b a''.  On a group algebra the
    left action sends g (x) x to g x g^{-1}.
    """
    S = h.space
    sq = tensor_space(S, S)
    R = h.self_braiding()
    if side == "left":
        stages = [[h.comul, S], [S, R], [S, S, h.antipode], [h.mul, S], h.mul]
    elif side == "right":
        stages = [[h.comul, S], [S, R], [h.antipode, S, S], [h.mul, S], h.mul]
    else:
        raise ValueError("side must be 'left' or 'right'")
    return composite_map(sq, S, stages)


def adjoint_coaction(h: HopfAlgebra) -> LinMap:
    """y |-> sum y' S(y''') (x) y''."""
    S = h.space
    sq = tensor_space(S, S)
    R = h.self_braiding()
    return composite_map(S, sq, [
        h.comul, [h.comul, S], [S, S, h.antipode], [S, R], [h.mul, S]])


def group_like_basis_indices(h: HopfAlgebra) -> list:
    """Basis vectors v with comul(v) == v (x) v and counit(v) == 1."""
    out = []
    for j in range(h.dim):
        if h.counit.entry(0, j) != 1:
            continue
        col = h.comul.column(j)
        if col == {j * h.dim + j: col.get(j * h.dim + j)} and \
                col.get(j * h.dim + j) == 1:
            out.append(j)
    return out


# -- finite groups ----------------------------------------------------


class GroupTable:
    """A finite group as a Cayley table over labelled elements.

    Associativity, identity and inverses are verified at construction
    (vectorised with numpy -- order-216 tables are 10M triples).
    """

    def __init__(self, labels, table, name: str = "G"):
        self.labels = tuple(str(s) for s in labels)
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise InvalidGroup(f"{name}: duplicate element labels")
        t = np.asarray(table, dtype=np.int64)
        if t.shape != (n, n):
            raise InvalidGroup(f"{name}: table shape {t.shape}, expected ({n},{n})")
        if t.min() < 0 or t.max() >= n:
            raise InvalidGroup(f"{name}: table entries out of range")
        # chunk the n^3 associativity cube so order ~1000 stays in memory
        step = max(1, (1 << 24) // max(n * n, 1))
        for i0 in range(0, n, step):
            rows = t[i0:i0 + step]
            if not np.array_equal(t[rows, :], rows[:, t]):
                raise InvalidGroup(f"{name}: multiplication is not associative")
        idn = np.arange(n)
        e_candidates = [e for e in range(n)
                        if np.array_equal(t[e], idn) and np.array_equal(t[:, e], idn)]
        if not e_candidates:
            raise InvalidGroup(f"{name}: no identity element")
        self.identity = e_candidates[0]
        inv = np.full(n, -1, dtype=np.int64)
        rows, cols = np.nonzero(t == self.identity)
        for r, c in zip(rows, cols):
            inv[r] = c
        if (inv < 0).any() or not np.array_equal(t[idn, inv], np.full(n, self.identity)):
            raise InvalidGroup(f"{name}: missing inverses")
        self.table = t
        self.inverse = inv
        self.order = n
        self.name = name

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inverse[i])

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __repr__(self):
        return f"GroupTable({self.name}, order={self.order})"


def trivial_group() -> GroupTable:
    return GroupTable(("1",), [[0]], name="1")


def cyclic_group(n: int, name=None) -> GroupTable:
    if n == 1:
        return trivial_group()
    labels = ["1", "g"] + [f"g{k}" for k in range(2, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return GroupTable(labels, table, name=name or f"C{n}")


_S3_PERMS = [
    ("e", (0, 1, 2)),
    ("(12)", (1, 0, 2)),
    ("(13)", (2, 1, 0)),
    ("(23)", (0, 2, 1)),
    ("(123)", (1, 2, 0)),
    ("(132)", (2, 0, 1)),
]


def symmetric_group_3() -> GroupTable:
    """S3 with a fixed element order; composition acts right-to-left."""
    perms = [p for _, p in _S3_PERMS]
    labels = [l for l, _ in _S3_PERMS]
    lookup = {p: i for i, p in enumerate(perms)}
    table = [[lookup[tuple(p[q[k]] for k in range(3))] for q in perms]
             for p in perms]
    return GroupTable(labels, table, name="S3")


def s3_sign_indices() -> list:
    """Parity of each element of symmetric_group_3 (0 even, 1 odd)."""
    out = []
    for _, p in _S3_PERMS:
        parity = sum(1 for a in range(3) for b in range(a + 1, 3)
                     if p[a] > p[b]) % 2
        out.append(parity)
    return out


def semidirect_product(m: GroupTable, n: GroupTable, action,
                       name=None, label=None) -> GroupTable:
    """M x| N with (m,n)(m',n') = (m * (n |> m'), n n').

    ``action[j][i]`` is the index of n_j |> m_i, an automorphism action of
    N on M.  Elements are ordered m-major; labels default to "(m,n)".
    """
    act = np.asarray(action, dtype=np.int64)
    if act.shape != (n.order, m.order):
        raise InvalidGroup("semidirect: action table has wrong shape")
    if label is None:
        label = lambda ml, nl: f"({ml},{nl})"
    labels = [label(m.labels[i], n.labels[j])
              for i in range(m.order) for j in range(n.order)]
    size = m.order * n.order
    table = np.empty((size, size), dtype=np.int64)
    for i1 in range(m.order):
        for j1 in range(n.order):
            a = i1 * n.order + j1
            for i2 in range(m.order):
                mi = m.mul(i1, int(act[j1, i2]))
                base = mi * n.order
                row_n = n.table[j1]
                for j2 in range(n.order):
                    table[a, i2 * n.order + j2] = base + row_n[j2]
    return GroupTable(labels, table, name=name or f"{m.name}x|{n.name}")


def direct_product_action(m: GroupTable, n: GroupTable):
    """Trivial action table (direct product) for semidirect_product."""
    return [[i for i in range(m.order)] for _ in range(n.order)]


def conjugation_action(g: GroupTable):
    """g |> x = g x g^{-1} as an action table of g on itself."""
    return [[g.mul(g.mul(j, i), g.inv(j)) for i in range(g.order)]
            for j in range(g.order)]


def check_group_hom(src: GroupTable, dst: GroupTable, images) -> bool:
    f = np.asarray(images, dtype=np.int64)
    if f.shape != (src.order,):
        return False
    if f.min() < 0 or f.max() >= dst.order:
        return False
    return np.array_equal(dst.table[f[:, None], f[None, :]], f[src.table])


# -- Hopf algebras from the shelf -------------------------------------


def group_algebra(g: GroupTable, name=None) -> HopfAlgebra:
    """k[G]: basis = group elements, comul diagonal, antipode by inverse."""
    name = name or f"k[{g.name}]"
    space = Space(g.labels)
    n = g.order
    mul_cols = {}
    for i in range(n):
        ti = g.table[i]
        for j in range(n):
            mul_cols[i * n + j] = {int(ti[j]): 1}
    mul = LinMap(tensor_space(space, space), space, mul_cols)
    unit = LinMap.from_entries(SCALAR, space, {(g.identity, 0): 1})
    comul = LinMap.from_entries(space, tensor_space(space, space),
                                {(j * n + j, j): 1 for j in range(n)})
    counit = LinMap.from_rows(space, SCALAR, [[1] * n])
    antipode = LinMap.from_entries(space, space,
                                   {(g.inv(j), j): 1 for j in range(n)})
    return HopfAlgebra(space, mul, unit, comul, counit, antipode, name=name)


def linearize_group_hom(src: HopfAlgebra, dst: HopfAlgebra, images,
                        name: str = "f") -> HopfMorphism:
    """Index map between group bases -> Hopf morphism of group algebras."""
    lin = LinMap.from_entries(src.space, dst.space,
                              {(int(images[j]), j): 1 for j in range(src.dim)})
    return HopfMorphism(src, dst, lin, name=name)


def sweedler_algebra() -> HopfAlgebra:
    """The 4-dimensional algebra <g, x | g^2=1, x^2=0, xg=-gx>.

    Basis (1, g, x, gx); comul(g) = g(x)g, comul(x) = x(x)1 + g(x)x.
    The smallest Hopf algebra that is neither commutative nor cocommutative.
    """
    space = Space(("1", "g", "x", "gx"))
    I, G, X, GX = 0, 1, 2, 3
    prod = {
        (I, I): (I, 1), (I, G): (G, 1), (I, X): (X, 1), (I, GX): (GX, 1),
        (G, I): (G, 1), (G, G): (I, 1), (G, X): (GX, 1), (G, GX): (X, 1),
        (X, I): (X, 1), (X, G): (GX, -1), (X, X): None, (X, GX): None,
        (GX, I): (GX, 1), (GX, G): (X, -1), (GX, X): None, (GX, GX): None,
    }
    mul_entries = {}
    for (a, b), out in prod.items():
        if out is not None:
            tgt, coeff = out
            mul_entries[(tgt, a * 4 + b)] = coeff
    sq = tensor_space(space, space)
    mul = LinMap.from_entries(sq, space, mul_entries)
    unit = LinMap.from_entries(SCALAR, space, {(I, 0): 1})
    comul = LinMap.from_entries(space, sq, {
        (I * 4 + I, I): 1,
        (G * 4 + G, G): 1,
        (X * 4 + I, X): 1, (G * 4 + X, X): 1,
        (GX * 4 + G, GX): 1, (I * 4 + GX, GX): 1,
    })
    counit = LinMap.from_rows(space, SCALAR, [[1, 1, 0, 0]])
    antipode = LinMap.from_entries(space, space, {
        (I, I): 1, (G, G): 1, (GX, X): -1, (X, GX): 1,
    })
    return HopfAlgebra(space, mul, unit, comul, counit, antipode, name="H4")
