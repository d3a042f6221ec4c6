"""Exact linear algebra, cross-checked against sympy and against itself.

sympy works over the same field (Q), so every comparison is exact: a
kernel either matches the independently computed nullspace or the test
fails, with no tolerance anywhere.
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hopfforge.errors import ClosureFailure, DimensionMismatch
from hopfforge.linalg import (LinMap, Space, Subspace, composite_map, flip,
                              full_subspace, iso_map, kernel_basis,
                              left_unitor, rank, rat, right_unitor, solve,
                              tensor_map, tensor_space, try_inverse)

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=7)


def _random_map(draw, rows, cols):
    entries = draw(st.lists(
        st.lists(rationals, min_size=cols, max_size=cols),
        min_size=rows, max_size=rows))
    dom = Space([f"c{j}" for j in range(cols)])
    cod = Space([f"r{i}" for i in range(rows)])
    return LinMap.from_rows(dom, cod, entries)


maps_2x3 = st.builds(
    lambda rows: LinMap.from_rows(Space(["a", "b", "c"]), Space(["p", "q"]), rows),
    st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=2, max_size=2))

square_3 = st.builds(
    lambda rows: LinMap.from_rows(Space(["a", "b", "c"]), Space(["a", "b", "c"]), rows),
    st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3))


def to_sympy(m: LinMap) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(x) for x in row] for row in m.to_rows()])


# -- scalars -------------------------------------------------------------


def test_rat_accepts_exact_forms():
    assert rat(3) == Fraction(3)
    assert rat("2/7") == Fraction(2, 7)
    assert rat(Fraction(-1, 4)) == Fraction(-1, 4)


def test_rat_refuses_floats():
    with pytest.raises(TypeError):
        rat(0.5)


# -- construction and storage -------------------------------------------


def test_dense_and_sparse_agree():
    dom, cod = Space(["a", "b"]), Space(["p", "q", "r"])
    rows = [[1, 0], [Fraction(1, 2), -3], [0, 0]]
    m = LinMap.from_rows(dom, cod, rows)
    assert m == m.with_storage("dense")
    assert m == m.with_storage("sparse")
    assert m.with_storage("dense").to_rows() == m.with_storage("sparse").to_rows()


def test_from_entries_matches_from_rows():
    dom, cod = Space(["a", "b"]), Space(["p", "q"])
    m1 = LinMap.from_rows(dom, cod, [[1, 2], [0, Fraction(5, 3)]])
    m2 = LinMap.from_entries(dom, cod, {(0, 0): 1, (0, 1): 2, (1, 1): "5/3"})
    assert m1 == m2


def test_shape_mismatch_rejected():
    v, w = Space(["a", "b"]), Space(["p"])
    f = LinMap.from_rows(v, w, [[1, 1]])
    with pytest.raises(DimensionMismatch):
        f @ f


# -- tensor structure ----------------------------------------------------


def test_tensor_space_labels_big_endian():
    v, w = Space(["a", "b"]), Space(["x", "y", "z"])
    vw = tensor_space(v, w)
    # first factor is the slow index
    assert vw.labels == ("a⊗x", "a⊗y", "a⊗z", "b⊗x", "b⊗y", "b⊗z")


def test_tensor_entry_is_product():
    v = Space(["a", "b"])
    f = LinMap.from_rows(v, v, [[1, 2], [3, 4]])
    g = LinMap.from_rows(v, v, [[5, 6], [7, 8]])
    fg = tensor_map(f, g)
    for i1 in range(2):
        for i2 in range(2):
            for j1 in range(2):
                for j2 in range(2):
                    assert fg.entry(2 * i1 + i2, 2 * j1 + j2) == \
                        f.entry(i1, j1) * g.entry(i2, j2)


@settings(max_examples=25, deadline=None)
@given(maps_2x3, maps_2x3, square_3, square_3)
def test_tensor_respects_composition(f, g, a, b):
    # (f (x) g)(a (x) b) == fa (x) gb
    assert tensor_map(f, g) @ tensor_map(a, b) == tensor_map(f @ a, g @ b)


def test_flip_involution():
    v, w = Space(["a", "b"]), Space(["x", "y", "z"])
    assert flip(w, v) @ flip(v, w) == LinMap.identity(tensor_space(v, w))


def test_unitors_insert_unit_factor():
    v = Space(["a", "b"])
    lv = left_unitor(v)
    assert lv.dom == v and lv.cod.labels == ("1⊗a", "1⊗b")
    rv = right_unitor(v)
    assert rv.dom == v and rv.cod.labels == ("a⊗1", "b⊗1")
    # both are isomorphisms with identity matrix content
    assert lv.to_rows() == LinMap.identity(v).to_rows()
    assert try_inverse(rv) is not None


def test_composite_map_equals_naive_chain():
    v = Space(["a", "b"])
    f = LinMap.from_rows(v, v, [[0, 1], [1, 1]])
    g = LinMap.from_rows(v, v, [[2, 0], [0, "1/2"]])
    vv = tensor_space(v, v)
    got = composite_map(vv, vv, [[f, g], [g, v]])
    want = tensor_map(g, LinMap.identity(v)) @ tensor_map(f, g)
    assert got == want


# -- rank, kernel, inverse: sympy as the independent referee -------------


@settings(max_examples=30, deadline=None)
@given(maps_2x3)
def test_rank_matches_sympy(m):
    assert rank(m) == to_sympy(m).rank()


@settings(max_examples=30, deadline=None)
@given(maps_2x3)
def test_kernel_matches_sympy_nullspace(m):
    sub = kernel_basis(m)
    null = to_sympy(m).nullspace()
    assert sub.dim == len(null)
    for j in range(sub.dim):
        col = sub.inclusion.column(j)
        vec = sympy.Matrix([[sympy.Rational(col.get(i, 0))]
                            for i in range(m.dom.dim)])
        # membership in the sympy nullspace == annihilated by m
        assert to_sympy(m) * vec == sympy.zeros(m.cod.dim, 1)
    for v in null:
        vec = {i: Fraction(int(v[i].p), int(v[i].q))
               for i in range(m.dom.dim) if v[i] != 0}
        assert sub.contains_vector(vec)


def test_kernel_normal_form_deterministic():
    v = Space([f"e{i}" for i in range(4)])
    w = Space(["r"])
    m = LinMap.from_rows(v, w, [[1, 1, 1, 1]])
    s1, s2 = kernel_basis(m), kernel_basis(m)
    assert s1.inclusion == s2.inclusion
    # leading entry of each column is +1
    for j in range(s1.dim):
        col = s1.inclusion.column(j)
        lead = min(col)
        assert col[lead] == 1


@settings(max_examples=30, deadline=None)
@given(square_3)
def test_inverse_matches_sympy(m):
    inv = try_inverse(m)
    sm = to_sympy(m)
    if sm.det() == 0:
        assert inv is None
    else:
        assert inv is not None
        assert m @ inv == LinMap.identity(m.dom)
        assert inv @ m == LinMap.identity(m.dom)


@settings(max_examples=25, deadline=None)
@given(square_3, st.lists(st.lists(rationals, min_size=1, max_size=1),
                          min_size=3, max_size=3))
def test_solve_produces_exact_solutions(a, brows):
    b = LinMap.from_rows(Space(["s"]), a.cod, brows)
    x = solve(a, b)
    if x is not None:
        assert a @ x == b
    else:
        # no solution means b escapes the column space
        aug = to_sympy(a).row_join(to_sympy(b))
        assert aug.rank() > to_sympy(a).rank()


# -- subspaces -----------------------------------------------------------


def test_corestrict_roundtrip():
    # corestrict squeezes the codomain into the subspace carrier
    v = Space(["a", "b", "c"])
    sub = Subspace(v, [{0: Fraction(1)}, {2: Fraction(1)}], name="ac")
    m = LinMap.from_rows(v, v, [[1, 0, 0], [0, 0, 0], [0, 0, 2]])
    small = sub.corestrict(m)
    assert small.dom == v and small.cod == sub.space
    assert sub.inclusion @ small == m


def test_corestrict_rejects_escaping_image():
    v = Space(["a", "b"])
    sub = Subspace(v, [{0: Fraction(1)}], name="a")
    rot = LinMap.from_rows(v, v, [[0, 1], [1, 0]])
    with pytest.raises(ClosureFailure):
        sub.corestrict(rot)


def test_subspace_equality_ignores_basis_choice():
    v = Space(["a", "b", "c"])
    s1 = Subspace(v, [{0: Fraction(1)}, {1: Fraction(1)}])
    s2 = Subspace(v, [{0: Fraction(1), 1: Fraction(1)}, {1: Fraction(2)}])
    assert s1.equals(s2)
    assert full_subspace(v).dim == 3


def test_iso_map_relabels():
    v, w = Space(["a", "b"]), Space(["x", "y"])
    assert iso_map(v, w) @ iso_map(w, v) == LinMap.identity(w)
