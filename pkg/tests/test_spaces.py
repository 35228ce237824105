from itertools import combinations_with_replacement
from math import comb

import pytest

from twisthom.spaces import (
    FiniteCategory,
    OrderedComplex,
    full_simplex,
    intersection,
    nerve_slice,
    standard_simplex_slice,
    union,
    validate_category,
    validate_complex,
    validate_slice,
)


def edge():
    return OrderedComplex.from_facets(["a", "b"], [["a", "b"]])


def triangle_boundary():
    return OrderedComplex.from_facets(["a", "b", "c"], [["a", "b"], ["b", "c"], ["a", "c"]])


def arrow_category():
    return FiniteCategory(["a", "b"], [("f", "a", "b")])


def test_validate_complex():
    assert validate_complex(edge()).ok
    broken = OrderedComplex(["a", "b"], [("a", "b")])
    rep = validate_complex(broken)
    assert not rep.ok
    assert any("missing face" in msg for msg in rep.violations)
    wrong_order = OrderedComplex(["a", "b"], [("a",), ("b",), ("b", "a")])
    rep = validate_complex(wrong_order)
    assert any("not strictly increasing" in msg for msg in rep.violations)


def test_validate_category():
    one = FiniteCategory(["a"], [])
    assert validate_category(one).ok
    assert validate_category(arrow_category()).ok
    # two composable non-identity arrows without a table entry
    broken = FiniteCategory(["a", "b", "c"],
                            [("f", "a", "b"), ("g", "b", "c")], {})
    rep = validate_category(broken)
    assert not rep.ok
    assert any("missing composite" in msg for msg in rep.violations)
    fixed = FiniteCategory(["a", "b", "c"],
                           [("f", "a", "b"), ("g", "b", "c"), ("gf", "a", "c")],
                           {("g", "f"): "gf"})
    assert validate_category(fixed).ok


def test_enumerate_paths_edge():
    K = edge()
    assert K.paths(0) == (("a",), ("b",))
    assert K.paths(1) == (("a", "a"), ("a", "b"), ("b", "b"))
    assert K.paths(2) == (("a", "a", "a"), ("a", "a", "b"), ("a", "b", "b"), ("b", "b", "b"))
    assert K.paths(2) == K.paths(2)  # deterministic and cached


def test_enumerate_paths_point_category():
    C = FiniteCategory(["a"], [])
    for n in range(4):
        assert C.paths(n) == (C.constant_path("a", n),)


def test_path_counts_against_recursive_oracle():
    # independent count: sum over simplices of the surjective monotone
    # tuples onto that simplex, i.e. C(n, |s|-1) compositions
    for K in (edge(), triangle_boundary(),
              OrderedComplex.from_facets(["a", "b", "c"], [["a", "b", "c"]])):
        for n in range(4):
            expected = sum(comb(n, len(s) - 1) for s in K.simplices)
            assert len(K.paths(n)) == expected


def test_faces_and_degeneracies_complex():
    K = edge()
    assert K.face(("a", "b"), 1) == ("a",)
    assert K.face(("a", "a", "b"), 0) == ("a", "b")
    assert K.degeneracy(("a", "b"), 0) == ("a", "a", "b")
    assert K.face(K.degeneracy(("a", "b"), 0), 0) == ("a", "b")
    with pytest.raises(ValueError):
        K.face(("a", "b"), 2)
    with pytest.raises(ValueError):
        K.face(("a",), 0)


def test_faces_and_degeneracies_category():
    C = FiniteCategory(["a", "b", "c"],
                       [("f", "a", "b"), ("g", "b", "c"), ("gf", "a", "c")],
                       {("g", "f"): "gf"})
    p = ("a", "f", "b", "g", "c")
    assert C.face(p, 1) == ("a", "gf", "c")
    assert C.face(p, 0) == ("b", "g", "c")
    assert C.face(p, 2) == ("a", "f", "b")
    q = ("a", "f", "b")
    assert C.degeneracy(q, 1) == ("a", "f", "b", "id_b", "b")
    assert C.face(C.degeneracy(q, 1), 1) == q
    assert C.face(C.degeneracy(q, 1), 2) == q


def test_nerve_slice_counts_and_validity():
    point = OrderedComplex.from_facets(["p"], [])
    S = nerve_slice(point, 3)
    assert S.counts() == (1, 1, 1, 1)
    assert validate_slice(S).ok

    S = nerve_slice(edge(), 2, basepoint="a")
    assert S.counts() == (2, 3, 4)
    assert validate_slice(S).ok

    C = arrow_category()
    S = nerve_slice(C, 1, basepoint="a")
    assert S.cells(0) == (("a",), ("b",))
    assert set(S.cells(1)) == {("a", "id_a", "a"), ("a", "f", "b"), ("b", "id_b", "b")}
    assert validate_slice(S).ok


def test_nerve_slice_category_deeper():
    C = arrow_category()
    S = nerve_slice(C, 3, basepoint="a")
    assert validate_slice(S).ok


def test_standard_simplex_slice():
    S = standard_simplex_slice(0, 3)
    assert S.counts() == (1, 1, 1, 1)
    S1 = standard_simplex_slice(1, 2)
    assert S1.cells(1) == ((0, 0), (0, 1), (1, 1))
    S2 = standard_simplex_slice(2, 3)
    assert len(S2.cells(1)) == 6
    assert validate_slice(S2).ok
    # cells agree with paths of the full simplex complex
    assert S2.cells(2) == full_simplex(2).paths(2)
    assert S2.cells(2) == tuple(combinations_with_replacement(range(3), 3))


def test_validate_slice_catches_corruption():
    S = nerve_slice(edge(), 2, basepoint="a")
    faces = {k: dict(v) for k, v in S._faces.items()}
    faces[(2, 1)][("a", "a", "b")] = ("b", "b")  # wrong target
    bad = type(S)(S.cap, [S.cells(n) for n in range(S.cap + 1)], faces,
                  S._degeneracies, S.basepoints)
    rep = validate_slice(bad)
    assert not rep.ok
    assert any("Delta identity" in m or "d_" in m for m in rep.violations)


def test_adjacency():
    assert edge().adjacency() == frozenset({frozenset({"a", "b"})})
    two_points = OrderedComplex.from_facets(["a", "b"], [])
    assert two_points.adjacency() == frozenset()
    assert arrow_category().adjacency() == frozenset({frozenset({"a", "b"})})


def test_cone_complex():
    pt = OrderedComplex.from_facets(["b"], [])
    CK = pt.cone("a")
    assert CK == edge()
    edge_bc = OrderedComplex.from_facets(["b", "c"], [["b", "c"]])
    tri = edge_bc.cone("a")
    assert ("a", "b", "c") in tri.simplices
    assert validate_complex(tri).ok
    with pytest.raises(ValueError):
        edge().cone("a")


def test_cone_category():
    C = arrow_category()
    CC = C.cone("c")
    assert validate_category(CC).ok
    new_arrows = [n for n in CC.arrow_names()
                  if not CC.is_identity(n) and n not in C.arrow_names()]
    assert len(new_arrows) == 2
    # composing f after the cone arrow into a gives the cone arrow into b
    e_a = CC.arrows_between("c", "a")[0]
    assert CC.compose("f", e_a) == CC.arrows_between("c", "b")[0]


def test_union_intersection():
    k1 = OrderedComplex.from_facets(["a", "b"], [["a", "b"]])
    k2 = OrderedComplex.from_facets(["b", "c"], [["b", "c"]])
    u = union(k1, k2)
    assert u.vertices == ("a", "b", "c")
    assert ("a", "b") in u.simplices and ("b", "c") in u.simplices
    i = intersection(k1, k2)
    assert i.vertices == ("b",)
    assert i.simplices == frozenset({("b",)})
    assert union(k1, k1) == k1
    assert intersection(k1, k1) == k1
    disjoint = intersection(OrderedComplex.from_facets(["a"], []),
                            OrderedComplex.from_facets(["b"], []))
    assert disjoint.vertices == ()
    with pytest.raises(ValueError):
        union(OrderedComplex.from_facets(["a", "b"], []),
              OrderedComplex.from_facets(["b", "a"], []))


def test_delta_identity_exhaustive_on_nerves():
    spaces = [edge(), triangle_boundary(), arrow_category()]
    for A in spaces:
        for n in range(2, 4):
            for p in A.paths(n):
                for j in range(n):
                    for i in range(j, n):
                        assert A.face(A.face(p, j), i) == A.face(A.face(p, i + 1), j)


def test_category_face_totality():
    C = FiniteCategory(["a", "b", "c"],
                       [("f", "a", "b"), ("g", "b", "c"), ("gf", "a", "c")],
                       {("g", "f"): "gf"})
    for n in range(1, 4):
        for p in C.paths(n):
            for i in range(n + 1):
                q = C.face(p, i)
                assert q in C.paths(n - 1)
