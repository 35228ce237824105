import pytest

from twisthom.spaces import (
    FiniteCategory,
    OrderedComplex,
    nerve_slice,
    standard_simplex_slice,
    validate_slice,
)
from twisthom.products import (
    MonotoneDecomposition,
    monotone_decomposition,
    twisted_product,
    twisted_smash,
    untwisting_iso,
    verify_bundle_local_triviality,
)
from twisthom.twist import (
    TwistedSliceStructure,
    identity_twist,
    nerve_relabel_map,
    validate_twist,
)


def edge():
    return OrderedComplex.from_facets(["a", "b"], [["a", "b"]])


def cyclic_category(n):
    arrows = [(f"g{k}", "w", "w") for k in range(1, n)]
    compose = {}
    for a in range(1, n):
        for b in range(1, n):
            s = (a + b) % n
            compose[(f"g{a}", f"g{b}")] = f"g{s}" if s else "id_w"
    return FiniteCategory(["w"], arrows, compose)


def scale_structure(base, n, cap, scales):
    """Twist on `base` acting on the nerve of Z/n by arrowwise scaling."""
    cat = cyclic_category(n)
    Y = nerve_slice(cat, cap, basepoint="w")
    assignment = {}
    for v, u in scales.items():
        arrow_map = {f"g{k}": (f"g{(u * k) % n}" if (u * k) % n else "id_w")
                     for k in range(1, n)}
        assignment[v] = nerve_relabel_map(cat, Y, {}, arrow_map)
    return Y, TwistedSliceStructure(base, Y, assignment)


def swap_cycle_structure(cap):
    """Non-commuting permutation twist on the nerve of three discrete points."""
    pts = OrderedComplex.from_facets(["x", "y", "z"], [])
    Y = nerve_slice(pts, cap, basepoint="x")
    Y.basepoints = None  # the permutations below do not fix any point
    swap = nerve_relabel_map(pts, Y, {"x": "y", "y": "x"})
    cycle = nerve_relabel_map(pts, Y, {"x": "y", "y": "z", "z": "x"})
    return Y, TwistedSliceStructure(edge(), Y, {"a": swap, "b": cycle})


def test_identity_twist_gives_plain_product():
    Y = standard_simplex_slice(1, 3)
    s = identity_twist(TwistedSliceStructure(edge(), Y, {}))
    P = twisted_product(Y, edge(), s, 3)
    assert validate_slice(P).ok
    for n in range(1, 4):
        for c in P.cells(n):
            for i in range(n + 1):
                y, x = c
                assert P.face(n, i, c) == (Y.face(n, i, y), edge().face(x, i))


def test_product_with_point_fibre_matches_nerve():
    Y = standard_simplex_slice(0, 3)
    A = edge()
    s = identity_twist(TwistedSliceStructure(A, Y, {}))
    P = twisted_product(Y, A, s, 3)
    N = nerve_slice(A, 3, basepoint="a")
    assert P.counts() == N.counts()
    for n in range(1, 4):
        for (y, x) in P.cells(n):
            for i in range(n + 1):
                assert P.face(n, i, (y, x))[1] == N.face(n, i, x)


def test_twisted_product_passes_validate_slice():
    Y, s = scale_structure(edge(), 5, 3, {"a": 2, "b": 3})
    assert validate_twist(s).ok
    P = twisted_product(Y, edge(), s, 3)
    assert P.has_degeneracies
    assert validate_slice(P).ok


def test_noncommuting_twist_breaks_delta_identity():
    Y, s = swap_cycle_structure(3)
    assert not validate_twist(s).ok
    with pytest.raises(ValueError):
        twisted_product(Y, edge(), s, 3)
    forced = twisted_product(Y, edge(), s, 3, check_twist=False,
                             include_degeneracies=False)
    rep = validate_slice(forced)
    assert not rep.ok
    assert any("Delta identity" in v for v in rep.violations)


def test_monotone_decomposition():
    assert monotone_decomposition((0, 1, 2), 2) == MonotoneDecomposition((0, 1, 2), (1, 1, 1), ())
    assert monotone_decomposition((0, 0, 1), 1) == MonotoneDecomposition((0, 1), (2, 1), ())
    assert monotone_decomposition((0,), 1) == MonotoneDecomposition((0,), (1,), (1,))
    with pytest.raises(ValueError):
        monotone_decomposition((1, 0), 1)


def test_untwisting_map_examples():
    Y, s = scale_structure(edge(), 5, 3, {"a": 2, "b": 3})
    alpha = untwisting_iso(("a", "b"), Y, s, 3)

    # non-degenerate top cell: no twisting at all
    for y in Y.cells(1):
        assert alpha.apply(1, (y, (0, 1))) == (y, (0, 1))

    # w = (0,0,1): one inverse application of the map at vertex 0 (= delta_a)
    g1 = ("w", "g1", "w", "id_w", "w")
    img, w = alpha.apply(2, ((g1), (0, 0, 1)))
    assert w == (0, 0, 1)
    inv_a = {v: k for k, v in {1: 2, 2: 4, 3: 1, 4: 3}.items()}  # inverse of *2 mod 5
    assert img == ("w", f"g{inv_a[1]}", "w", "id_w", "w")

    # w = (0,0): delta_a applied inversely once (*3) and the missing
    # vertex 1 applies delta_b (*3) forward, so arrows scale by 9 = 4 mod 5
    g1_1 = ("w", "g1", "w")
    img, w = alpha.apply(1, (g1_1, (0, 0)))
    assert w == (0, 0)
    assert img == ("w", "g4", "w")

    # w = (1,1): delta_b applied inversely once (*2) and missing vertex 0
    # applies delta_a (*2), so arrows scale by 4
    img, w = alpha.apply(1, (g1_1, (1, 1)))
    assert img == ("w", "g4", "w")


def test_bundle_local_triviality_small():
    Y, s = scale_structure(edge(), 3, 3, {"a": 2, "b": 2})
    rep = verify_bundle_local_triviality(edge(), Y, s, cap=3, base_max=2)
    assert rep.ok
    assert rep.base_paths_checked == 2 + 3 + 4


def test_bundle_local_triviality_category_base():
    C = FiniteCategory(["a", "b"], [("f", "a", "b")])
    Y, s = scale_structure(C, 5, 3, {"a": 2, "b": 3})
    rep = verify_bundle_local_triviality(C, Y, s, cap=3, base_max=2)
    assert rep.ok


def test_bundle_check_rejects_singular():
    cat = cyclic_category(4)
    Y = nerve_slice(cat, 2, basepoint="w")
    arrow_map = {f"g{k}": (f"g{(2 * k) % 4}" if (2 * k) % 4 else "id_w")
                 for k in range(1, 4)}
    sing = TwistedSliceStructure(edge(), Y,
                                 {"a": nerve_relabel_map(cat, Y, {}, arrow_map),
                                  "b": identity_twist(TwistedSliceStructure(edge(), Y, {})).delta("a")})
    assert validate_twist(sing).ok
    with pytest.raises(ValueError):
        verify_bundle_local_triviality(edge(), Y, sing, cap=2)


def test_smash_point_cases():
    A = edge()
    Y0 = standard_simplex_slice(0, 3)
    s0 = identity_twist(TwistedSliceStructure(A, Y0, {}))
    sm = twisted_smash(Y0, A, s0, "a", 3)
    assert sm.counts() == (1, 1, 1, 1)

    pt = OrderedComplex.from_facets(["p"], [])
    Y1 = standard_simplex_slice(1, 3)
    s1 = identity_twist(TwistedSliceStructure(pt, Y1, {}))
    sm = twisted_smash(Y1, pt, s1, "p", 3)
    assert sm.counts() == (1, 1, 1, 1)


def test_smash_cell_count_and_validity():
    A = edge()
    Y = standard_simplex_slice(1, 3)
    s = identity_twist(TwistedSliceStructure(A, Y, {}))
    sm = twisted_smash(Y, A, s, "a", 3)
    # degree 1: 3*3 product cells, minus 3 with fibre at basepoint and 3
    # over the constant path (one cell double-counted), plus the smash
    # point itself
    assert len(sm.cells(1)) == 9 - 5 + 1
    assert validate_slice(sm).ok


def test_smash_with_nontrivial_twist():
    Y, s = scale_structure(edge(), 5, 3, {"a": 2, "b": 3})
    sm = twisted_smash(Y, edge(), s, "a", 3)
    assert validate_slice(sm).ok
    assert sm.basepoints is not None


def test_smash_requires_reduced_structure():
    pts = OrderedComplex.from_facets(["x", "y"], [])
    Y = nerve_slice(pts, 2, basepoint="x")
    swap = nerve_relabel_map(pts, Y, {"x": "y", "y": "x"})
    s = TwistedSliceStructure(edge(), Y, {"a": swap, "b": swap})
    with pytest.raises(ValueError):
        twisted_smash(Y, edge(), s, "a", 2)
