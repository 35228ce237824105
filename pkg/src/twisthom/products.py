"""Twisted Cartesian products, twisted smash products, and the fibre
bundle certificate.

The twisted product of a slice Y with the path set of A has cells
(y, x) and faces that twist the Y coordinate by the map of the vertex the
face removes. Local triviality of the coordinate projection is certified
by materialising, for every base path b, the untwisting bijection between
the plain product Y x Delta[n] and the twisted one, and checking that it
intertwines every face and degeneracy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .spaces import SimplicialSlice, full_simplex
from .twist import (
    NonSingularityCertificate,
    TwistedSliceStructure,
    identity_twist,
    induced_simplex_twist,
    is_nonsingular,
    validate_twist,
)

SMASH_POINT = "*"


class TwistedProductSlice(SimplicialSlice):
    """Slice of Y x_delta S(A) with provenance kept for reporting."""

    def __init__(self, cap, cells, faces, degeneracies, basepoints,
                 fibre, base_space, structure):
        super().__init__(cap, cells, faces, degeneracies, basepoints)
        self.fibre = fibre
        self.base_space = base_space
        self.structure = structure

    def project(self, cell):
        return cell[1]


def twisted_product(Y: SimplicialSlice, A, structure: TwistedSliceStructure,
                    cap: int, include_degeneracies: Optional[bool] = None,
                    basepoint=None, check_twist: bool = True) -> TwistedProductSlice:
    """Y x_delta S(A) through degree cap.

    Faces always exist; degeneracies need inverse maps, so they are
    emitted only when the structure is non-singular. Passing
    include_degeneracies=True on a singular structure raises.
    """
    if structure.target is not Y and structure.target != Y:
        raise ValueError("structure does not act on the given fibre")
    if cap > Y.cap:
        raise ValueError(f"cap {cap} exceeds fibre slice cap {Y.cap}")
    if check_twist:
        validate_twist(structure).raise_if_invalid()

    cert = is_nonsingular(structure)
    if include_degeneracies is None:
        include_degeneracies = cert is not None
    if include_degeneracies and cert is None:
        raise ValueError("degeneracies need a non-singular structure")

    cells = [tuple((y, x) for y in Y.cells(n) for x in A.paths(n))
             for n in range(cap + 1)]
    faces = {}
    for n in range(1, cap + 1):
        for i in range(n + 1):
            table = {}
            for (y, x) in cells[n]:
                v = A.path_vertices(x)[i]
                table[(y, x)] = (structure.delta(v)[n - 1][Y.face(n, i, y)],
                                 A.face(x, i))
            faces[(n, i)] = table
    degeneracies = None
    if include_degeneracies:
        degeneracies = {}
        for n in range(cap):
            for i in range(n + 1):
                table = {}
                for (y, x) in cells[n]:
                    v = A.path_vertices(x)[i]
                    table[(y, x)] = (cert.inverses[v][n + 1][Y.degeneracy(n, i, y)],
                                     A.degeneracy(x, i))
                degeneracies[(n, i)] = table
    basepoints = None
    if basepoint is not None:
        if Y.basepoints is None:
            raise ValueError("fibre is not pointed")
        basepoints = [(Y.basepoint(n), A.constant_path(basepoint, n))
                      for n in range(cap + 1)]
    return TwistedProductSlice(cap, cells, faces, degeneracies, basepoints,
                               Y, A, structure)


def twisted_smash(Y: SimplicialSlice, A, structure: TwistedSliceStructure,
                  basepoint, cap: int, check_twist: bool = True) -> SimplicialSlice:
    """Quotient of the twisted product collapsing the two axis subobjects.

    Cells with fibre coordinate at the basepoint, or base coordinate the
    constant basepoint path, all become one point per degree. The
    structure must preserve the fibre basepoint for the collapse to be
    closed under every structure map.
    """
    if Y.basepoints is None:
        raise ValueError("smash needs a pointed fibre")
    if check_twist:
        validate_twist(structure).raise_if_invalid()
        # validate_twist on a pointed fibre already enforces basepoint
        # preservation; re-check explicitly so the error is precise
    for v in structure.space.vertex_list():
        for n in range(Y.cap + 1):
            if structure.delta(v)[n][Y.basepoint(n)] != Y.basepoint(n):
                raise ValueError(f"structure is not reduced: map at {v!r} moves the basepoint")

    product = twisted_product(Y, A, structure, cap, basepoint=basepoint,
                              check_twist=False)

    def collapsed(cell, n):
        y, x = cell
        return y == Y.basepoint(n) or x == A.constant_path(basepoint, n)

    def image(cell, n):
        return SMASH_POINT if collapsed(cell, n) else cell

    # the collapsed subset must be closed under every structure map, or
    # the quotient tables below would not be well defined
    for n in range(1, cap + 1):
        for c in product.cells(n):
            if collapsed(c, n):
                for i in range(n + 1):
                    if not collapsed(product.face(n, i, c), n - 1):
                        raise ValueError(f"collapse not closed under d_{i} at {c!r}")
    if product.has_degeneracies:
        for n in range(cap):
            for c in product.cells(n):
                if collapsed(c, n):
                    for i in range(n + 1):
                        if not collapsed(product.degeneracy(n, i, c), n + 1):
                            raise ValueError(f"collapse not closed under s_{i} at {c!r}")

    cells = [(SMASH_POINT,) + tuple(c for c in product.cells(n) if not collapsed(c, n))
             for n in range(cap + 1)]
    faces = {}
    for n in range(1, cap + 1):
        for i in range(n + 1):
            table = {SMASH_POINT: SMASH_POINT}
            for c in product.cells(n):
                if not collapsed(c, n):
                    table[c] = image(product.face(n, i, c), n - 1)
            faces[(n, i)] = table
    degeneracies = None
    if product.has_degeneracies:
        degeneracies = {}
        for n in range(cap):
            for i in range(n + 1):
                table = {SMASH_POINT: SMASH_POINT}
                for c in product.cells(n):
                    if not collapsed(c, n):
                        table[c] = image(product.degeneracy(n, i, c), n + 1)
                degeneracies[(n, i)] = table
    basepoints = [SMASH_POINT] * (cap + 1)
    return SimplicialSlice(cap, cells, faces, degeneracies, basepoints)


@dataclass(frozen=True)
class MonotoneDecomposition:
    """w as values with multiplicities, plus the missing vertices."""

    values: Tuple[int, ...]
    multiplicities: Tuple[int, ...]
    missing: Tuple[int, ...]


def monotone_decomposition(w: tuple, n: int) -> MonotoneDecomposition:
    values = []
    mults = []
    for x in w:
        if values and values[-1] == x:
            mults[-1] += 1
        else:
            if values and x < values[-1]:
                raise ValueError(f"{w!r} is not monotone")
            values.append(x)
            mults.append(1)
    present = set(values)
    if any(not 0 <= x <= n for x in present):
        raise ValueError(f"{w!r} is not a cell of the standard {n}-simplex")
    missing = tuple(i for i in range(n + 1) if i not in present)
    return MonotoneDecomposition(tuple(values), tuple(mults), missing)


@dataclass(frozen=True)
class UntwistingMap:
    """Per-degree bijection Y_q x Delta[n]_q -> itself, fixing the second
    coordinate, that untwists the faces over the base path b."""

    b: tuple
    n: int
    maps: Tuple[dict, ...]
    inverse_maps: Tuple[dict, ...]

    def apply(self, q: int, cell):
        return self.maps[q][cell]

    def unapply(self, q: int, cell):
        return self.inverse_maps[q][cell]


def untwisting_iso(b: tuple, Y: SimplicialSlice, structure: TwistedSliceStructure,
                   cap: int, cert: Optional[NonSingularityCertificate] = None) -> UntwistingMap:
    """The untwisting bijection over the base path b.

    For a cell w of Delta[n] with value j repeated l times the Y factor
    picks up the (l-1)-fold inverse of the map at vertex j, and one
    forward application for every vertex missing from w. All the maps in
    play commute, so the application order is immaterial.
    """
    ind = induced_simplex_twist(structure, b)
    if cert is None:
        cert = is_nonsingular(ind)
        if cert is None:
            raise ValueError("untwisting needs a non-singular structure")
    n = len(structure.space.path_vertices(b)) - 1
    simplex = full_simplex(n)
    maps = []
    inverse_maps = []
    for q in range(cap + 1):
        fwd = {}
        bwd = {}
        for w in simplex.paths(q):
            dec = monotone_decomposition(w, n)
            steps = []          # (map, times) pairs, all commuting
            inv_steps = []
            for j, l in zip(dec.values, dec.multiplicities):
                if l > 1:
                    steps.append((cert.inverses[j][q], l - 1))
                    inv_steps.append((ind.delta(j)[q], l - 1))
            for i in dec.missing:
                steps.append((ind.delta(i)[q], 1))
                inv_steps.append((cert.inverses[i][q], 1))
            for y in Y.cells(q):
                img = y
                for table, times in steps:
                    for _ in range(times):
                        img = table[img]
                fwd[(y, w)] = (img, w)
                pre = y
                for table, times in inv_steps:
                    for _ in range(times):
                        pre = table[pre]
                bwd[(y, w)] = (pre, w)
        maps.append(fwd)
        inverse_maps.append(bwd)
    return UntwistingMap(b, n, tuple(maps), tuple(inverse_maps))


@dataclass(frozen=True)
class BundleReport:
    violations: Tuple[str, ...]
    base_paths_checked: int
    cells_checked: int

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_bundle_local_triviality(A, Y: SimplicialSlice,
                                   structure: TwistedSliceStructure,
                                   cap: int, base_max: Optional[int] = None,
                                   check_twist: bool = True) -> BundleReport:
    """Certify that the coordinate projection of Y x_delta S(A) is a
    simplicial fibre bundle with fibre Y.

    For every base path b of degree <= base_max the untwisting map is
    checked to be bijective in each degree <= cap and to carry the plain
    product structure maps to the twisted ones, exhaustively over cells
    and indices. The projection itself is checked to commute with every
    structure map.
    """
    if check_twist:
        validate_twist(structure).raise_if_invalid()
    cert = is_nonsingular(structure)
    if cert is None:
        raise ValueError("bundle check needs a non-singular structure")
    if base_max is None:
        base_max = max(cap - 1, 0)

    violations = []
    cells_checked = 0

    product = twisted_product(Y, A, structure, cap, include_degeneracies=True,
                              check_twist=False)
    for n in range(1, cap + 1):
        for i in range(n + 1):
            for c in product.cells(n):
                cells_checked += 1
                if product.face(n, i, c)[1] != A.face(c[1], i):
                    violations.append(f"projection fails d_{i} at degree {n} on {c!r}")
    for n in range(cap):
        for i in range(n + 1):
            for c in product.cells(n):
                cells_checked += 1
                if product.degeneracy(n, i, c)[1] != A.degeneracy(c[1], i):
                    violations.append(f"projection fails s_{i} at degree {n} on {c!r}")

    base_paths = 0
    for nb in range(base_max + 1):
        for b in A.paths(nb):
            base_paths += 1
            ind = induced_simplex_twist(structure, b)
            simplex = ind.space
            alpha = untwisting_iso(b, Y, structure, cap)
            tw = twisted_product(Y, simplex, ind, cap,
                                 include_degeneracies=True, check_twist=False)
            un = twisted_product(Y, simplex, identity_twist(ind), cap,
                                 include_degeneracies=True, check_twist=False)
            for q in range(cap + 1):
                level = alpha.maps[q]
                if len(set(level.values())) != len(level):
                    violations.append(f"alpha_{b!r} not injective at degree {q}")
                    continue
                for c in un.cells(q):
                    cells_checked += 1
                    if alpha.unapply(q, alpha.apply(q, c)) != c:
                        violations.append(f"alpha_{b!r} inverse fails at degree {q} on {c!r}")
            for q in range(1, cap + 1):
                for i in range(q + 1):
                    for c in un.cells(q):
                        cells_checked += 1
                        if tw.face(q, i, alpha.apply(q, c)) != \
                                alpha.apply(q - 1, un.face(q, i, c)):
                            violations.append(
                                f"alpha_{b!r} fails to intertwine d_{i} at degree {q} on {c!r}")
            for q in range(cap):
                for i in range(q + 1):
                    for c in un.cells(q):
                        cells_checked += 1
                        if tw.degeneracy(q, i, alpha.apply(q, c)) != \
                                alpha.apply(q + 1, un.degeneracy(q, i, c)):
                            violations.append(
                                f"alpha_{b!r} fails to intertwine s_{i} at degree {q} on {c!r}")
            if len(violations) > 20:
                return BundleReport(tuple(violations), base_paths, cells_checked)

    return BundleReport(tuple(violations), base_paths, cells_checked)
