"""Twisted structures on a space: one endomorphism per vertex.

A twisted structure assigns to every vertex (object) v of the space a
self-map delta_v of the coefficient object, and the maps of two vertices
must commute whenever the vertices are joined by an edge or an arrow.
Nothing is required of non-adjacent pairs.

Three coefficient kinds are supported:

* `TwistedAbelianStructure`  - delta_v is an integer matrix acting on a
  finitely generated abelian group presented by relations;
* `TwistedFiniteGroupStructure` - delta_v is a group endomorphism of a
  finite group given by its multiplication table;
* `TwistedSliceStructure` - delta_v is a levelwise self-map of a tabulated
  simplicial slice, commuting with its structure maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

from .abelian import (
    FgAbelianGroup,
    IntegerMatrix,
    automorphism_inverse,
    endomorphism_certificate,
)
from .groups import FiniteGroupTable
from .spaces import SimplicialSlice, full_simplex


@dataclass(frozen=True)
class TwistReport:
    violations: Tuple[str, ...]
    checked_pairs: Tuple[tuple, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def raise_if_invalid(self) -> "TwistReport":
        if self.violations:
            raise ValueError("invalid twisted structure: " + "; ".join(self.violations[:5]))
        return self


@dataclass(frozen=True)
class NonSingularityCertificate:
    """Per-vertex inverses, each verified against the original map."""

    inverses: Mapping


class TwistedAbelianStructure:
    """delta: V(A) -> End(G) for a finitely generated abelian G."""

    kind = "abelian"

    def __init__(self, space, group: FgAbelianGroup, assignment: Mapping):
        self.space = space
        self.group = group
        self.assignment = dict(assignment)

    def delta(self, v) -> IntegerMatrix:
        return self.assignment[v]

    def replace(self, space=None, assignment=None) -> "TwistedAbelianStructure":
        return TwistedAbelianStructure(space or self.space, self.group,
                                       self.assignment if assignment is None else assignment)

    def identity_map(self) -> IntegerMatrix:
        return IntegerMatrix.identity(self.group.generators)

    def map_valid(self, m: IntegerMatrix):
        n = self.group.generators
        if m.shape != (n, n):
            return False, f"matrix shape {m.shape} != ({n}, {n})"
        if endomorphism_certificate(self.group, m) is None:
            return False, "matrix does not preserve the relation lattice"
        return True, None

    def maps_commute(self, m1: IntegerMatrix, m2: IntegerMatrix) -> bool:
        return self.group.matrices_equal(m1 * m2, m2 * m1)

    def invert_map(self, m: IntegerMatrix) -> Optional[IntegerMatrix]:
        return automorphism_inverse(self.group, m)

    def maps_equal(self, m1, m2) -> bool:
        return self.group.matrices_equal(m1, m2)


class TwistedFiniteGroupStructure:
    """delta: V(A) -> End(G) for a finite group with explicit table.

    Maps are stored as tuples of element indices: m[i] is the image of
    element i.
    """

    kind = "finite"

    def __init__(self, space, group: FiniteGroupTable, assignment: Mapping):
        self.space = space
        self.group = group
        self.assignment = {v: tuple(m) for v, m in assignment.items()}

    def delta(self, v) -> tuple:
        return self.assignment[v]

    def replace(self, space=None, assignment=None) -> "TwistedFiniteGroupStructure":
        return TwistedFiniteGroupStructure(space or self.space, self.group,
                                           self.assignment if assignment is None else assignment)

    def identity_map(self) -> tuple:
        return tuple(range(self.group.order))

    def map_valid(self, m):
        G = self.group
        if len(m) != G.order or any(not 0 <= x < G.order for x in m):
            return False, "map is not a self-map of the element set"
        for a in range(G.order):
            for b in range(G.order):
                if m[G.mul(a, b)] != G.mul(m[a], m[b]):
                    return False, (f"not a homomorphism: images of "
                                   f"{G.elements[a]}*{G.elements[b]} disagree")
        return True, None

    def maps_commute(self, m1, m2) -> bool:
        return all(m1[m2[g]] == m2[m1[g]] for g in range(self.group.order))

    def invert_map(self, m) -> Optional[tuple]:
        if len(set(m)) != self.group.order:
            return None
        inv = [0] * self.group.order
        for g, img in enumerate(m):
            inv[img] = g
        return tuple(inv)

    def maps_equal(self, m1, m2) -> bool:
        return tuple(m1) == tuple(m2)


class TwistedSliceStructure:
    """delta: V(A) -> End(Y) for a tabulated simplicial slice Y.

    Each map is a tuple of per-degree dicts cell -> cell for degrees
    0..Y.cap. Validity means commuting with every face (and degeneracy)
    of Y inside the cap, and fixing the basepoint when Y is pointed.
    """

    kind = "slice"

    def __init__(self, space, target: SimplicialSlice, assignment: Mapping):
        self.space = space
        self.target = target
        self.assignment = {v: tuple(dict(level) for level in m)
                           for v, m in assignment.items()}

    def delta(self, v) -> tuple:
        return self.assignment[v]

    def replace(self, space=None, assignment=None) -> "TwistedSliceStructure":
        return TwistedSliceStructure(space or self.space, self.target,
                                     self.assignment if assignment is None else assignment)

    def identity_map(self) -> tuple:
        return tuple({c: c for c in self.target.cells(n)}
                     for n in range(self.target.cap + 1))

    def map_valid(self, m):
        Y = self.target
        if len(m) != Y.cap + 1:
            return False, "map must cover every degree of the slice"
        for n in range(Y.cap + 1):
            cells = set(Y.cells(n))
            if set(m[n]) != cells or any(img not in cells for img in m[n].values()):
                return False, f"level {n} is not a self-map of the cells"
        for n in range(1, Y.cap + 1):
            for i in range(n + 1):
                for c in Y.cells(n):
                    if m[n - 1][Y.face(n, i, c)] != Y.face(n, i, m[n][c]):
                        return False, f"does not commute with d_{i} at degree {n} on {c!r}"
        if Y.has_degeneracies:
            for n in range(Y.cap):
                for i in range(n + 1):
                    for c in Y.cells(n):
                        if m[n + 1][Y.degeneracy(n, i, c)] != Y.degeneracy(n, i, m[n][c]):
                            return False, f"does not commute with s_{i} at degree {n} on {c!r}"
        if Y.basepoints is not None:
            for n in range(Y.cap + 1):
                if m[n][Y.basepoint(n)] != Y.basepoint(n):
                    return False, f"does not preserve the basepoint at degree {n}"
        return True, None

    def maps_commute(self, m1, m2) -> bool:
        for n in range(self.target.cap + 1):
            for c in self.target.cells(n):
                if m1[n][m2[n][c]] != m2[n][m1[n][c]]:
                    return False
        return True

    def invert_map(self, m) -> Optional[tuple]:
        inv = []
        for n in range(self.target.cap + 1):
            level = m[n]
            if len(set(level.values())) != len(level):
                return None
            inv.append({img: c for c, img in level.items()})
        return tuple(inv)

    def maps_equal(self, m1, m2) -> bool:
        return all(m1[n] == m2[n] for n in range(self.target.cap + 1))


def validate_twist(structure, adjacency=None) -> TwistReport:
    """Check totality, per-vertex validity, and the commuting rule on
    every adjacent pair (and only on adjacent pairs)."""
    space = structure.space
    violations = []
    for v in space.vertex_list():
        if v not in structure.assignment:
            violations.append(f"no map assigned to vertex {v!r}")
    if violations:
        return TwistReport(tuple(violations), ())
    for v in space.vertex_list():
        ok, why = structure.map_valid(structure.delta(v))
        if not ok:
            violations.append(f"map at {v!r} invalid: {why}")
    if adjacency is None:
        adjacency = space.adjacency()
    order = {v: i for i, v in enumerate(space.vertex_list())}
    pairs = sorted((tuple(sorted(p, key=order.__getitem__)) for p in adjacency),
                   key=lambda t: (order[t[0]], order[t[1]]))
    if not violations:
        for v, w in pairs:
            if not structure.maps_commute(structure.delta(v), structure.delta(w)):
                violations.append(f"maps at adjacent pair ({v!r}, {w!r}) do not commute")
    return TwistReport(tuple(violations), tuple(pairs))


def is_nonsingular(structure) -> Optional[NonSingularityCertificate]:
    """All per-vertex inverses, or None at the first singular vertex."""
    inverses: Dict = {}
    for v in structure.space.vertex_list():
        m = structure.delta(v)
        inv = structure.invert_map(m)
        if inv is None:
            return None
        inverses[v] = inv
    return NonSingularityCertificate(inverses)


def restrict(structure, subspace):
    """Restriction of the assignment to a subspace's vertices."""
    for v in subspace.vertex_list():
        if v not in structure.assignment:
            raise ValueError(f"vertex {v!r} has no assigned map")
    return structure.replace(space=subspace,
                             assignment={v: structure.assignment[v]
                                         for v in subspace.vertex_list()})


def regular_extension(structure, apex, delta_apex):
    """Extend a twist to the cone; the apex map must be an automorphism
    commuting with every existing vertex map (the cone joins the apex to
    everything, so the commuting rule applies at every vertex)."""
    if structure.invert_map(delta_apex) is None:
        raise ValueError("apex map must be an automorphism")
    ok, why = structure.map_valid(delta_apex)
    if not ok:
        raise ValueError(f"apex map invalid: {why}")
    for v in structure.space.vertex_list():
        if not structure.maps_commute(delta_apex, structure.delta(v)):
            raise ValueError(f"apex map does not commute with the map at {v!r}")
    cone_space = structure.space.cone(apex)
    assignment = dict(structure.assignment)
    assignment[apex] = delta_apex
    return structure.replace(space=cone_space, assignment=assignment)


def induced_simplex_twist(structure, b):
    """Twist on the full simplex carrying vertex i to delta at the i-th
    vertex of the path b; commuting holds because all vertices of a path
    are pairwise adjacent."""
    space = structure.space
    verts = space.path_vertices(b)
    n = len(verts) - 1
    assignment = {i: structure.delta(verts[i]) for i in range(n + 1)}
    return structure.replace(space=full_simplex(n), assignment=assignment)


def identity_twist(structure_like, space=None):
    """Same-kind structure whose every map is the identity."""
    src = structure_like
    assignment = {v: src.identity_map() for v in (space or src.space).vertex_list()}
    return src.replace(space=space or src.space, assignment=assignment)


def nerve_relabel_map(A, Y: SimplicialSlice, vertex_map: Mapping,
                      arrow_map: Optional[Mapping] = None) -> tuple:
    """Levelwise self-map of a nerve slice induced by relabelling.

    For a complex nerve the paths are relabelled vertexwise; for a
    category nerve objects and arrow names are relabelled (a functor).
    The result is raw map data; `validate_twist` decides whether it is a
    genuine slice morphism.
    """
    out = []
    for n in range(Y.cap + 1):
        level = {}
        for cell in Y.cells(n):
            if arrow_map is None:
                level[cell] = tuple(vertex_map.get(x, x) for x in cell)
            else:
                mapped = []
                for k, x in enumerate(cell):
                    if k % 2 == 0:
                        mapped.append(vertex_map.get(x, x))
                    else:
                        mapped.append(arrow_map.get(x, x))
                level[cell] = tuple(mapped)
        out.append(level)
    return tuple(out)
