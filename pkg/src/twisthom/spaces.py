"""Input spaces and their path simplicial sets.

Two kinds of space are supported: ordered simplicial complexes and finite
categories. Both expose the same path interface: the degree-n paths of a
complex are the monotone (n+1)-tuples of vertices supported on a simplex,
the degree-n paths of a category are the chains of n composable arrows
written as alternating object/arrow tuples. Faces drop a vertex (composing
the surrounding arrows in the category case), degeneracies double a vertex
(inserting an identity arrow).

Truncated tabulations of simplicial sets live in `SimplicialSlice`, with an
exhaustive validator for the Delta identity and, when degeneracies are
present, all five simplicial identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple


@dataclass(frozen=True)
class ValidationReport:
    subject: str
    violations: Tuple[str, ...]
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def raise_if_invalid(self) -> "ValidationReport":
        if self.violations:
            raise ValueError(f"{self.subject}: " + "; ".join(self.violations[:5]))
        return self


class OrderedComplex:
    """Simplicial complex whose vertex set carries the listed total order.

    Simplices are stored as strictly increasing vertex tuples and must be
    closed under taking subsets; `validate` reports every violation instead
    of repairing anything.
    """

    def __init__(self, vertices: Sequence, simplices: Iterable[tuple]):
        self.vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self.simplices = frozenset(tuple(s) for s in simplices)
        self._path_cache: Dict[int, tuple] = {}

    @classmethod
    def from_facets(cls, vertices: Sequence, facets: Iterable[Sequence]) -> "OrderedComplex":
        """Close the given facets (and all vertices) under taking faces."""
        order = {v: i for i, v in enumerate(vertices)}
        simplices = {(v,) for v in vertices}
        for facet in facets:
            for v in facet:
                if v not in order:
                    raise ValueError(f"facet vertex {v!r} not in vertex list")
            tup = tuple(sorted(set(facet), key=order.__getitem__))
            for k in range(1, len(tup) + 1):
                simplices.update(combinations(tup, k))
        return cls(vertices, simplices)

    # -- path interface -------------------------------------------------

    def vertex_index(self, v) -> int:
        return self._index[v]

    def has_vertex(self, v) -> bool:
        return v in self._index

    def vertex_list(self) -> tuple:
        return self.vertices

    def path_degree(self, p: tuple) -> int:
        return len(p) - 1

    def path_vertices(self, p: tuple) -> tuple:
        return p

    def constant_path(self, v, n: int) -> tuple:
        return (v,) * (n + 1)

    def paths(self, n: int) -> tuple:
        """All monotone (n+1)-tuples supported on a simplex, lexicographic."""
        if n < 0:
            raise ValueError("negative degree")
        if n in self._path_cache:
            return self._path_cache[n]
        out = []
        verts = self.vertices

        def extend(prefix, support):
            if len(prefix) == n + 1:
                out.append(tuple(prefix))
                return
            start = self._index[prefix[-1]]
            for v in verts[start:]:
                if v == prefix[-1]:
                    extend(prefix + [v], support)
                elif support + (v,) in self.simplices:
                    extend(prefix + [v], support + (v,))

        for v in verts:
            if (v,) in self.simplices:
                extend([v], (v,))
        result = tuple(out)
        self._path_cache[n] = result
        return result

    def face(self, p: tuple, i: int) -> tuple:
        n = len(p) - 1
        if n < 1:
            raise ValueError("face of a degree-0 path")
        if not 0 <= i <= n:
            raise ValueError(f"face index {i} out of range for degree {n}")
        return p[:i] + p[i + 1 :]

    def degeneracy(self, p: tuple, i: int) -> tuple:
        n = len(p) - 1
        if not 0 <= i <= n:
            raise ValueError(f"degeneracy index {i} out of range for degree {n}")
        return p[: i + 1] + p[i:]

    # -- structure ------------------------------------------------------

    def adjacency(self) -> frozenset:
        """Unordered pairs spanning a 1-simplex."""
        return frozenset(frozenset(s) for s in self.simplices if len(s) == 2)

    def cone(self, apex) -> "OrderedComplex":
        """apex * K with the apex first in the total order."""
        if apex in self._index:
            raise ValueError(f"apex {apex!r} already a vertex")
        simplices = set(self.simplices)
        simplices.add((apex,))
        simplices.update((apex,) + s for s in self.simplices)
        return OrderedComplex((apex,) + self.vertices, simplices)

    def __eq__(self, other) -> bool:
        return (isinstance(other, OrderedComplex)
                and self.vertices == other.vertices
                and self.simplices == other.simplices)

    def __hash__(self) -> int:
        return hash((self.vertices, self.simplices))

    def __repr__(self) -> str:
        return f"OrderedComplex({len(self.vertices)} vertices, {len(self.simplices)} simplices)"


def validate_complex(K: OrderedComplex) -> ValidationReport:
    violations = []
    seen = set()
    for v in K.vertices:
        if v in seen:
            violations.append(f"duplicate vertex {v!r}")
        seen.add(v)
    checked = 0
    for s in sorted(K.simplices, key=lambda t: (len(t), tuple(map(repr, t)))):
        checked += 1
        if not s:
            violations.append("empty simplex tuple")
            continue
        if any(v not in seen for v in s):
            violations.append(f"simplex {s!r} uses unknown vertex")
            continue
        idx = [K.vertex_index(v) for v in s]
        if any(a >= b for a, b in zip(idx, idx[1:])):
            violations.append(f"simplex {s!r} is not strictly increasing")
            continue
        if len(s) > 1:
            for k in range(len(s)):
                f = s[:k] + s[k + 1 :]
                if f not in K.simplices:
                    violations.append(f"missing face {f!r} of {s!r}")
    for v in K.vertices:
        if (v,) not in K.simplices:
            violations.append(f"vertex {v!r} missing as a 0-simplex")
    return ValidationReport("complex", tuple(violations), checked)


class FiniteCategory:
    """Finite category given by objects, named arrows and a composition table.

    Identity arrows are implicit: every object v carries `id_<v>`. The
    composition table only needs the composable pairs of non-identity
    arrows; identity laws are resolved automatically.
    """

    def __init__(self, objects: Sequence, morphisms: Iterable[tuple],
                 compose: Mapping[tuple, str] = ()):
        self.objects = tuple(objects)
        self._obj_index = {v: i for i, v in enumerate(self.objects)}
        self._identity = {v: f"id_{v}" for v in self.objects}
        self._identity_names = frozenset(self._identity.values())
        self._arrows: Dict[str, tuple] = {}
        for v in self.objects:
            self._arrows[self._identity[v]] = (v, v)
        self._declared = []
        for name, src, tgt in morphisms:
            self._declared.append((name, src, tgt))
            self._arrows[name] = (src, tgt)
        self._compose = dict(compose)
        self._path_cache: Dict[int, tuple] = {}
        self._from_cache: Dict[object, tuple] = {}

    def is_identity(self, name: str) -> bool:
        return name in self._identity_names

    def identity_arrow(self, v) -> str:
        return self._identity[v]

    def arrow_source(self, name: str):
        return self._arrows[name][0]

    def arrow_target(self, name: str):
        return self._arrows[name][1]

    def arrow_names(self) -> tuple:
        return tuple(self._arrows)

    def arrows_from(self, v) -> tuple:
        if v not in self._from_cache:
            names = sorted(n for n, (s, _) in self._arrows.items() if s == v)
            self._from_cache[v] = tuple(names)
        return self._from_cache[v]

    def arrows_between(self, src, tgt) -> tuple:
        return tuple(n for n in self.arrows_from(src) if self._arrows[n][1] == tgt)

    def compose(self, g: str, f: str) -> str:
        """g after f; defined when source(g) == target(f)."""
        if self.arrow_source(g) != self.arrow_target(f):
            raise ValueError(f"arrows {g!r} after {f!r} are not composable")
        if self.is_identity(f):
            return g
        if self.is_identity(g):
            return f
        try:
            return self._compose[(g, f)]
        except KeyError:
            raise ValueError(f"composition table has no entry for {g!r} after {f!r}") from None

    # -- path interface -------------------------------------------------

    def vertex_index(self, v) -> int:
        return self._obj_index[v]

    def has_vertex(self, v) -> bool:
        return v in self._obj_index

    def vertex_list(self) -> tuple:
        return self.objects

    def path_degree(self, p: tuple) -> int:
        return (len(p) - 1) // 2

    def path_vertices(self, p: tuple) -> tuple:
        return p[0::2]

    def constant_path(self, v, n: int) -> tuple:
        out = [v]
        for _ in range(n):
            out.append(self._identity[v])
            out.append(v)
        return tuple(out)

    def paths(self, n: int) -> tuple:
        """All chains of n composable arrows, sorted by object/arrow labels."""
        if n < 0:
            raise ValueError("negative degree")
        if n in self._path_cache:
            return self._path_cache[n]
        if n == 0:
            result = tuple((v,) for v in self.objects)
        else:
            result = tuple(p + (a, self.arrow_target(a))
                           for p in self.paths(n - 1)
                           for a in self.arrows_from(p[-1]))
        self._path_cache[n] = result
        return result

    def face(self, p: tuple, i: int) -> tuple:
        n = self.path_degree(p)
        if n < 1:
            raise ValueError("face of a degree-0 path")
        if not 0 <= i <= n:
            raise ValueError(f"face index {i} out of range for degree {n}")
        if i == 0:
            return p[2:]
        if i == n:
            return p[:-2]
        left = p[2 * i - 1]   # alpha_i : v_{i-1} -> v_i
        right = p[2 * i + 1]  # alpha_{i+1} : v_i -> v_{i+1}
        return p[: 2 * i - 1] + (self.compose(right, left),) + p[2 * i + 2 :]

    def degeneracy(self, p: tuple, i: int) -> tuple:
        n = self.path_degree(p)
        if not 0 <= i <= n:
            raise ValueError(f"degeneracy index {i} out of range for degree {n}")
        v = p[2 * i]
        return p[: 2 * i + 1] + (self._identity[v], v) + p[2 * i + 1 :]

    # -- structure ------------------------------------------------------

    def adjacency(self) -> frozenset:
        """Pairs of distinct objects joined by a non-identity arrow."""
        pairs = set()
        for name, (src, tgt) in self._arrows.items():
            if not self.is_identity(name) and src != tgt:
                pairs.add(frozenset((src, tgt)))
        return frozenset(pairs)

    def cone(self, apex) -> "FiniteCategory":
        """Add an initial object with one arrow to every existing object."""
        if apex in self._obj_index:
            raise ValueError(f"apex {apex!r} already an object")
        cone_arrow = {v: f"e_{apex}_{v}" for v in self.objects}
        for name in cone_arrow.values():
            if name in self._arrows or name == f"id_{apex}":
                raise ValueError(f"cone arrow name {name!r} collides")
        morphisms = list(self._declared)
        morphisms.extend((cone_arrow[v], apex, v) for v in self.objects)
        compose = dict(self._compose)
        for name, (src, tgt) in self._arrows.items():
            if not self.is_identity(name):
                compose[(name, cone_arrow[src])] = cone_arrow[tgt]
        return FiniteCategory((apex,) + self.objects, morphisms, compose)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteCategory)
                and self.objects == other.objects
                and self._arrows == other._arrows
                and self._compose == other._compose)

    def __hash__(self) -> int:
        return hash((self.objects, tuple(sorted(self._arrows.items()))))

    def __repr__(self) -> str:
        return f"FiniteCategory({len(self.objects)} objects, {len(self._arrows)} arrows)"


def validate_category(C: FiniteCategory) -> ValidationReport:
    """Exhaustively check identity and associativity laws."""
    violations = []
    seen = set()
    for v in C.objects:
        if v in seen:
            violations.append(f"duplicate object {v!r}")
        seen.add(v)
    names = set()
    for name, src, tgt in C._declared:
        if name in names or C.is_identity(name):
            violations.append(f"morphism name {name!r} duplicated or reserved")
        names.add(name)
        if src not in seen or tgt not in seen:
            violations.append(f"morphism {name!r} has unknown endpoint")
    arrows = [n for n in C.arrow_names()]
    checked = 0
    for g in arrows:
        for f in arrows:
            if C.arrow_source(g) != C.arrow_target(f):
                continue
            checked += 1
            try:
                r = C.compose(g, f)
            except ValueError:
                violations.append(f"missing composite {g!r} after {f!r}")
                continue
            if r not in C._arrows:
                violations.append(f"composite {g!r} after {f!r} is unknown arrow {r!r}")
                continue
            if (C.arrow_source(r) != C.arrow_source(f)
                    or C.arrow_target(r) != C.arrow_target(g)):
                violations.append(f"composite {r!r} of {g!r} after {f!r} has wrong endpoints")
    if not violations:
        for h in arrows:
            for g in arrows:
                if C.arrow_source(h) != C.arrow_target(g):
                    continue
                for f in arrows:
                    if C.arrow_source(g) != C.arrow_target(f):
                        continue
                    checked += 1
                    if C.compose(C.compose(h, g), f) != C.compose(h, C.compose(g, f)):
                        violations.append(
                            f"associativity fails on ({h!r}, {g!r}, {f!r})")
    return ValidationReport("category", tuple(violations), checked)


def full_simplex(n: int) -> OrderedComplex:
    """The ordered complex whose paths form the standard simplicial n-simplex."""
    verts = tuple(range(n + 1))
    return OrderedComplex.from_facets(verts, [verts])


def union(K1: OrderedComplex, K2: OrderedComplex) -> OrderedComplex:
    """Simplexwise union; vertex orders must restrict a common total order."""
    return OrderedComplex(_merge_orders(K1.vertices, K2.vertices),
                          K1.simplices | K2.simplices)


def intersection(K1: OrderedComplex, K2: OrderedComplex) -> OrderedComplex:
    merged = _merge_orders(K1.vertices, K2.vertices)
    common = set(K1.vertices) & set(K2.vertices)
    return OrderedComplex(tuple(v for v in merged if v in common),
                          K1.simplices & K2.simplices)


def _merge_orders(o1: tuple, o2: tuple) -> tuple:
    pos2 = {v: i for i, v in enumerate(o2)}
    pos1 = {v: i for i, v in enumerate(o1)}
    out = []
    i = j = 0
    while i < len(o1) or j < len(o2):
        if i >= len(o1):
            out.append(o2[j]); j += 1
        elif j >= len(o2):
            out.append(o1[i]); i += 1
        elif o1[i] == o2[j]:
            out.append(o1[i]); i += 1; j += 1
        else:
            a, b = o1[i], o2[j]
            a_later = pos2.get(a, -1) > j
            b_later = pos1.get(b, -1) > i
            if a_later and b_later:
                raise ValueError(f"incompatible vertex orders at {a!r} / {b!r}")
            if b_later or a not in pos2:
                out.append(a); i += 1
            else:
                out.append(b); j += 1
    return tuple(out)


class SimplicialSlice:
    """Tabulated simplicial (or Delta-) set up to a degree cap.

    cells, faces and (optionally) degeneracies are finite tables; a
    designated basepoint cell per degree makes the slice pointed.
    """

    def __init__(self, cap: int,
                 cells: Sequence[Sequence],
                 faces: Mapping[tuple, Mapping],
                 degeneracies: Optional[Mapping[tuple, Mapping]] = None,
                 basepoints: Optional[Sequence] = None):
        if cap < 0 or len(cells) != cap + 1:
            raise ValueError("need one cell list per degree 0..cap")
        self.cap = cap
        self._cells = tuple(tuple(level) for level in cells)
        self._faces = {k: dict(v) for k, v in faces.items()}
        self._degeneracies = None if degeneracies is None else \
            {k: dict(v) for k, v in degeneracies.items()}
        self.basepoints = None if basepoints is None else tuple(basepoints)
        if self.basepoints is not None and len(self.basepoints) != cap + 1:
            raise ValueError("need one basepoint per degree 0..cap")
        self._index = [{c: i for i, c in enumerate(level)} for level in self._cells]

    @property
    def has_degeneracies(self) -> bool:
        return self._degeneracies is not None

    def cells(self, n: int) -> tuple:
        if not 0 <= n <= self.cap:
            raise ValueError(f"degree {n} outside slice cap {self.cap}")
        return self._cells[n]

    def cell_index(self, n: int, cell) -> int:
        return self._index[n][cell]

    def face(self, n: int, i: int, cell):
        return self._faces[(n, i)][cell]

    def degeneracy(self, n: int, i: int, cell):
        if self._degeneracies is None:
            raise ValueError("slice carries no degeneracies")
        return self._degeneracies[(n, i)][cell]

    def basepoint(self, n: int):
        if self.basepoints is None:
            raise ValueError("slice is not pointed")
        return self.basepoints[n]

    def counts(self) -> tuple:
        return tuple(len(level) for level in self._cells)


def nerve_slice(A, cap: int, basepoint=None) -> SimplicialSlice:
    """S(A) tabulated through degree `cap`, pointed at a constant path."""
    if basepoint is None:
        basepoint = A.vertex_list()[0]
    if not A.has_vertex(basepoint):
        raise ValueError(f"basepoint {basepoint!r} is not a vertex")
    cells = [A.paths(n) for n in range(cap + 1)]
    faces = {}
    for n in range(1, cap + 1):
        for i in range(n + 1):
            faces[(n, i)] = {p: A.face(p, i) for p in cells[n]}
    degeneracies = {}
    for n in range(cap):
        for i in range(n + 1):
            degeneracies[(n, i)] = {p: A.degeneracy(p, i) for p in cells[n]}
    basepoints = [A.constant_path(basepoint, n) for n in range(cap + 1)]
    return SimplicialSlice(cap, cells, faces, degeneracies, basepoints)


def standard_simplex_slice(n: int, cap: int) -> SimplicialSlice:
    """Delta[n] through degree `cap`: monotone tuples in {0..n}."""
    if n < 0:
        raise ValueError("negative simplex dimension")
    cells = [tuple(combinations_with_replacement(range(n + 1), q + 1))
             for q in range(cap + 1)]
    faces = {}
    for q in range(1, cap + 1):
        for i in range(q + 1):
            faces[(q, i)] = {w: w[:i] + w[i + 1 :] for w in cells[q]}
    degeneracies = {}
    for q in range(cap):
        for i in range(q + 1):
            degeneracies[(q, i)] = {w: w[: i + 1] + w[i:] for w in cells[q]}
    basepoints = [(0,) * (q + 1) for q in range(cap + 1)]
    return SimplicialSlice(cap, cells, faces, degeneracies, basepoints)


def validate_slice(S: SimplicialSlice) -> ValidationReport:
    """Check totality, the Delta identity, and (when degeneracies are
    present) all five simplicial identities wherever both composites stay
    within the cap; basepoint closure when the slice is pointed."""
    v = []
    checked = 0
    cap = S.cap

    for n in range(1, cap + 1):
        for i in range(n + 1):
            table = S._faces.get((n, i))
            if table is None:
                v.append(f"face table d_{i} missing at degree {n}")
                continue
            if set(table) != set(S.cells(n)):
                v.append(f"face d_{i} at degree {n} not total on cells")
                continue
            lower = set(S.cells(n - 1))
            for c, img in table.items():
                checked += 1
                if img not in lower:
                    v.append(f"face d_{i}({c!r}) = {img!r} leaves degree {n - 1}")
    if v:
        return ValidationReport("slice", tuple(v), checked)

    for n in range(2, cap + 1):
        for j in range(n):
            for i in range(j, n):
                for c in S.cells(n):
                    checked += 1
                    left = S.face(n - 1, i, S.face(n, j, c))
                    right = S.face(n - 1, j, S.face(n, i + 1, c))
                    if left != right:
                        v.append(
                            f"Delta identity d_{i} d_{j} = d_{j} d_{i + 1} fails on {c!r} at degree {n}")

    if S.has_degeneracies:
        for n in range(cap):
            for i in range(n + 1):
                table = S._degeneracies.get((n, i))
                if table is None or set(table) != set(S.cells(n)):
                    v.append(f"degeneracy s_{i} at degree {n} missing or not total")
                    continue
                upper = set(S.cells(n + 1))
                for c, img in table.items():
                    checked += 1
                    if img not in upper:
                        v.append(f"degeneracy s_{i}({c!r}) leaves degree {n + 1}")
        if not v:
            for n in range(cap - 1):
                for j in range(n + 1):
                    for i in range(j, n + 1):
                        for c in S.cells(n):
                            checked += 1
                            if S.degeneracy(n + 1, j, S.degeneracy(n, i, c)) != \
                                    S.degeneracy(n + 1, i + 1, S.degeneracy(n, j, c)):
                                v.append(f"s_{j} s_{i} = s_{i + 1} s_{j} fails on {c!r} at degree {n}")
            for n in range(cap):
                for j in range(n + 1):
                    for c in S.cells(n):
                        checked += 2
                        sc = S.degeneracy(n, j, c)
                        if S.face(n + 1, j, sc) != c:
                            v.append(f"d_{j} s_{j} = id fails on {c!r} at degree {n}")
                        if S.face(n + 1, j + 1, sc) != c:
                            v.append(f"d_{j + 1} s_{j} = id fails on {c!r} at degree {n}")
            for n in range(1, cap):
                for j in range(n + 1):
                    for c in S.cells(n):
                        sc = S.degeneracy(n, j, c)
                        for i in range(n + 2):
                            if i < j:
                                checked += 1
                                if S.face(n + 1, i, sc) != \
                                        S.degeneracy(n - 1, j - 1, S.face(n, i, c)):
                                    v.append(f"d_{i} s_{j} = s_{j - 1} d_{i} fails on {c!r} at degree {n}")
                            elif i > j + 1:
                                checked += 1
                                if S.face(n + 1, i, sc) != \
                                        S.degeneracy(n - 1, j, S.face(n, i - 1, c)):
                                    v.append(f"d_{i} s_{j} = s_{j} d_{i - 1} fails on {c!r} at degree {n}")

    if S.basepoints is not None and not v:
        for n in range(1, cap + 1):
            for i in range(n + 1):
                checked += 1
                if S.face(n, i, S.basepoint(n)) != S.basepoint(n - 1):
                    v.append(f"basepoint not closed under d_{i} at degree {n}")
        if S.has_degeneracies:
            for n in range(cap):
                for i in range(n + 1):
                    checked += 1
                    if S.degeneracy(n, i, S.basepoint(n)) != S.basepoint(n + 1):
                        v.append(f"basepoint not closed under s_{i} at degree {n}")

    return ValidationReport("slice", tuple(v), checked)
