"""Exact integer linear algebra and finitely generated abelian groups.

Everything here runs on Python integers, so there is no overflow and no
tolerance anywhere: Smith normal form with unimodular certificates,
integer lattice membership, and canonical invariant-factor summaries of
finitely generated abelian groups presented by relation matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class IntegerMatrix:
    """Immutable integer matrix, row-major, arbitrary precision."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        data = tuple(int(e) for e in entries)
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntegerMatrix":
        r = len(rows)
        if r == 0:
            return cls(0, 0 if cols is None else cols, ())
        c = len(rows[0])
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, [e for row in rows for e in row])

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: Optional[int] = None, cols: Optional[int] = None) -> "IntegerMatrix":
        k = len(entries)
        r = k if rows is None else rows
        c = k if cols is None else cols
        data = [0] * (r * c)
        for i, e in enumerate(entries):
            data[i * c + i] = int(e)
        return cls(r, c, data)

    @classmethod
    def column_vector(cls, entries: Sequence[int]) -> "IntegerMatrix":
        return cls(len(entries), 1, entries)

    @classmethod
    def hstack(cls, mats: Sequence["IntegerMatrix"]) -> "IntegerMatrix":
        mats = [m for m in mats]
        if not mats:
            raise ValueError("nothing to stack")
        r = mats[0].rows
        if any(m.rows != r for m in mats):
            raise ValueError("row count mismatch")
        data = []
        for i in range(r):
            for m in mats:
                data.extend(m.row_tuple(i))
        return cls(r, sum(m.cols for m in mats), data)

    @classmethod
    def vstack(cls, mats: Sequence["IntegerMatrix"]) -> "IntegerMatrix":
        mats = [m for m in mats]
        if not mats:
            raise ValueError("nothing to stack")
        c = mats[0].cols
        if any(m.cols != c for m in mats):
            raise ValueError("column count mismatch")
        data = []
        for m in mats:
            data.extend(m._data)
        return cls(sum(m.rows for m in mats), c, data)

    @classmethod
    def block_diagonal(cls, mats: Sequence["IntegerMatrix"]) -> "IntegerMatrix":
        r = sum(m.rows for m in mats)
        c = sum(m.cols for m in mats)
        data = [0] * (r * c)
        ro = co = 0
        for m in mats:
            for i in range(m.rows):
                base = (ro + i) * c + co
                data[base : base + m.cols] = m.row_tuple(i)
            ro += m.rows
            co += m.cols
        return cls(r, c, data)

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return self._data[i * self.cols + j]

    def __getitem__(self, ij) -> int:
        return self.entry(*ij)

    def row_tuple(self, i: int) -> tuple:
        return self._data[i * self.cols : (i + 1) * self.cols]

    def column_tuple(self, j: int) -> tuple:
        return tuple(self._data[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row_tuple(i)) for i in range(self.rows)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows,
                             [self._data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    def __mul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self._data, other._data
        out = [0] * (n * m)
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            orow = out
            for t in range(k):
                av = arow[t]
                if av:
                    brow = b[t * m : (t + 1) * m]
                    base = i * m
                    for j in range(m):
                        orow[base + j] += av * brow[j]
        return IntegerMatrix(n, m, out)

    def mul_vector(self, vec: Sequence[int]) -> tuple:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(self._data[i * self.cols + j] * vec[j] for j in range(self.cols))
                     for i in range(self.rows))

    def __add__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntegerMatrix(self.rows, self.cols, [a + b for a, b in zip(self._data, other._data)])

    def __sub__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntegerMatrix(self.rows, self.cols, [a - b for a, b in zip(self._data, other._data)])

    def __neg__(self) -> "IntegerMatrix":
        return IntegerMatrix(self.rows, self.cols, [-a for a in self._data])

    def scale(self, k: int) -> "IntegerMatrix":
        return IntegerMatrix(self.rows, self.cols, [k * a for a in self._data])

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return all(e == 0 for e in self._data)

    def is_diagonal(self) -> bool:
        return all(e == 0 for idx, e in enumerate(self._data)
                   if idx // self.cols != idx % self.cols) if self.cols else True

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntegerMatrix)
                and self.shape == other.shape and self._data == other._data)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        if self.rows * self.cols <= 36:
            return f"IntegerMatrix({self.to_rows()!r})"
        return f"IntegerMatrix(<{self.rows}x{self.cols}>)"


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V == S with U, V unimodular and S a nonneg divisibility chain."""

    U: IntegerMatrix
    S: IntegerMatrix
    V: IntegerMatrix

    def diagonal(self) -> tuple:
        k = min(self.S.rows, self.S.cols)
        return tuple(self.S.entry(i, i) for i in range(k))

    def rank(self) -> int:
        return sum(1 for d in self.diagonal() if d != 0)

    def verify(self, A: IntegerMatrix) -> bool:
        if self.U * A * self.V != self.S:
            return False
        if abs(self.U.determinant()) != 1 or abs(self.V.determinant()) != 1:
            return False
        if not self.S.is_diagonal():
            return False
        diag = self.diagonal()
        if any(d < 0 for d in diag):
            return False
        for a, b in zip(diag, diag[1:]):
            if a == 0 and b != 0:
                return False
            if a != 0 and b % a != 0:
                return False
        return True


def smith_normal_form(A: IntegerMatrix) -> SmithDecomposition:
    """Diagonalise A over the integers with fully materialised U and V.

    Pivoting picks the minimal nonzero absolute value in the remaining
    submatrix, which keeps coefficient growth tame on small inputs.
    """
    m, n = A.rows, A.cols
    S = A.to_rows()
    U = IntegerMatrix.identity(m).to_rows()
    V = IntegerMatrix.identity(n).to_rows()

    def swap_rows(a, b):
        S[a], S[b] = S[b], S[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for row in S:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]

    def negate_row(a):
        S[a] = [-x for x in S[a]]
        U[a] = [-x for x in U[a]]

    def addmul_row(dst, src, k):
        S[dst] = [x + k * y for x, y in zip(S[dst], S[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def addmul_col(dst, src, k):
        for row in S:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    limit = min(m, n)
    t = 0
    while t < limit:
        best = None
        for i in range(t, m):
            row = S[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)

        while True:
            if S[t][t] < 0:
                negate_row(t)
            pivot = S[t][t]
            dirty = False
            for i in range(t + 1, m):
                if S[i][t]:
                    q = S[i][t] // pivot
                    if q:
                        addmul_row(i, t, -q)
                    if S[i][t]:
                        # remainder strictly smaller than the pivot takes over
                        swap_rows(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                if S[t][j]:
                    q = S[t][j] // pivot
                    if q:
                        addmul_col(j, t, -q)
                    if S[t][j]:
                        swap_cols(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            if all(S[i][t] == 0 for i in range(t + 1, m)) and all(S[t][j] == 0 for j in range(t + 1, n)):
                break

        # divisibility sweep: the pivot must divide the remaining block
        pivot = S[t][t]
        offender = None
        for i in range(t + 1, m):
            row = S[i]
            for j in range(t + 1, n):
                if row[j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            addmul_row(t, offender, 1)
            continue
        t += 1

    return SmithDecomposition(
        U=IntegerMatrix.from_rows(U, cols=m),
        S=IntegerMatrix.from_rows(S, cols=n),
        V=IntegerMatrix.from_rows(V, cols=n),
    )


def kernel_basis(A: IntegerMatrix) -> IntegerMatrix:
    """Columns form a basis of the integer kernel of A (cols x k)."""
    dec = smith_normal_form(A)
    free = []
    for j in range(A.cols):
        d = dec.S.entry(j, j) if j < A.rows else 0
        if d == 0:
            free.append(j)
    data = []
    for i in range(A.cols):
        row = dec.V.row_tuple(i)
        data.extend(row[j] for j in free)
    return IntegerMatrix(A.cols, len(free), data)


class LatticeSolver:
    """Repeated exact solves of A x = b against one fixed matrix A."""

    __slots__ = ("A", "_dec", "_diag")

    def __init__(self, A: IntegerMatrix):
        self.A = A
        self._dec = smith_normal_form(A)
        self._diag = [self._dec.S.entry(i, i) if i < A.cols else 0 for i in range(A.rows)]

    def solve(self, b: Sequence[int]) -> Optional[tuple]:
        A = self.A
        b = tuple(int(x) for x in b)
        if len(b) != A.rows:
            raise ValueError("dimension mismatch")
        if A.cols == 0:
            return () if all(x == 0 for x in b) else None
        c = self._dec.U.mul_vector(b)
        y = [0] * A.cols
        for i in range(A.rows):
            d = self._diag[i]
            if d == 0:
                if c[i] != 0:
                    return None
            else:
                if c[i] % d:
                    return None
                y[i] = c[i] // d
        x = self._dec.V.mul_vector(y)
        if A.mul_vector(x) != b:
            raise RuntimeError("internal SNF solve inconsistency")
        return x

    def contains(self, b: Sequence[int]) -> bool:
        return self.solve(b) is not None


def solve_in_lattice(A: IntegerMatrix, b: Sequence[int]) -> Optional[tuple]:
    """An integer x with A x = b, or None when b is not in the column lattice."""
    return LatticeSolver(A).solve(b)


@dataclass(frozen=True)
class GroupSummary:
    """Canonical form of a finitely generated abelian group.

    free_rank copies of Z plus cyclic factors Z/t for the torsion
    entries, which satisfy t_i >= 2 and t_i | t_{i+1}.
    """

    free_rank: int
    torsion: tuple

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"torsion coefficient {t} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion chain broken: {a} does not divide {b}")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def cokernel_summary(A: IntegerMatrix) -> GroupSummary:
    """Canonical form of Z^rows / (column span of A)."""
    dec = smith_normal_form(A)
    diag = dec.diagonal()
    rank = sum(1 for d in diag if d != 0)
    torsion = tuple(d for d in diag if d > 1)
    return GroupSummary(A.rows - rank, torsion)


class FgAbelianGroup:
    """Z^generators modulo the integer column span of `relations`."""

    __slots__ = ("generators", "relations", "_solver")

    def __init__(self, generators: int, relations: Optional[IntegerMatrix] = None):
        if relations is None:
            relations = IntegerMatrix.zeros(generators, 0)
        if relations.rows != generators:
            raise ValueError("relations must have one row per generator")
        self.generators = generators
        self.relations = relations
        self._solver = None

    @classmethod
    def free(cls, n: int) -> "FgAbelianGroup":
        return cls(n)

    @classmethod
    def from_invariants(cls, free_rank: int = 0, torsion: Sequence[int] = ()) -> "FgAbelianGroup":
        """Generators ordered free part first, then one per torsion factor."""
        n = free_rank + len(torsion)
        cols = []
        for i, t in enumerate(torsion):
            col = [0] * n
            col[free_rank + i] = int(t)
            cols.append(col)
        rel = IntegerMatrix(n, len(cols), [col[i] for i in range(n) for col in cols]) if cols \
            else IntegerMatrix.zeros(n, 0)
        return cls(n, rel)

    def solver(self) -> LatticeSolver:
        if self._solver is None:
            self._solver = LatticeSolver(self.relations)
        return self._solver

    def summary(self) -> GroupSummary:
        return cokernel_summary(self.relations)

    def contains(self, vec: Sequence[int]) -> bool:
        return self.solver().contains(vec)

    def vectors_equal(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.contains([x - y for x, y in zip(a, b)])

    def matrices_equal(self, M1: IntegerMatrix, M2: IntegerMatrix) -> bool:
        """Columnwise equality modulo the relation lattice."""
        if M1.shape != M2.shape or M1.rows != self.generators:
            raise ValueError("shape mismatch")
        diff = M1 - M2
        return all(self.contains(diff.column_tuple(j)) for j in range(diff.cols))

    def block(self, k: int) -> "FgAbelianGroup":
        """Direct sum of k copies, with blockwise generators and relations."""
        return FgAbelianGroup(self.generators * k,
                              IntegerMatrix.block_diagonal([self.relations] * k))

    def __eq__(self, other) -> bool:
        return (isinstance(other, FgAbelianGroup)
                and self.generators == other.generators
                and self.relations == other.relations)

    def __hash__(self) -> int:
        return hash((self.generators, self.relations))

    def __repr__(self) -> str:
        return f"FgAbelianGroup({self.summary()})"


@dataclass(frozen=True)
class AbelianEndomorphism:
    group: FgAbelianGroup
    matrix: IntegerMatrix

    def __post_init__(self):
        n = self.group.generators
        if self.matrix.shape != (n, n):
            raise ValueError("endomorphism matrix must be n x n")


def endomorphism_certificate(G: FgAbelianGroup, M: IntegerMatrix) -> Optional[IntegerMatrix]:
    """X with M @ relations == relations @ X, or None if M does not preserve the lattice."""
    n = G.generators
    if M.shape != (n, n):
        raise ValueError("endomorphism matrix must be n x n")
    R = G.relations
    if R.cols == 0:
        return IntegerMatrix.zeros(0, 0)
    image = M * R
    solver = G.solver()
    cols = []
    for j in range(R.cols):
        x = solver.solve(image.column_tuple(j))
        if x is None:
            return None
        cols.append(x)
    return IntegerMatrix(R.cols, R.cols, [cols[j][i] for i in range(R.cols) for j in range(R.cols)])


def is_valid_endomorphism(G: FgAbelianGroup, M: IntegerMatrix) -> bool:
    return endomorphism_certificate(G, M) is not None


def automorphism_inverse(G: FgAbelianGroup, M: IntegerMatrix) -> Optional[IntegerMatrix]:
    """A matrix N with M N == N M == identity modulo the relation lattice.

    Surjectivity of an endomorphism of a finitely generated abelian group
    already forces bijectivity, so solving M x == e_i modulo the lattice
    for every i both decides the question and materialises the inverse.
    """
    n = G.generators
    if M.shape != (n, n):
        raise ValueError("endomorphism matrix must be n x n")
    if endomorphism_certificate(G, M) is None:
        return None
    solver = LatticeSolver(IntegerMatrix.hstack([M, G.relations]) if G.relations.cols else M)
    cols = []
    for i in range(n):
        e = [1 if k == i else 0 for k in range(n)]
        sol = solver.solve(e)
        if sol is None:
            return None
        cols.append(sol[:n])
    N = IntegerMatrix(n, n, [cols[j][i] for i in range(n) for j in range(n)])
    ident = IntegerMatrix.identity(n)
    if not (G.matrices_equal(M * N, ident) and G.matrices_equal(N * M, ident)):
        raise RuntimeError("internal inverse construction inconsistency")
    if endomorphism_certificate(G, N) is None:
        raise RuntimeError("internal inverse is not an endomorphism")
    return N


def is_automorphism(G: FgAbelianGroup, M: IntegerMatrix) -> bool:
    return automorphism_inverse(G, M) is not None


def endomorphisms_commute(e1: AbelianEndomorphism, e2: AbelianEndomorphism) -> bool:
    """Whether the two composites agree modulo the relation lattice."""
    if e1.group != e2.group:
        raise ValueError("endomorphisms live on different groups")
    return e1.group.matrices_equal(e1.matrix * e2.matrix, e2.matrix * e1.matrix)
