"""Finite groups given by explicit multiplication tables.

Elements are addressed by index; labels are kept for IO. Group axioms are
checked exhaustively on construction-by-request via `validate`, and the
commutator quotient is computed by closure, which is all the word model
needs to bridge into abelianised chains.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .abelian import FgAbelianGroup, IntegerMatrix


class FiniteGroupTable:
    __slots__ = ("elements", "order", "_table", "identity", "_inverse", "_index")

    def __init__(self, elements: Sequence[str], table: Sequence[Sequence[int]]):
        self.elements = tuple(str(e) for e in elements)
        self.order = len(self.elements)
        if len(set(self.elements)) != self.order:
            raise ValueError("duplicate element labels")
        if len(table) != self.order or any(len(r) != self.order for r in table):
            raise ValueError("table must be order x order")
        self._table = tuple(tuple(int(x) for x in row) for row in table)
        self._index = {e: i for i, e in enumerate(self.elements)}
        ident = None
        for e in range(self.order):
            if all(self._table[e][g] == g and self._table[g][e] == g
                   for g in range(self.order)):
                ident = e
                break
        if ident is None:
            raise ValueError("table has no identity element")
        self.identity = ident
        inverse: List[Optional[int]] = [None] * self.order
        for g in range(self.order):
            for h in range(self.order):
                if self._table[g][h] == ident and self._table[h][g] == ident:
                    inverse[g] = h
                    break
            if inverse[g] is None:
                raise ValueError(f"element {self.elements[g]} has no inverse")
        self._inverse = tuple(inverse)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroupTable":
        if n < 1:
            raise ValueError("cyclic group order must be positive")
        return cls([str(i) for i in range(n)],
                   [[(i + j) % n for j in range(n)] for i in range(n)])

    @classmethod
    def symmetric3(cls) -> "FiniteGroupTable":
        """S3 as permutations of {0,1,2}, labelled by one-line notation."""
        from itertools import permutations
        perms = sorted(permutations(range(3)))
        labels = ["".join(map(str, p)) for p in perms]
        idx = {p: i for i, p in enumerate(perms)}
        table = [[idx[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms]
        return cls(labels, table)

    def mul(self, a: int, b: int) -> int:
        return self._table[a][b]

    def inv(self, a: int) -> int:
        return self._inverse[a]

    def index(self, label: str) -> int:
        return self._index[label]

    def validate(self) -> Tuple[bool, Optional[str]]:
        """Exhaustive associativity check; closure/identity/inverses are
        enforced at construction."""
        n = self.order
        for a in range(n):
            for b in range(n):
                ab = self._table[a][b]
                for c in range(n):
                    if self._table[ab][c] != self._table[a][self._table[b][c]]:
                        return False, (f"associativity fails on "
                                       f"({self.elements[a]}, {self.elements[b]}, {self.elements[c]})")
        return True, None

    def is_abelian(self) -> bool:
        return all(self._table[a][b] == self._table[b][a]
                   for a in range(self.order) for b in range(self.order))

    def commutator_subgroup(self) -> frozenset:
        gens = {self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
                for a in range(self.order) for b in range(self.order)}
        closure = {self.identity}
        frontier = set(gens) | {self.identity}
        while frontier:
            nxt = set()
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in closure:
                        closure.add(y)
                        nxt.add(y)
            frontier = nxt
        return frozenset(closure)

    def abelianization(self) -> "Abelianization":
        return Abelianization(self)

    def __repr__(self) -> str:
        return f"FiniteGroupTable(order={self.order})"


class Abelianization:
    """Commutator quotient of a finite group, with a presentation of the
    quotient as an FgAbelianGroup (one generator per coset, relations from
    the quotient multiplication) and coordinates for every group element."""

    def __init__(self, group: FiniteGroupTable):
        self.group = group
        N = group.commutator_subgroup()
        coset_of: Dict[int, int] = {}
        reps: List[int] = []
        for g in range(group.order):
            if g in coset_of:
                continue
            k = len(reps)
            reps.append(g)
            for h in N:
                coset_of[group.mul(g, h)] = k
        self.coset_of = tuple(coset_of[g] for g in range(group.order))
        self.reps = tuple(reps)
        q = len(reps)
        self.size = q
        mul = [[coset_of[group.mul(reps[a], reps[b])] for b in range(q)] for a in range(q)]
        self.quotient_mul = tuple(tuple(r) for r in mul)
        cols = []
        for a in range(q):
            for b in range(q):
                col = [0] * q
                col[a] += 1
                col[b] += 1
                col[mul[a][b]] -= 1
                cols.append(col)
        rel = IntegerMatrix(q, len(cols),
                            [col[i] for i in range(q) for col in cols])
        self.presented = FgAbelianGroup(q, rel)

    def coords(self, g: int) -> tuple:
        """The basis vector of g's coset in the presentation."""
        vec = [0] * self.size
        vec[self.coset_of[g]] = 1
        return tuple(vec)

    def induced_matrix(self, endo: Sequence[int]) -> IntegerMatrix:
        """Matrix of the endomorphism descended to the commutator quotient."""
        q = self.size
        data = [0] * (q * q)
        for j in range(q):
            image = self.coset_of[endo[self.reps[j]]]
            data[image * q + j] = 1
        return IntegerMatrix(q, q, data)
