"""The non-abelian word model of the twisted free construction.

Degree-n elements are reduced words in copies of a finite group G, one
copy per degree-n path of the space, with the copy at the constant
basepoint path collapsed. A twisted face applies the map of the removed
vertex to every letter and relabels it by the face of its path; a twisted
degeneracy applies the inverse map of the doubled vertex, which is why it
needs a non-singularity certificate.

`check_simplicial_identities` machine-checks the Delta identity (any
twist) and all five simplicial identities (non-singular twists) on
exhaustive short words plus seeded random samples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Tuple

from .groups import Abelianization
from .twist import (
    TwistedAbelianStructure,
    TwistedFiniteGroupStructure,
    is_nonsingular,
    validate_twist,
)


class Letter(NamedTuple):
    label: tuple  # a path of the space
    element: int  # group element index, never the identity


@dataclass(frozen=True)
class Word:
    degree: int
    letters: Tuple[Letter, ...]

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)


class TwistedFreeConstruction:
    """Word arithmetic for one space, twist, basepoint and degree cap."""

    def __init__(self, space, structure: TwistedFiniteGroupStructure,
                 basepoint, cap: int, check: bool = True):
        if structure.space is not space and structure.space != space:
            raise ValueError("structure does not live on the given space")
        if not space.has_vertex(basepoint):
            raise ValueError(f"basepoint {basepoint!r} is not a vertex")
        if check:
            validate_twist(structure).raise_if_invalid()
        self.space = space
        self.structure = structure
        self.group = structure.group
        self.basepoint = basepoint
        self.cap = cap
        self._certificate = None
        self._certificate_known = False

    def basepoint_path(self, n: int) -> tuple:
        return self.space.constant_path(self.basepoint, n)

    def certificate(self):
        if not self._certificate_known:
            self._certificate = is_nonsingular(self.structure)
            self._certificate_known = True
        return self._certificate

    # -- construction of words -------------------------------------------

    def reduce(self, degree: int, letters: Iterable[tuple]) -> Word:
        """Canonical reduced word: basepoint copies dropped, identity
        letters dropped, adjacent letters with one label multiplied."""
        G = self.group
        bp = self.basepoint_path(degree)
        stack: List[Letter] = []
        for label, element in letters:
            if label == bp or element == G.identity:
                continue
            if len(label) != len(bp):
                raise ValueError(f"letter label {label!r} has wrong degree")
            if stack and stack[-1].label == label:
                merged = G.mul(stack[-1].element, element)
                stack.pop()
                if merged != G.identity:
                    stack.append(Letter(label, merged))
            else:
                stack.append(Letter(label, element))
        return Word(degree, tuple(stack))

    def word(self, degree: int, letters: Iterable[tuple]) -> Word:
        return self.reduce(degree, letters)

    def identity_word(self, degree: int) -> Word:
        return Word(degree, ())

    def multiply(self, w1: Word, w2: Word) -> Word:
        if w1.degree != w2.degree:
            raise ValueError("degree mismatch")
        return self.reduce(w1.degree, list(w1.letters) + list(w2.letters))

    def inverse(self, w: Word) -> Word:
        G = self.group
        return Word(w.degree, tuple(Letter(l.label, G.inv(l.element))
                                    for l in reversed(w.letters)))

    def words_equal(self, w1: Word, w2: Word) -> bool:
        return w1 == w2

    # -- twisted structure maps -------------------------------------------

    def twisted_face(self, w: Word, i: int) -> Word:
        """Letterwise: apply the map of the removed vertex, relabel by the
        face of the path, then reduce."""
        n = w.degree
        if n < 1:
            raise ValueError("face of a degree-0 word")
        if not 0 <= i <= n:
            raise ValueError(f"face index {i} out of range for degree {n}")
        out = []
        for label, element in w.letters:
            v = self.space.path_vertices(label)[i]
            out.append((self.space.face(label, i),
                        self.structure.delta(v)[element]))
        return self.reduce(n - 1, out)

    def twisted_degeneracy(self, w: Word, i: int) -> Word:
        n = w.degree
        if not 0 <= i <= n:
            raise ValueError(f"degeneracy index {i} out of range for degree {n}")
        cert = self.certificate()
        if cert is None:
            raise ValueError("twisted degeneracies need a non-singular structure")
        out = []
        for label, element in w.letters:
            v = self.space.path_vertices(label)[i]
            out.append((self.space.degeneracy(label, i),
                        cert.inverses[v][element]))
        return self.reduce(n + 1, out)

    # -- sampling -----------------------------------------------------------

    def letter_pool(self, degree: int) -> tuple:
        bp = self.basepoint_path(degree)
        labels = [p for p in self.space.paths(degree) if p != bp]
        return tuple((lab, g) for lab in labels
                     for g in range(self.group.order) if g != self.group.identity)

    def random_word(self, rng: random.Random, degree: int, max_len: int = 4) -> Word:
        pool = self.letter_pool(degree)
        if not pool:
            return self.identity_word(degree)
        k = rng.randint(0, max_len)
        return self.reduce(degree, [rng.choice(pool) for _ in range(k)])


@dataclass(frozen=True)
class IdentityReport:
    mode: str            # "simplicial" or "delta"
    cases: int
    random_cases: int
    failures: Tuple[tuple, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_simplicial_identities(F: TwistedFreeConstruction, max_degree: int = 3,
                                samples: int = 1000, seed: int = 0,
                                max_failures: int = 10) -> IdentityReport:
    """Exhaustive words of length <= 2 up to max_degree, plus at least
    `samples` seeded random cases, against every identity available in the
    current mode."""
    simplicial = F.certificate() is not None
    mode = "simplicial" if simplicial else "delta"
    cases = 0
    failures: List[tuple] = []

    def record(name, degree, idx, w):
        failures.append((name, degree, idx, tuple(w.letters)))

    def check_word(w: Word) -> None:
        nonlocal cases
        n = w.degree
        d = F.twisted_face
        if n >= 2:
            for j in range(n):
                for i in range(j, n):
                    cases += 1
                    if d(d(w, j), i) != d(d(w, i + 1), j):
                        record("d_i d_j = d_j d_{i+1}", n, (i, j), w)
        if not simplicial:
            return
        s = F.twisted_degeneracy
        for j in range(n + 1):
            for i in range(j, n + 1):
                cases += 1
                if s(s(w, i), j) != s(s(w, j), i + 1):
                    record("s_j s_i = s_{i+1} s_j", n, (i, j), w)
        for j in range(n + 1):
            sw = s(w, j)
            for i in range(n + 2):
                cases += 1
                if i < j:
                    if d(sw, i) != s(d(w, i), j - 1):
                        record("d_i s_j = s_{j-1} d_i", n, (i, j), w)
                elif i in (j, j + 1):
                    if d(sw, i) != w:
                        record("d_j s_j = id = d_{j+1} s_j", n, (i, j), w)
                else:
                    if d(sw, i) != s(d(w, i - 1), j):
                        record("d_i s_j = s_j d_{i-1}", n, (i, j), w)

    def check_homomorphism(w1: Word, w2: Word) -> None:
        nonlocal cases
        n = w1.degree
        prod = F.multiply(w1, w2)
        if n >= 1:
            for i in range(n + 1):
                cases += 1
                if F.twisted_face(prod, i) != \
                        F.multiply(F.twisted_face(w1, i), F.twisted_face(w2, i)):
                    record("face is a homomorphism", n, (i,), prod)
        if simplicial:
            for i in range(n + 1):
                cases += 1
                if F.twisted_degeneracy(prod, i) != \
                        F.multiply(F.twisted_degeneracy(w1, i), F.twisted_degeneracy(w2, i)):
                    record("degeneracy is a homomorphism", n, (i,), prod)

    for n in range(min(max_degree, F.cap) + 1):
        pool = F.letter_pool(n)
        singles = [F.reduce(n, [l]) for l in pool]
        check_word(F.identity_word(n))
        for w in singles:
            check_word(w)
            if len(failures) > max_failures:
                return IdentityReport(mode, cases, 0, tuple(failures))
        for l1 in pool:
            for l2 in pool:
                check_word(F.reduce(n, [l1, l2]))
                if len(failures) > max_failures:
                    return IdentityReport(mode, cases, 0, tuple(failures))

    rng = random.Random(seed)
    exhaustive_cases = cases
    while cases - exhaustive_cases < samples:
        n = rng.randint(0, min(max_degree, F.cap))
        check_word(F.random_word(rng, n))
        check_homomorphism(F.random_word(rng, n, 2), F.random_word(rng, n, 2))
        if len(failures) > max_failures:
            break
    return IdentityReport(mode, cases, cases - exhaustive_cases, tuple(failures))


@dataclass(frozen=True)
class AbelianizedCoefficients:
    """Bridge data from a finite-group twist to abelian chain coefficients."""

    structure: TwistedAbelianStructure
    abelianization: Abelianization


def abelianized_structure(structure: TwistedFiniteGroupStructure) -> AbelianizedCoefficients:
    """Descend the twist to the commutator quotient of the coefficients."""
    ab = structure.group.abelianization()
    matrices = {v: ab.induced_matrix(structure.delta(v))
                for v in structure.space.vertex_list()}
    return AbelianizedCoefficients(
        TwistedAbelianStructure(structure.space, ab.presented, matrices), ab)


def abelianize(F: TwistedFreeConstruction, w: Word,
               coeffs: AbelianizedCoefficients) -> Dict[tuple, tuple]:
    """The image of a word in the abelianised chain group, as per-label
    coordinate vectors in the commutator-quotient presentation."""
    ab = coeffs.abelianization
    out: Dict[tuple, list] = {}
    for label, element in w.letters:
        vec = out.setdefault(label, [0] * ab.size)
        for k, c in enumerate(ab.coords(element)):
            vec[k] += c
    return {label: tuple(vec) for label, vec in out.items()
            if any(vec)}
