"""Symmetry classification for the branched covers.

Pipeline: enumerate incidence-preserving line permutations, keep those whose
coordinate action preserves the character set, decide projective or
anti-projective realizability over Q(zeta), and assemble the finite model
deck-group x realized-symmetries with its semidirect law.  Anti elements act
on the deck group by gamma -> -(P^T) gamma where P is the induced matrix on
character coordinates (eigenvalues conjugate under anti-linear maps); the
character action itself is a pure coordinate permutation of vanishing
orders, with no extra root-of-unity twist.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .arrangement import (
    Arrangement,
    LineSymmetry,
    Perm,
    combinatorial_automorphisms,
    compose_perms,
    fixed_points_of,
    invert_perm,
    make_symmetry,
    perm_cycles_str,
)
from .characters import Character, enumerate_characters, preserves_charset
from .cover import CoverModel
from .homology import Epimorphism, Vector, solve_mod_p

Matrix = tuple[Vector, ...]  # k x k over Z/mZ


def character_preserving_symmetries(
    arr: Arrangement, charset: tuple[Character, ...]
) -> list[Perm]:
    """Incidence automorphisms whose coordinate action fixes the set."""
    cset = frozenset(charset)
    return [
        perm
        for perm in combinatorial_automorphisms(arr)
        if preserves_charset(perm, cset)
    ]


def _charset_matrix(perm: Perm, phi: Epimorphism) -> Matrix:
    """Matrix P on character coordinates with phi . (P c) = (phi c) o perm.

    Column j is the coordinate vector of the permuted j-th column of phi;
    inconsistency means the permutation does not preserve the span.
    """
    m, k = phi.m, phi.k
    rows = phi.rows
    cols_of_p = []
    for j in range(phi.k):
        a = phi.column(j)
        permuted = tuple(a[perm[i]] for i in range(phi.n))  # pullback a o perm
        c = solve_mod_p(list(rows), permuted, m)
        if c is None:
            raise ValueError(
                f"permutation {perm_cycles_str(perm)} does not preserve the characters"
            )
        cols_of_p.append(c)
    return tuple(tuple(cols_of_p[j][i] for j in range(k)) for i in range(k))


def deck_action_of(perm: Perm, anti: bool, phi: Epimorphism) -> Matrix:
    """Automorphism of the deck group induced by conjugation: eps * P^T."""
    p = _charset_matrix(perm, phi)
    eps = -1 if anti else 1
    return tuple(
        tuple((eps * p[j][i]) % phi.m for j in range(phi.k)) for i in range(phi.k)
    )


def _mat_apply(mat: Matrix, v: Vector, m: int) -> Vector:
    return tuple(sum(mat[i][j] * v[j] for j in range(len(v))) % m for i in range(len(mat)))


@dataclass(frozen=True)
class RealizedSymmetry:
    sym: LineSymmetry
    deck_aut: Matrix

    @property
    def perm(self) -> Perm:
        return self.sym.perm

    @property
    def anti(self) -> bool:
        return self.sym.anti


@dataclass(frozen=True)
class KleinModel:
    cover: CoverModel
    charset: tuple[Character, ...]
    realized: tuple[RealizedSymmetry, ...]
    combinatorial_only: tuple[tuple[Perm, bool], ...]

    @property
    def m(self) -> int:
        return self.cover.m

    @property
    def k(self) -> int:
        return self.cover.k

    @property
    def order(self) -> int:
        return (self.m ** self.k) * len(self.realized)

    @property
    def has_anti(self) -> bool:
        return any(r.anti for r in self.realized)

    def index_of(self, perm: Perm, anti: bool) -> int:
        for idx, r in enumerate(self.realized):
            if r.perm == perm and r.anti == anti:
                return idx
        raise KeyError(f"({perm_cycles_str(perm)}, anti={anti}) is not realized")

    # group elements are (symmetry index, deck vector)
    def elements(self):
        for idx in range(len(self.realized)):
            for delta in itertools.product(range(self.m), repeat=self.k):
                yield (idx, delta)

    def multiply(self, x: tuple[int, Vector], y: tuple[int, Vector]) -> tuple[int, Vector]:
        i1, d1 = x
        i2, d2 = y
        r1, r2 = self.realized[i1], self.realized[i2]
        perm = compose_perms(r1.perm, r2.perm)
        anti = r1.anti != r2.anti
        idx = self.index_of(perm, anti)
        moved = _mat_apply(r1.deck_aut, d2, self.m)
        delta = tuple((a + b) % self.m for a, b in zip(d1, moved))
        return (idx, delta)

    def inverse(self, x: tuple[int, Vector]) -> tuple[int, Vector]:
        i, d = x
        r = self.realized[i]
        inv_perm = invert_perm(r.perm)
        idx = self.index_of(inv_perm, r.anti)
        aut_inv = self.realized[idx].deck_aut
        moved = _mat_apply(aut_inv, d, self.m)
        return (idx, tuple((-v) % self.m for v in moved))

    def is_involution(self, x: tuple[int, Vector]) -> bool:
        i, d = x
        r = self.realized[i]
        if compose_perms(r.perm, r.perm) != tuple(range(len(r.perm))):
            return False
        moved = _mat_apply(r.deck_aut, d, self.m)
        return all((a + b) % self.m == 0 for a, b in zip(d, moved))


def klein_model(cover: CoverModel) -> KleinModel:
    """Deck group plus every realizable character-preserving symmetry."""
    cover.require_smooth()
    arr, phi = cover.arrangement, cover.phi
    charset = enumerate_characters(phi)
    realized: list[RealizedSymmetry] = []
    rejected: list[tuple[Perm, bool]] = []
    for perm in character_preserving_symmetries(arr, charset):
        for anti in (False, True):
            sym = make_symmetry(arr, perm, anti)
            if sym.matrix is None:
                rejected.append((perm, anti))
            else:
                realized.append(
                    RealizedSymmetry(sym, deck_action_of(perm, anti, phi))
                )
    realized.sort(key=lambda r: (r.perm, r.anti))
    return KleinModel(
        cover=cover,
        charset=charset,
        realized=tuple(realized),
        combinatorial_only=tuple(rejected),
    )


# -- real structures -----------------------------------------------------------


@dataclass(frozen=True)
class RealStructureClass:
    representative: tuple[int, Vector]
    size: int
    perm_cycles: str
    fixed_lines: tuple[int, ...]  # 1-based, real branch line-curves
    real_blown_points: tuple[tuple[int, ...], ...]  # 1-based incident triples
    real_part_euler: int | None
    real_part_betti: tuple[int, int, int] | None

    @property
    def n_real_blown(self) -> int:
        return len(self.real_blown_points)


def classify_real_structures(model: KleinModel) -> list[RealStructureClass]:
    """Anti involutions of the model partitioned into conjugacy classes."""
    involutions = [
        x for x in model.elements() if model.realized[x[0]].anti and model.is_involution(x)
    ]
    inv_set = set(involutions)
    all_elements = list(model.elements())
    classes: list[list[tuple[int, Vector]]] = []
    seen: set[tuple[int, Vector]] = set()
    for x in involutions:
        if x in seen:
            continue
        orbit = set()
        for g in all_elements:
            y = model.multiply(model.multiply(g, x), model.inverse(g))
            if y not in inv_set:
                raise AssertionError("conjugation left the involution set")
            orbit.add(y)
        seen |= orbit
        classes.append(sorted(orbit))

    out = []
    for orbit in classes:
        rep = orbit[0]
        out.append(_fingerprint(model, rep, len(orbit)))
    out.sort(key=lambda c: (-len(c.fixed_lines), c.perm_cycles))
    return out


def _fingerprint(
    model: KleinModel, rep: tuple[int, Vector], size: int
) -> RealStructureClass:
    r = model.realized[rep[0]]
    arr = model.cover.arrangement
    fixed = fixed_points_of(arr, r.sym)
    blown = set(model.cover.blown_ids)
    real_blown = tuple(
        p.incident_1based()
        for pid, p in enumerate(arr.points)
        if pid in blown and p in fixed
    )
    euler = betti = None
    if model.m % 2 == 1:
        euler, betti = _real_part_from_count(len(real_blown))
    return RealStructureClass(
        representative=rep,
        size=size,
        perm_cycles=perm_cycles_str(r.perm),
        fixed_lines=r.sym.fixed_lines_1based(),
        real_blown_points=real_blown,
        real_part_euler=euler,
        real_part_betti=betti,
    )


def _real_part_from_count(n_real: int) -> tuple[int, tuple[int, int, int]]:
    # the real locus is the real projective plane blown up at the real centers
    return 1 - n_real, (1, 1 + n_real, 1)


def real_part_topology(
    cover: CoverModel, cls: RealStructureClass
) -> tuple[int, tuple[int, int, int]]:
    """Euler characteristic and Z/2-Betti numbers of the real locus.

    For odd m the real locus upstairs maps homeomorphically onto the real
    locus of the blown plane: odd-degree radicals of real functions have
    exactly one real root.
    """
    if cover.m % 2 == 0:
        raise ValueError("even covering degree: the real locus is not determined")
    return _real_part_from_count(cls.n_real_blown)
