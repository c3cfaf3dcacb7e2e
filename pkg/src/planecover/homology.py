"""First homology of the line-arrangement complement, mod-m epimorphisms,
exceptional loop classes, smoothness certificates, and the covering kernel.

Loops lambda_1..lambda_n around the lines generate H_1 subject to the single
relation sum(lambda_i) = 0.  A branched abelian cover is encoded by the n x k
residue matrix phi with phi(lambda_i) = rows[i] in (Z/mZ)^k.  Only prime m is
supported; every bundled example has m = 5.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .arrangement import Arrangement, IncidencePoint

Vector = tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- linear algebra mod a prime ----------------------------------------------


def rank_mod_p(rows: list[Vector] | tuple[Vector, ...], p: int) -> int:
    mat = [list(r) for r in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] % p), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] % p:
                f = mat[r][col]
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def nullspace_mod_p(rows: list[Vector], p: int, unknowns: int) -> list[Vector]:
    """Basis of {x : rows . x = 0 mod p}; rows are equations over `unknowns`."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(unknowns):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] % p), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] % p:
                f = mat[r][col]
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(unknowns) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * unknowns
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-mat[r][fc]) % p
        basis.append(tuple(v))
    return basis


def solve_mod_p(rows: list[Vector], rhs: Vector, p: int) -> Vector | None:
    """One solution of rows . x = rhs mod p, or None if inconsistent."""
    unknowns = len(rows[0])
    mat = [list(r) + [b % p] for r, b in zip(rows, rhs)]
    pivots: list[int] = []
    rank = 0
    for col in range(unknowns):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] % p), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] % p:
                f = mat[r][col]
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, len(mat)):
        if mat[r][unknowns] % p:
            return None
    x = [0] * unknowns
    for r, pc in enumerate(pivots):
        x[pc] = mat[r][unknowns] % p
    return tuple(x)


# -- epimorphisms -------------------------------------------------------------


@dataclass(frozen=True)
class Epimorphism:
    """phi: H_1 -> (Z/mZ)^k given by rows[i] = phi(lambda_i)."""

    m: int
    k: int
    rows: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError("modulus must be at least 2")
        if any(len(r) != self.k for r in self.rows):
            raise ValueError("row length does not match k")
        object.__setattr__(
            self, "rows", tuple(tuple(x % self.m for x in r) for r in self.rows)
        )

    @property
    def n(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def of_loops(self, indices: tuple[int, ...]) -> Vector:
        total = [0] * self.k
        for i in indices:
            for j in range(self.k):
                total[j] = (total[j] + self.rows[i][j]) % self.m
        return tuple(total)


@dataclass(frozen=True)
class EpimorphismReport:
    zero_sum_ok: bool
    surjective: bool
    errors: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.zero_sum_ok and self.surjective and not self.errors


def validate_epimorphism(phi: Epimorphism) -> EpimorphismReport:
    errors: list[str] = []
    sums = [sum(r[j] for r in phi.rows) % phi.m for j in range(phi.k)]
    zero_sum_ok = all(s == 0 for s in sums)
    if not zero_sum_ok:
        errors.append(f"row sums {tuple(sums)} are not 0 mod {phi.m}")
    if is_prime(phi.m):
        surjective = rank_mod_p(phi.rows, phi.m) == phi.k
        if not surjective:
            errors.append("rows do not generate (Z/mZ)^k")
    else:
        surjective = False
        errors.append(f"composite modulus {phi.m} is unsupported")
    return EpimorphismReport(zero_sum_ok, surjective, tuple(errors))


def exceptional_class(point: IncidencePoint, n: int) -> Vector:
    """Loop class around the exceptional curve over a blown-up point:
    the indicator vector of the incident lines (eps_p = sum of lambda_i)."""
    if point.r < 2:
        raise ValueError("blow-up centers must have multiplicity >= 2")
    return tuple(1 if i in point.incident else 0 for i in range(n))


def independence(vectors: list[Vector] | tuple[Vector, ...], r: int, m: int) -> bool:
    """True iff the vectors generate a subgroup isomorphic to (Z/mZ)^r."""
    if not is_prime(m):
        raise ValueError("independence test needs a prime modulus")
    return rank_mod_p(tuple(vectors), m) == r


# -- smoothness ----------------------------------------------------------------


@dataclass(frozen=True)
class PointCheck:
    point_id: int
    incident_1based: tuple[int, ...]
    kind: str  # "blown" | "double" | "unresolved"
    ok: bool
    detail: str


@dataclass(frozen=True)
class SmoothnessCertificate:
    checks: tuple[PointCheck, ...]
    ok: bool

    def failures(self) -> tuple[PointCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def smoothness_check(
    arr: Arrangement, phi: Epimorphism, blown_ids: tuple[int, ...]
) -> SmoothnessCertificate:
    """Certify the cover smooth over every arrangement point.

    Blown points need each pair (phi(eps_p), phi(lambda_i)) independent for
    every incident line; unblown 2-fold points need the two line images
    independent; unblown points of higher multiplicity are failures.
    """
    if phi.n != arr.n:
        raise ValueError("epimorphism size does not match the arrangement")
    blown = set(blown_ids)
    checks: list[PointCheck] = []
    for pid, point in enumerate(arr.points):
        inc1 = point.incident_1based()
        if pid in blown:
            eps = phi.of_loops(point.incident)
            bad = [
                i + 1
                for i in point.incident
                if not independence([eps, phi.rows[i]], 2, phi.m)
            ]
            ok = not bad
            detail = (
                f"phi(eps)={eps} independent with each incident line image"
                if ok
                else f"phi(eps)={eps} dependent with line(s) {bad}"
            )
            checks.append(PointCheck(pid, inc1, "blown", ok, detail))
        elif point.r == 2:
            i1, i2 = point.incident
            ok = independence([phi.rows[i1], phi.rows[i2]], 2, phi.m)
            detail = f"({phi.rows[i1]}, {phi.rows[i2]}) " + (
                "independent" if ok else "dependent"
            )
            checks.append(PointCheck(pid, inc1, "double", ok, detail))
        else:
            checks.append(
                PointCheck(
                    pid,
                    inc1,
                    "unresolved",
                    False,
                    f"{point.r}-fold point left unblown",
                )
            )
    return SmoothnessCertificate(tuple(checks), all(c.ok for c in checks))


# -- covering kernel -----------------------------------------------------------


@dataclass(frozen=True)
class DeckGroup:
    """The deck group (Z/mZ)^k together with the kernel of the quotient map
    from the full (Z/mZ)^(n-1) cover, presented by a basis of zero-sum
    n-vectors gamma with sum over i<n of rows[i][j]*gamma_i = 0 for all j."""

    m: int
    k: int
    n: int
    kernel_basis: tuple[Vector, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return self.m**self.k

    @property
    def kernel_rank(self) -> int:
        return len(self.kernel_basis)

    def kernel_elements(self):
        """All kernel vectors (size m**kernel_rank); fine at desk scale."""
        for coeffs in itertools.product(range(self.m), repeat=self.kernel_rank):
            v = [0] * self.n
            for c, basis_vec in zip(coeffs, self.kernel_basis):
                for i in range(self.n):
                    v[i] = (v[i] + c * basis_vec[i]) % self.m
            yield tuple(v)


def galois_kernel(phi: Epimorphism) -> DeckGroup:
    report = validate_epimorphism(phi)
    if not report.ok:
        raise ValueError(f"invalid epimorphism: {report.errors}")
    n, m, k = phi.n, phi.m, phi.k
    equations = [tuple(phi.rows[i][j] for i in range(n - 1)) for j in range(k)]
    short_basis = nullspace_mod_p(equations, m, n - 1)
    basis = tuple(
        tuple(v) + ((-sum(v)) % m,) for v in short_basis
    )
    return DeckGroup(m=m, k=k, n=n, kernel_basis=basis)


def loop_pairing(gamma: Vector, a: Vector, m: int) -> int:
    """Deck pairing sum over i<n of gamma_i * a_i mod m.

    Both vectors are zero-sum lifts; the n-th coordinate is redundant under
    the relation sum(lambda_i) = 0 and is excluded from the sum.
    """
    return sum(g * x for g, x in zip(gamma[:-1], a[:-1])) % m
