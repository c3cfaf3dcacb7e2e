"""Numeric invariants of the smooth abelian cover of the blown-up plane.

A cover is an arrangement, a blow-up set, and an epimorphism phi onto
(Z/mZ)^k.  All invariants are computed on the blown plane and scaled by the
covering degree: the canonical class of the cover is the pullback of
K_tilde + ((m-1)/m) B where B is the branch divisor class, the Euler
characteristic comes from the stratification into the free part, the
m^(k-1)-fold branch curves, and the m^(k-2)-fold crossing points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement
from .homology import (
    DeckGroup,
    Epimorphism,
    SmoothnessCertificate,
    Vector,
    galois_kernel,
    smoothness_check,
    validate_epimorphism,
)
from .intersection import (
    DivisorClass,
    canonical_class,
    exceptional,
    pairing,
    strict_transform,
)

BLOW_ALL_TRIPLE = "all_r_ge_3"


@dataclass(frozen=True)
class CoverModel:
    arrangement: Arrangement
    phi: Epimorphism
    blown_ids: tuple[int, ...]
    certificate: SmoothnessCertificate
    deck: DeckGroup

    @classmethod
    def build(
        cls,
        arr: Arrangement,
        phi: Epimorphism,
        blow: str | list[int] | tuple[int, ...] = BLOW_ALL_TRIPLE,
    ) -> CoverModel:
        if phi.n != arr.n:
            raise ValueError(
                f"epimorphism has {phi.n} rows but the arrangement has {arr.n} lines"
            )
        if blow == BLOW_ALL_TRIPLE:
            blown = tuple(pid for pid, p in enumerate(arr.points) if p.r >= 3)
        else:
            blown = tuple(sorted(set(int(b) for b in blow)))
            for pid in blown:
                if not 0 <= pid < len(arr.points):
                    raise ValueError(f"blow-up id {pid} out of range")
        cert = smoothness_check(arr, phi, blown)
        deck = galois_kernel(phi)
        return cls(arr, phi, blown, cert, deck)

    @property
    def m(self) -> int:
        return self.phi.m

    @property
    def k(self) -> int:
        return self.phi.k

    def require_smooth(self) -> None:
        if not self.certificate.ok:
            bad = ", ".join(c.detail for c in self.certificate.failures())
            raise ValueError(f"cover is not certified smooth: {bad}")


# -- canonical class -----------------------------------------------------------


def branch_class(arr: Arrangement, blown_ids: tuple[int, ...]) -> DivisorClass:
    """B = sum of strict transforms + sum of exceptional curves."""
    total = canonical_class(blown_ids).scaled(0)
    for i in range(arr.n):
        total = total + strict_transform(arr, i, blown_ids)
    for pid in blown_ids:
        total = total + exceptional(pid, blown_ids)
    return total


def adjoint_branch_class(
    arr: Arrangement, blown_ids: tuple[int, ...], m: int
) -> DivisorClass:
    """K_tilde + ((m-1)/m) B; its pullback is the cover's canonical class."""
    ktilde = canonical_class(blown_ids)
    if m == 1:
        return ktilde
    return ktilde + branch_class(arr, blown_ids).scaled(Fraction(m - 1, m))


def cover_canonical(cover: CoverModel) -> DivisorClass:
    cover.require_smooth()
    return adjoint_branch_class(cover.arrangement, cover.blown_ids, cover.m)


# -- Euler characteristic --------------------------------------------------------


def stratified_euler(
    arr: Arrangement, blown_ids: tuple[int, ...], m: int, k: int
) -> int:
    """e(cover) by additivity over the free part, branch curves, and crossings.

    Requires every unblown point to be 2-fold so that at most two branch
    components pass through any point, all transversally.
    """
    blown = set(blown_ids)
    for pid, p in enumerate(arr.points):
        if pid not in blown and p.r != 2:
            raise ValueError(
                f"unblown {p.r}-fold point {p.incident_1based()}: "
                "more than two branch components would cross"
            )
    n = arr.n
    n_blown = len(blown_ids)
    crossings = sum(arr.points[pid].r for pid in blown_ids) + sum(
        1 for pid, p in enumerate(arr.points) if pid not in blown and p.r == 2
    )
    e_complement = (3 + n_blown) - 2 * n - 2 * n_blown + crossings
    line_parts = 0
    for i in range(n):
        on_line = [pid for pid, p in enumerate(arr.points) if i in p.incident]
        branch_pts = sum(
            1 for pid in on_line if pid in blown or arr.points[pid].r == 2
        )
        line_parts += 2 - branch_pts
    exc_parts = sum(2 - arr.points[pid].r for pid in blown_ids)

    total = (
        Fraction(m) ** k * e_complement
        + Fraction(m) ** (k - 1) * (line_parts + exc_parts)
        + Fraction(m) ** (k - 2) * crossings
    )
    if total.denominator != 1:
        raise ValueError("stratified Euler characteristic is not integral")
    return int(total)


# -- invariant report -------------------------------------------------------------


@dataclass(frozen=True)
class CurveInvariants:
    label: str
    self_int: int
    k_degree: int
    genus: int


@dataclass(frozen=True)
class InvariantReport:
    m: int
    k: int
    k2: int
    euler: int
    chi: int
    my_defect: int
    line_curves: tuple[CurveInvariants, ...]
    point_curves: tuple[CurveInvariants, ...]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "k2": self.k2,
            "euler": self.euler,
            "chi": self.chi,
            "my_defect": self.my_defect,
            "line_curves": [vars(c) for c in self.line_curves],
            "point_curves": [vars(c) for c in self.point_curves],
        }


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ValueError(f"{what} = {x} is not an integer")
    return int(x)


def _curve_invariants(
    label: str, cls: DivisorClass, kadj: DivisorClass, m: int, k: int
) -> CurveInvariants:
    self_int = _as_int(Fraction(m) ** (k - 2) * pairing(cls, cls), f"{label}^2")
    k_degree = _as_int(Fraction(m) ** (k - 1) * pairing(cls, kadj), f"({label},K)")
    two_g = self_int + k_degree + 2
    if two_g % 2 or two_g < 0:
        raise ValueError(f"adjunction gives no valid genus for {label}")
    return CurveInvariants(label, self_int, k_degree, two_g // 2)


def invariants(cover: CoverModel) -> InvariantReport:
    cover.require_smooth()
    arr, blown, m, k = cover.arrangement, cover.blown_ids, cover.m, cover.k
    kadj = adjoint_branch_class(arr, blown, m)
    k2 = _as_int(Fraction(m) ** k * pairing(kadj, kadj), "K^2")
    euler = stratified_euler(arr, blown, m, k)
    chi = (k2 + euler) // 12
    if (k2 + euler) % 12:
        raise ValueError(f"K^2 + e = {k2 + euler} violates the Noether quotient")
    lines = tuple(
        _curve_invariants(
            f"C{i + 1}", strict_transform(arr, i, blown), kadj, m, k
        )
        for i in range(arr.n)
    )
    points = tuple(
        _curve_invariants(
            "D" + ",".join(str(x) for x in arr.points[pid].incident_1based()),
            exceptional(pid, blown),
            kadj,
            m,
            k,
        )
        for pid in blown
    )
    return InvariantReport(
        m=m,
        k=k,
        k2=k2,
        euler=euler,
        chi=chi,
        my_defect=k2 - 3 * euler,
        line_curves=lines,
        point_curves=points,
    )


# -- tri-canonical decomposition ---------------------------------------------------


@dataclass(frozen=True)
class ThreeCanonicalDecomposition:
    line_coeffs: tuple
    point_coeffs: tuple
    integral: bool
    all_positive: bool
    canonical_route: bool
    note: str

    def to_dict(self) -> dict:
        return {
            "line_coeffs": [str(c) for c in self.line_coeffs],
            "point_coeffs": [str(c) for c in self.point_coeffs],
            "integral": self.integral,
            "all_positive": self.all_positive,
            "canonical_route": self.canonical_route,
            "note": self.note,
        }


def three_canonical_decomposition(cover: CoverModel) -> ThreeCanonicalDecomposition:
    """Express 3K of the cover as a combination of branch-curve classes.

    When 3*K_tilde equals minus the sum of strict transforms the coefficients
    are the uniform (2m-3, 3(m-1)); otherwise a near-balanced integral
    distribution is searched and reported, or the rational symmetric solution
    with integral=False.
    """
    cover.require_smooth()
    arr, blown, m = cover.arrangement, cover.blown_ids, cover.m
    if m < 2:
        raise ValueError("no branch curves: the covering is trivial")
    n = arr.n
    incident = {pid: arr.points[pid].incident for pid in blown}

    ktilde3 = canonical_class(blown).scaled(3)
    minus_lines = canonical_class(blown).scaled(0)
    for i in range(n):
        minus_lines = minus_lines - strict_transform(arr, i, blown)
    if ktilde3 == minus_lines:
        line_coeffs = tuple([2 * m - 3] * n)
        # reduces to 3(m-1) at every 3-fold point, which the class identity forces
        point_coeffs = tuple(
            3 * m
            - 3 * (m - 1) * (arr.points[pid].r - 1)
            + sum(line_coeffs[i] for i in incident[pid])
            for pid in blown
        )
        return ThreeCanonicalDecomposition(
            line_coeffs,
            point_coeffs,
            integral=True,
            all_positive=all(c > 0 for c in line_coeffs + point_coeffs),
            canonical_route=True,
            note="3K_tilde = -(sum of strict transforms); uniform coefficients",
        )

    total = 3 * (n * (m - 1) - 3 * m)  # sum of line coefficients

    def point_coeff(pid: int, c: list[int]) -> int:
        r = arr.points[pid].r
        return 3 * m - 3 * (m - 1) * (r - 1) + sum(c[i] for i in incident[pid])

    base, rem = divmod(total, n)
    for extra in itertools.combinations(range(n), rem):
        c = [base + (1 if i in extra else 0) for i in range(n)]
        d = [point_coeff(pid, c) for pid in blown]
        if all(x > 0 for x in c) and all(x > 0 for x in d):
            return ThreeCanonicalDecomposition(
                tuple(c),
                tuple(d),
                integral=True,
                all_positive=True,
                canonical_route=False,
                note="near-balanced integral distribution (not unique)",
            )

    c_rat = [Fraction(total, n)] * n
    d_rat = [
        3 * m - 3 * (m - 1) * (arr.points[pid].r - 1) + sum(c_rat[i] for i in incident[pid])
        for pid in blown
    ]
    return ThreeCanonicalDecomposition(
        tuple(c_rat),
        tuple(d_rat),
        integral=all(x.denominator == 1 for x in c_rat + d_rat),
        all_positive=all(x > 0 for x in c_rat + d_rat),
        canonical_route=False,
        note="no positive integral distribution found; symmetric rational solution",
    )


# -- Diophantine filter --------------------------------------------------------------


def nonnegative_solutions(coeffs: tuple[int, ...], target: int) -> list[tuple[int, ...]]:
    """All non-negative integer solutions of sum(coeffs[i] * x_i) = target.

    An empty list is the obstruction used to pin curves to the branch set.
    """
    if any(c <= 0 for c in coeffs):
        raise ValueError("coefficients must be positive")
    solutions: list[tuple[int, ...]] = []

    def recurse(idx: int, remaining: int, partial: tuple[int, ...]) -> None:
        if idx == len(coeffs) - 1:
            q, r = divmod(remaining, coeffs[idx])
            if r == 0:
                solutions.append(partial + (q,))
            return
        for x in range(remaining // coeffs[idx] + 1):
            recurse(idx + 1, remaining - x * coeffs[idx], partial + (x,))

    if target >= 0 and coeffs:
        recurse(0, target, ())
    return solutions


# -- generator words ------------------------------------------------------------------


def generator_words(phi: Epimorphism) -> tuple[Vector, ...]:
    """Exponent vectors of w_j^m as monomials in the line equations.

    The j-th word is phi's j-th column read as exponents in 0..m-1; the last
    line's exponent is forced by the zero-sum relation.
    """
    report = validate_epimorphism(phi)
    if not report.zero_sum_ok:
        raise ValueError(f"invalid epimorphism: {report.errors}")
    return tuple(phi.column(j) for j in range(phi.k))


def word_str(exponents: Vector, j: int, m: int) -> str:
    factors = [
        f"l{i + 1}" + (f"^{e}" if e > 1 else "")
        for i, e in enumerate(exponents)
        if e
    ]
    rhs = "*".join(factors) if factors else "1"
    return f"w{j + 1}^{m} = {rhs}"
