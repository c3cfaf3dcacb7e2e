"""Topological bound arithmetic for real surfaces.

Hodge-theoretic inputs are plain integers: (h10, h20, h11), the 2-torsion
rank nu of H_1, and optionally the splitting (p_plus, p_minus) of the
primitive part of H^{1,1} under a real structure, with
p_plus + p_minus = h11 - 1.  Real components enter as Z/2-Betti triples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

Betti = tuple[int, int, int]


@dataclass(frozen=True)
class HodgeData:
    h10: int
    h20: int
    h11: int
    nu: int = 0
    p_plus: int | None = None
    p_minus: int | None = None
    components: tuple[Betti, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        for name in ("h10", "h20", "h11", "nu"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if (self.p_plus is None) != (self.p_minus is None):
            raise ValueError("p_plus and p_minus must be given together")
        if self.p_plus is not None:
            if self.p_plus < 0 or self.p_minus < 0:
                raise ValueError("p_plus and p_minus must be non-negative")
            if self.p_plus + self.p_minus != self.h11 - 1:
                raise ValueError("p_plus + p_minus must equal h11 - 1")
        object.__setattr__(self, "components", tuple(tuple(c) for c in self.components))

    def require_split(self) -> tuple[int, int]:
        if self.p_plus is None or self.p_minus is None:
            raise ValueError("this computation needs the (p_plus, p_minus) split")
        return self.p_plus, self.p_minus


def hodge_from_surface(k2: int, euler: int, q: int = 0, nu: int = 0, **kw) -> HodgeData:
    """Assemble Hodge numbers from K^2, e, and the irregularity input flag.

    chi = (K^2 + e)/12 must be an integer (Noether); then p_g = chi - 1 + q
    and h11 = e - 2 + 4q - 2 p_g.
    """
    if (k2 + euler) % 12:
        raise ValueError(f"K^2 + e = {k2 + euler} is not divisible by 12")
    chi = (k2 + euler) // 12
    pg = chi - 1 + q
    h11 = euler - 2 + 4 * q - 2 * pg
    if pg < 0 or h11 < 0:
        raise ValueError("inconsistent surface data")
    return HodgeData(h10=q, h20=pg, h11=h11, nu=nu, **kw)


def complex_betti_total(h: HodgeData) -> int:
    """2 + 4(h10 + nu) + 2 h20 + h11: the Z/2 homology total upstairs."""
    return 2 + 4 * (h.h10 + h.nu) + 2 * h.h20 + h.h11


smith_total = complex_betti_total


def real_betti_total(components: tuple[Betti, ...]) -> int:
    return sum(sum(c) for c in components)


def is_maximal(h: HodgeData, components: tuple[Betti, ...] | None = None) -> bool:
    """Smith bound attained: total real Betti equals the complex total."""
    comps = h.components if components is None else components
    real = real_betti_total(comps)
    total = smith_total(h)
    if real > total:
        raise ValueError(f"Smith bound violated: {real} > {total}")
    return real == total


def lefschetz_trace(h: HodgeData, components: tuple[Betti, ...] | None = None) -> int:
    """Solve b0 - b1 + b2 = 1 + tr on the primitive (1,1)-part for tr."""
    comps = h.components if components is None else components
    trace = sum(c[0] - c[1] + c[2] for c in comps) - 1
    if abs(trace) > h.h11 - 1:
        raise ValueError(
            f"trace {trace} exceeds the primitive (1,1) dimension {h.h11 - 1}"
        )
    return trace


def my_identity(h: HodgeData) -> bool:
    """h11 = h20 + h10 + 1, the Hodge shape forced by K^2 = 3e."""
    return h.h11 == h.h20 + h.h10 + 1


def m_surface_beta1(h: HodgeData) -> int:
    """First real Betti number of a maximal surface: 1 + 2(h10+nu) + h20 + p-."""
    _, p_minus = h.require_split()
    return 1 + 2 * (h.h10 + h.nu) + h.h20 + p_minus


def my_m_surface_beta1(h: HodgeData) -> int:
    """The same number rewritten under the h11 = h20 + h10 + 1 identity."""
    _, p_minus = h.require_split()
    if not my_identity(h):
        raise ValueError("h11 = h20 + h10 + 1 fails for this data")
    return h.h11 + p_minus + h.h10 + 2 * h.nu


def prop_h20_lower_bound(h: HodgeData) -> int:
    """Lower bound 2 nu + 5 p_plus + 4 for h20 of a maximal MY surface."""
    if not my_identity(h):
        raise ValueError("not Miyaoka-Yau shaped: h11 != h20 + h10 + 1")
    p_plus, _ = h.require_split()
    return 2 * h.nu + 5 * p_plus + 4


@dataclass(frozen=True)
class ComponentBoundVerdict:
    lhs: int
    rhs: int
    satisfied: bool
    feasible: bool
    note: str


def component_count_bound(h: HodgeData, k3: int) -> ComponentBoundVerdict:
    """Feasibility of a maximal MY real part with k3 components of type N_3.

    Components other than the k3 spheres-with-3-blown-points force
    beta1 >= 4k - k3, which against the maximal-surface count demands
    h11 + h10 + 2nu + p- >= 2h11 + 2h10 + 4nu + 2p+ + 2 - k3;
    since p- <= h11 - 1 this is impossible for k3 < 3.
    """
    p_plus, p_minus = h.require_split()
    lhs = h.h11 + h.h10 + 2 * h.nu + p_minus
    rhs = 2 * h.h11 + 2 * h.h10 + 4 * h.nu + 2 * p_plus + 2 - k3
    satisfied = lhs >= rhs
    if k3 < 3:
        note = (
            f"k3 = {k3} < 3: needs p_minus >= h11 + {h.h10 + 2 * h.nu + 2 * p_plus + 2 - k3}, "
            "impossible since p_minus <= h11 - 1"
        )
        feasible = False
    else:
        feasible = satisfied or k3 > 3 + h.h10 + 2 * h.nu + 2 * p_plus
        note = "constraint reduces to h11 <= p_minus + 1 (boundary case)" if (
            k3 == 3 and h.h10 == 0 and h.nu == 0 and p_plus == 0
        ) else f"requires p_minus >= {rhs - lhs + p_minus}"
    return ComponentBoundVerdict(lhs, rhs, satisfied, feasible, note)


# -- the fixed fake-plane scenario ----------------------------------------------


@dataclass(frozen=True)
class FakePlaneReport:
    curve_case_equation: str
    curve_case_contradiction: bool
    lefschetz_fixed_points: int
    jacobian_det: int
    holomorphic_sum: Fraction
    holomorphic_contradiction: bool

    def to_dict(self) -> dict:
        return {
            "curve_case_equation": self.curve_case_equation,
            "curve_case_contradiction": self.curve_case_contradiction,
            "lefschetz_fixed_points": self.lefschetz_fixed_points,
            "jacobian_det": self.jacobian_det,
            "holomorphic_sum": str(self.holomorphic_sum),
            "holomorphic_contradiction": self.holomorphic_contradiction,
        }


def fake_plane_involution_check() -> FakePlaneReport:
    """Arithmetic obstruction to an order-2 automorphism of a surface with
    b0 = b2 = b4 = 1, b1 = b3 = 0 and K^2 = 9.

    (a) a fixed curve C = rK (r > 0) would satisfy both e(C) = 2 C^2 > 0 and
        e(C) = -(C^2 + C.K) < 0: the equation 2(9 r^2) = -(9 r^2 + 9 r) has
        no positive root;
    (b) the topological trace forces exactly 1 - 0 + 1 - 0 + 1 = 3 fixed
        points;
    (c) each fixed point contributes 1/det(Id - (-Id)) = 1/4, so the
        holomorphic trace sums to 3/4, never 1.
    """
    # (a) 27 r^2 + 9 r = 0 has roots r = 0 and r = -1/3 only
    roots = (Fraction(0), Fraction(-1, 3))
    curve_contradiction = all(r <= 0 for r in roots)
    # (b)
    fixed_points = 1 - 0 + 1 - 0 + 1
    # (c) det(Id - diag(-1, -1)) = 2 * 2
    det = 2 * 2
    holo_sum = Fraction(fixed_points, det)
    return FakePlaneReport(
        curve_case_equation="27*r^2 + 9*r = 0",
        curve_case_contradiction=curve_contradiction,
        lefschetz_fixed_points=fixed_points,
        jacobian_det=det,
        holomorphic_sum=holo_sum,
        holomorphic_contradiction=holo_sum != 1,
    )


def small_component_exclusion(component: Betti, negatively_curved: bool = True) -> str:
    """Reject sphere, RP^2, torus, Klein bottle components (beta1 <= 2) of the
    real part of a negatively curved surface; accept beta1 >= 3."""
    if not negatively_curved:
        return "not applicable: requires negative curvature / ball quotient"
    return "accepted" if component[1] >= 3 else "rejected"
