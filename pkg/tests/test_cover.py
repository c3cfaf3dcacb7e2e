from fractions import Fraction

import pytest

from planecover.arrangement import Line, build_arrangement
from planecover.catalog import PHI3, builtin_cover
from planecover.cover import (
    CoverModel,
    adjoint_branch_class,
    cover_canonical,
    generator_words,
    invariants,
    nonnegative_solutions,
    stratified_euler,
    three_canonical_decomposition,
    word_str,
)
from planecover.cyclotomic import CycNumber
from planecover.homology import Epimorphism
from planecover.intersection import canonical_class


def test_example1_invariants(cover1):
    rep = invariants(cover1)
    assert rep.k2 == 333
    assert rep.euler == 111
    assert rep.chi == 37
    assert rep.my_defect == 0
    for c in rep.line_curves:
        assert (c.self_int, c.k_degree, c.genus) == (-3, 9, 4)
    for d in rep.point_curves:
        assert (d.self_int, d.k_degree, d.genus) == (-1, 3, 2)
    assert len(rep.line_curves) == 9 and len(rep.point_curves) == 12


def test_example2_invariants(cover2):
    rep = invariants(cover2)
    assert (rep.k2, rep.euler) == (333, 111)


def test_example3_invariants(cover3):
    rep = invariants(cover3)
    assert (rep.k2, rep.euler, rep.chi) == (45, 15, 5)
    assert rep.my_defect == 0


def test_noether_integrality(cover1, cover2, cover3):
    for cover in (cover1, cover2, cover3):
        rep = invariants(cover)
        assert (rep.k2 + rep.euler) % 12 == 0
        for c in rep.line_curves + rep.point_curves:
            assert c.genus >= 0
            assert (c.self_int + c.k_degree + 2) % 2 == 0


def test_euler_cross_check_verbatim_grouping(cover1, cover2):
    # the same stratification grouped line-wise: 25(15 - 9*2 - 12*2 + 9*4)
    # + 5*9(2-4) + 5*12(2-3) + 9*4
    grouped = 25 * (15 - 9 * 2 - 12 * 2 + 9 * 4) + 5 * 9 * (2 - 4) + 5 * 12 * (2 - 3) + 9 * 4
    assert grouped == invariants(cover1).euler == invariants(cover2).euler


def test_cover_canonical_example1(cover1):
    kadj = cover_canonical(cover1)
    assert kadj.h == Fraction(21, 5)
    assert all(c == Fraction(-3, 5) for _, c in kadj.e)
    assert len(kadj.e) == 12


def test_cover_canonical_example3(cover3):
    kadj = cover_canonical(cover3)
    assert kadj.h == Fraction(9, 5)
    assert all(c == Fraction(-3, 5) for _, c in kadj.e)
    assert len(kadj.e) == 4


def test_adjoint_class_trivial_degree(dh):
    blown = tuple(pid for pid, p in enumerate(dh.points) if p.r >= 3)
    assert adjoint_branch_class(dh, blown, 1) == canonical_class(blown)


def test_three_canonical_example1(cover1):
    dec = three_canonical_decomposition(cover1)
    assert dec.line_coeffs == (7,) * 9
    assert dec.point_coeffs == (12,) * 12
    assert dec.integral and dec.all_positive and dec.canonical_route


def test_three_canonical_example3(cover3):
    dec = three_canonical_decomposition(cover3)
    assert dec.integral and dec.all_positive
    assert not dec.canonical_route
    assert sum(dec.line_coeffs) == 27
    # consistency of the class identity behind the reported coefficients
    arr, blown, m = cover3.arrangement, cover3.blown_ids, cover3.m
    from planecover.intersection import exceptional, strict_transform

    lhs = adjoint_branch_class(arr, blown, m).scaled(3)
    rhs = canonical_class(blown).scaled(0)
    for i, c in enumerate(dec.line_coeffs):
        rhs = rhs + strict_transform(arr, i, blown).scaled(Fraction(c, m))
    for pid, d in zip(blown, dec.point_coeffs):
        rhs = rhs + exceptional(pid, blown).scaled(Fraction(d, m))
    assert lhs == rhs


def test_trivial_degree_refused_at_the_type_level():
    # m = 1 means no branch curves at all; the epimorphism type refuses it
    with pytest.raises(ValueError, match="modulus"):
        Epimorphism(m=1, k=1, rows=((0,),) * 9)


PHI_ROWS_FOR_DH = (
    (1, 1), (1, 0), (1, 1), (3, 3), (3, 0), (0, 1), (0, 1), (0, 2), (1, 1),
)


def test_triangle_cover_reports_honest_decomposition():
    # three generic lines, nothing to blow up: the degree-25 cover is again
    # a plane (K^2 = 9, e = 3) and no positive combination of branch curves
    # can express the anti-ample 3K
    arr = build_arrangement(
        [
            Line.make(CycNumber(1), CycNumber(0), CycNumber(0)),
            Line.make(CycNumber(0), CycNumber(1), CycNumber(0)),
            Line.make(CycNumber(0), CycNumber(0), CycNumber(1)),
        ]
    )
    phi = Epimorphism(m=5, k=2, rows=((1, 0), (0, 1), (4, 4)))
    cover = CoverModel.build(arr, phi)
    assert cover.certificate.ok
    rep = invariants(cover)
    assert (rep.k2, rep.euler, rep.chi) == (9, 3, 1)
    assert all(c.genus == 0 for c in rep.line_curves)
    dec = three_canonical_decomposition(cover)
    assert not dec.all_positive
    assert sum(dec.line_coeffs) == -9


def test_invariants_require_smoothness(dh):
    rows = [(1, 0), (1, 0), (1, 0), (0, 1), (0, 4), (2, 0), (0, 0), (0, 0), (0, 0)]
    phi = Epimorphism(m=5, k=2, rows=tuple(rows))
    cover = CoverModel.build(dh, phi)
    assert not cover.certificate.ok
    with pytest.raises(ValueError, match="not certified smooth"):
        invariants(cover)


def test_stratified_euler_rejects_unblown_triple(dh):
    with pytest.raises(ValueError, match="unblown 3-fold"):
        stratified_euler(dh, (), 5, 2)


def test_scaling_sanity_trivial_cover(cq):
    # with m = 1, k = 0 the stratified formula must return the blown plane
    blown = tuple(pid for pid, p in enumerate(cq.points) if p.r >= 3)
    assert stratified_euler(cq, blown, 1, 0) == 3 + len(blown)

    two_lines = build_arrangement(
        [
            Line.make(CycNumber(1), CycNumber(0), CycNumber(0)),
            Line.make(CycNumber(0), CycNumber(1), CycNumber(0)),
        ]
    )
    assert stratified_euler(two_lines, (), 1, 0) == 3


def test_diophantine_filter_obstruction():
    assert nonnegative_solutions((7, 12), 27) == []
    assert nonnegative_solutions((7, 12), 9) == []
    assert nonnegative_solutions((7, 12), 19) == [(1, 1)]


def test_diophantine_filter_general():
    assert nonnegative_solutions((2, 3), 7) == [(2, 1)]
    assert set(nonnegative_solutions((1, 2), 4)) == {(0, 2), (2, 1), (4, 0)}
    with pytest.raises(ValueError):
        nonnegative_solutions((0, 3), 5)


def test_generator_words_examples(cover1, cover2, cover3):
    w1 = [word_str(w, j, 5) for j, w in enumerate(generator_words(cover1.phi))]
    assert w1 == ["w1^5 = l1*l2*l3*l4^3*l5^3*l9", "w2^5 = l1*l3*l4^3*l6*l7*l8^2*l9"]
    w2 = [word_str(w, j, 5) for j, w in enumerate(generator_words(cover2.phi))]
    assert w2 == ["w1^5 = l2*l3*l5*l7*l8", "w2^5 = l1*l4*l6*l7^2*l8^2*l9^3"]
    w3 = [word_str(w, j, 5) for j, w in enumerate(generator_words(cover3.phi))]
    assert w3 == ["w1^5 = l1*l2*l3*l6^2", "w2^5 = l3^2*l4*l5*l6"]


def test_generator_word_exponents_are_zero_sum(cover1):
    for w in generator_words(cover1.phi):
        assert sum(w) % 5 == 0


def test_generator_words_are_the_unit_characters(cover1, cover2, cover3):
    # the j-th word exponent vector is the character of the j-th deck
    # coordinate: mod-m vanishing orders along the branch curves
    from planecover.characters import enumerate_characters

    for cover in (cover1, cover2, cover3):
        charset = set(enumerate_characters(cover.phi))
        for w in generator_words(cover.phi):
            assert w in charset


def test_builtin_covers_are_smooth():
    for name in ("example1", "example2", "example3"):
        assert builtin_cover(name).certificate.ok


def test_build_rejects_mismatched_sizes(cq):
    with pytest.raises(ValueError, match="rows"):
        CoverModel.build(cq, Epimorphism(m=5, k=2, rows=PHI_ROWS_FOR_DH))


def test_build_accepts_explicit_blow_list(cq):
    blown = tuple(pid for pid, p in enumerate(cq.points) if p.r >= 3)
    cover = CoverModel.build(cq, PHI3, list(blown))
    assert cover.blown_ids == blown
    assert cover.certificate.ok
    with pytest.raises(ValueError, match="out of range"):
        CoverModel.build(cq, PHI3, [99])
