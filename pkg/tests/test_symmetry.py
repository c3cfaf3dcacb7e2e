import itertools

import pytest

from planecover.arrangement import perm_cycles_str
from planecover.bounds import hodge_from_surface, smith_total
from planecover.catalog import PHI2, PHI3
from planecover.characters import enumerate_characters
from planecover.symmetry import (
    character_preserving_symmetries,
    classify_real_structures,
    deck_action_of,
    klein_model,
    real_part_topology,
)

IDENTITY9 = tuple(range(9))
CONJ_PERM = (0, 2, 1, 5, 4, 3, 7, 6, 8)
QUAD_SWAP = (1, 0, 2, 4, 3, 5)  # (1 2)(4 5)
OPPOSITE_SWAP = (3, 4, 5, 0, 1, 2)  # (1 4)(2 5)(3 6)


def test_example1_only_identity_preserves_characters(dh, cover1):
    charset = enumerate_characters(cover1.phi)
    assert character_preserving_symmetries(dh, charset) == [IDENTITY9]


def test_example2_exactly_one_nontrivial_symmetry(dh, cover2):
    charset = enumerate_characters(cover2.phi)
    perms = character_preserving_symmetries(dh, charset)
    assert len(perms) == 2
    assert IDENTITY9 in perms and CONJ_PERM in perms


def test_example3_preserving_subgroup(cq, cover3):
    charset = enumerate_characters(cover3.phi)
    perms = character_preserving_symmetries(cq, charset)
    assert tuple(range(6)) in perms
    assert QUAD_SWAP in perms
    # the opposite-swap preserves the characters but not the incidence,
    # so it cannot appear here
    assert OPPOSITE_SWAP not in perms
    assert len(perms) == 2


def test_deck_action_of_conjugation_is_inversion():
    action = deck_action_of(CONJ_PERM, True, PHI2)
    assert action == ((4, 0), (0, 4))


def test_deck_action_of_identity():
    action = deck_action_of(IDENTITY9, False, PHI2)
    assert action == ((1, 0), (0, 1))


def test_deck_action_of_opposite_swap_exchanges_generators():
    action = deck_action_of(OPPOSITE_SWAP, False, PHI3)
    assert action == ((0, 1), (1, 0))


def test_deck_action_rejects_non_preserving_permutation():
    with pytest.raises(ValueError, match="does not preserve"):
        deck_action_of((1, 0) + tuple(range(2, 9)), False, PHI2)


def test_klein_model_example1(model1):
    assert model1.order == 25
    assert not model1.has_anti
    assert [r.sym.perm for r in model1.realized] == [IDENTITY9]
    assert (IDENTITY9, True) in model1.combinatorial_only


def test_klein_model_example2(model2):
    assert model2.order == 50
    assert model2.has_anti
    realized = {(r.perm, r.anti) for r in model2.realized}
    assert realized == {(IDENTITY9, False), (CONJ_PERM, True)}
    # the anti generator is plain coefficient conjugation
    from planecover.linalg import identity

    anti = next(r for r in model2.realized if r.anti)
    assert anti.sym.matrix == identity()
    assert anti.deck_aut == ((4, 0), (0, 4))


def test_klein_model_example2_rejects_combinatorial_only(model2):
    rejected = set(model2.combinatorial_only)
    assert (IDENTITY9, True) in rejected
    assert (CONJ_PERM, False) in rejected


def test_klein_model_example3(model3):
    assert model3.order == 100
    realized = {(r.perm, r.anti) for r in model3.realized}
    assert realized == {
        (tuple(range(6)), False),
        (tuple(range(6)), True),
        (QUAD_SWAP, False),
        (QUAD_SWAP, True),
    }


def test_deck_action_homomorphism_on_models(model2, model3):
    for model in (model2, model3):
        for r1, r2 in itertools.product(model.realized, repeat=2):
            from planecover.arrangement import compose_perms

            perm = compose_perms(r1.perm, r2.perm)
            anti = r1.anti != r2.anti
            idx = model.index_of(perm, anti)
            composed = model.realized[idx].deck_aut
            m = model.m
            k = model.k
            product = tuple(
                tuple(
                    sum(r1.deck_aut[i][t] * r2.deck_aut[t][j] for t in range(k)) % m
                    for j in range(k)
                )
                for i in range(k)
            )
            assert composed == product


def test_example1_has_no_real_structures(model1):
    assert classify_real_structures(model1) == []


def test_example2_unique_real_structure_class(model2):
    classes = classify_real_structures(model2)
    assert len(classes) == 1
    cls = classes[0]
    assert cls.size == 25
    assert cls.perm_cycles == "(2 3)(4 6)(7 8)"
    assert cls.fixed_lines == (1, 5, 9)
    assert cls.n_real_blown == 4
    assert cls.real_part_euler == -3
    assert cls.real_part_betti == (1, 5, 1)


def test_example2_all_anti_elements_are_involutions(model2):
    anti_elements = [
        x for x in model2.elements() if model2.realized[x[0]].anti
    ]
    assert len(anti_elements) == 25
    assert all(model2.is_involution(x) for x in anti_elements)


def test_example3_two_classes_with_distinct_fingerprints(model3):
    classes = classify_real_structures(model3)
    assert len(classes) >= 2
    assert len(classes) == 2  # derived exact count
    by_lines = {cls.fixed_lines: cls for cls in classes}
    assert (1, 2, 3, 4, 5, 6) in by_lines
    assert (3, 6) in by_lines
    all_real = by_lines[(1, 2, 3, 4, 5, 6)]
    two_real = by_lines[(3, 6)]
    assert all_real.n_real_blown == 4
    assert all_real.real_part_betti == (1, 5, 1)
    assert two_real.n_real_blown == 2
    assert two_real.real_part_betti == (1, 3, 1)


def test_classes_partition_the_involutions(model3):
    classes = classify_real_structures(model3)
    total = sum(c.size for c in classes)
    anti_involutions = [
        x
        for x in model3.elements()
        if model3.realized[x[0]].anti and model3.is_involution(x)
    ]
    assert total == len(anti_involutions)


def test_representatives_square_to_identity(model2, model3):
    for model in (model2, model3):
        for cls in classify_real_structures(model):
            x = cls.representative
            idx, delta = model.multiply(x, x)
            assert model.realized[idx].perm == tuple(range(model.cover.arrangement.n))
            assert not model.realized[idx].anti
            assert all(v == 0 for v in delta)


def test_real_part_topology_example2(cover2, model2):
    cls = classify_real_structures(model2)[0]
    euler, betti = real_part_topology(cover2, cls)
    assert euler == -3
    assert betti == (1, 5, 1)
    assert sum(betti) == 7


def test_real_part_no_real_centers():
    from planecover.symmetry import _real_part_from_count

    assert _real_part_from_count(0) == (1, (1, 1, 1))


def test_even_degree_refused(model2):
    cls = classify_real_structures(model2)[0]
    from planecover import symmetry as sym_mod

    class EvenCover:
        m = 4

    with pytest.raises(ValueError, match="even"):
        sym_mod.real_part_topology(EvenCover(), cls)


def test_example2_not_maximal_cross_module(cover2, model2):
    # real total Betti 7 against the Smith total 111 upstairs
    cls = classify_real_structures(model2)[0]
    rep_total = sum(cls.real_part_betti)
    from planecover.cover import invariants

    rep = invariants(cover2)
    h = hodge_from_surface(rep.k2, rep.euler, q=0, nu=0)
    assert rep_total == 7
    assert smith_total(h) == 111
    assert rep_total < smith_total(h)


def test_perm_cycle_labels(model2):
    labels = sorted(perm_cycles_str(r.perm) for r in model2.realized)
    assert labels == ["(2 3)(4 6)(7 8)", "id"]
