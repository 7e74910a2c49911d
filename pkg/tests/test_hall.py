import pytest

from hallkit.errors import NoRefinement
from hallkit.hall import (
    dominant_refinement,
    expected_degree,
    hall_multiplicity,
    hall_polynomial,
    lr_multiplicity,
)
from hallkit.partitions import partitions_of
from hallkit.qforms import QPolynomial
from hallkit.tableaux import (
    KleinTableau,
    LRTableau,
    enumerate_klein,
    enumerate_klein_refinements,
    enumerate_lr,
)


def poly(d):
    return QPolynomial.from_dict(d)


def test_worked_example():
    bd = hall_polynomial((3, 2, 1), (4, 3, 2), (2, 1))
    assert bd.total == poly({2: 2, 1: 1, 0: -1})
    assert sorted(p.to_text() for _, p in bd.per_tableau) == ["q - 1", "q^2", "q^2"]


def test_worked_example_multiplicities_by_tableau():
    pi2 = KleinTableau.make(
        [(2, 1), (3, 2, 1), (3, 3, 2), (4, 3, 2)],
        {(2, 2): [1], (2, 3): [2], (3, 4): [2]},
    )
    pi3 = KleinTableau.make(
        [(2, 1), (3, 2, 1), (3, 3, 2), (4, 3, 2)],
        {(2, 2): [1], (2, 3): [2], (3, 4): [3]},
    )
    assert hall_multiplicity(pi2) == poly({1: 1, 0: -1})
    assert hall_multiplicity(pi3) == poly({2: 1})


def test_full_group_tableau_counts_one():
    (tab,) = enumerate_klein((2, 1), (2, 1), ())
    assert hall_multiplicity(tab) == QPolynomial.one()


def test_hall_polynomial_simple_cases():
    assert hall_polynomial((1,), (1, 1), (1,)).total == poly({1: 1, 0: 1})
    assert hall_polynomial((2,), (1, 1), ()).total == QPolynomial.zero()
    assert hall_polynomial((2,), (1, 1), ()).per_tableau == ()


def test_breakdown_sums_to_total():
    for beta in partitions_of(6):
        for k in range(7):
            for alpha in partitions_of(k):
                for gamma in partitions_of(6 - k):
                    bd = hall_polynomial(alpha, beta, gamma)
                    total = QPolynomial.zero()
                    for _, p in bd.per_tableau:
                        total = total + p
                    assert total == bd.total


def test_lr_multiplicity_examples():
    lr1, lr2 = enumerate_lr((3, 2, 1), (4, 3, 2), (2, 1))
    by_lr = {lr1.gammas: lr_multiplicity(lr1), lr2.gammas: lr_multiplicity(lr2)}
    # the chain through (3,3,2) carries the two refinements q-1 and q^2
    assert by_lr[((2, 1), (3, 2, 1), (3, 3, 2), (4, 3, 2))] == poly({2: 1, 1: 1, 0: -1})
    assert by_lr[((2, 1), (3, 2, 1), (4, 2, 2), (4, 3, 2))] == poly({2: 1})
    picket_lr = LRTableau(((3,), (4,), (5,)))
    assert lr_multiplicity(picket_lr) == QPolynomial.one()


def test_dominant_refinement():
    lr1, lr2 = enumerate_lr((3, 2, 1), (4, 3, 2), (2, 1))
    chains = {lr1.gammas: lr1, lr2.gammas: lr2}
    split = chains[((2, 1), (3, 2, 1), (3, 3, 2), (4, 3, 2))]
    dom = dominant_refinement(split)
    assert hall_multiplicity(dom) == poly({2: 1})
    unique = chains[((2, 1), (3, 2, 1), (4, 2, 2), (4, 3, 2))]
    assert dominant_refinement(unique) == enumerate_klein_refinements(unique)[0]
    (bip,) = enumerate_klein_refinements(LRTableau(((3, 1), (3, 2), (4, 2))))
    assert dominant_refinement(LRTableau(((3, 1), (3, 2), (4, 2)))) == bip


def test_dominant_refinement_no_refinement():
    with pytest.raises(NoRefinement):
        # not a valid LR chain, so no refinements exist
        dominant_refinement(LRTableau(((1,), (2,), (2, 1))))


def test_dominant_degree_matches_lr_degree():
    for beta in partitions_of(6):
        for k in range(7):
            for alpha in partitions_of(k):
                for gamma in partitions_of(6 - k):
                    for lr in enumerate_lr(alpha, beta, gamma):
                        total = lr_multiplicity(lr)
                        dom = hall_multiplicity(dominant_refinement(lr))
                        assert dom.degree == total.degree


def test_expected_degree_examples():
    assert expected_degree((3, 2, 1), (4, 3, 2), (2, 1)) == 2
    assert expected_degree((4, 2), (4, 2), ()) == 0
    assert expected_degree((1,), (1, 1), (1,)) == 1


def test_multiplicities_are_monic_small():
    for beta in partitions_of(6):
        for k in range(7):
            for alpha in partitions_of(k):
                for gamma in partitions_of(6 - k):
                    for tab in enumerate_klein(alpha, beta, gamma):
                        assert hall_multiplicity(tab).is_monic()
