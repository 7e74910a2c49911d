import random

import pytest

from hallkit.errors import RangeError
from hallkit.partitions import partitions_of
from hallkit.tableaux import (
    KleinTableau,
    LRTableau,
    direct_sum_tableau,
    enumerate_klein,
    enumerate_klein_entries2,
    enumerate_klein_refinements,
    enumerate_lr,
    restrict,
    tableau_type,
    validate_klein,
    validate_lr,
)

# the worked-example tableau and its two siblings
PI_2 = KleinTableau.make(
    [(2, 1), (3, 2, 1), (3, 3, 2), (4, 3, 2)],
    {(2, 2): [1], (2, 3): [2], (3, 4): [2]},
)
PI_3 = KleinTableau.make(
    [(2, 1), (3, 2, 1), (3, 3, 2), (4, 3, 2)],
    {(2, 2): [1], (2, 3): [2], (3, 4): [3]},
)
PI_1 = KleinTableau.make(
    [(2, 1), (3, 2, 1), (4, 2, 2), (4, 3, 2)],
    {(2, 2): [1], (2, 4): [3], (3, 3): [2]},
)


def test_validate_lr_examples():
    ok, _ = validate_lr([(2, 1), (3, 2, 1), (3, 3, 2), (4, 3, 2)])
    assert ok
    ok, _ = validate_lr([(3, 1), (3, 1)])
    assert ok
    ok, reason = validate_lr([(), (2,)])
    assert not ok and "horizontal" in reason


def test_validate_lr_lattice_violation():
    # second strip larger than the first in a trailing column
    ok, reason = validate_lr([(1,), (2,), (2, 1)])
    assert not ok and "lattice" in reason


def test_tableau_type_examples():
    tab = LRTableau(((2, 1), (3, 2, 1), (3, 3, 2), (4, 3, 2)))
    assert tableau_type(tab) == ((3, 2, 1), (4, 3, 2), (2, 1))
    assert tableau_type(LRTableau(((3, 1),))) == ((), (3, 1), (3, 1))
    assert tableau_type(LRTableau(((3, 1), (3, 2), (4, 2)))) == ((2,), (4, 2), (3, 1))


def test_enumerate_lr_examples():
    assert len(enumerate_lr((3, 2, 1), (4, 3, 2), (2, 1))) == 2
    tabs = enumerate_lr((1,), (2,), (1,))
    assert len(tabs) == 1 and tabs[0].gammas == ((1,), (2,))
    assert enumerate_lr((5,), (4, 3, 2), (2, 1)) == ()


def test_enumerate_lr_outputs_have_requested_type():
    for n in range(7):
        for beta in partitions_of(n):
            for k in range(n + 1):
                for alpha in partitions_of(k):
                    for gamma in partitions_of(n - k):
                        for tab in enumerate_lr(alpha, beta, gamma):
                            ok, reason = validate_lr(tab.gammas)
                            assert ok, reason
                            assert tableau_type(tab) == (alpha, beta, gamma)


def test_klein_refinement_examples():
    lr = LRTableau(((2, 1), (3, 2, 1), (3, 3, 2), (4, 3, 2)))
    refinements = enumerate_klein_refinements(lr)
    assert refinements == (PI_2, PI_3)
    # pickets refine uniquely: all subscripts forced to row - 1
    picket_lr = LRTableau(((3,), (4,), (5,)))
    (only,) = enumerate_klein_refinements(picket_lr)
    assert only.subs_at(2, 5) == (4,)
    # the bipicket tableau has the unique subscript r = 2
    (only,) = enumerate_klein_refinements(LRTableau(((3, 1), (3, 2), (4, 2))))
    assert only.subs_at(2, 4) == (2,)


def test_enumerate_klein_examples():
    assert enumerate_klein((3, 2, 1), (4, 3, 2), (2, 1)) == (PI_2, PI_3, PI_1)
    assert len(enumerate_klein((1,), (1,), ())) == 1
    assert len(enumerate_klein((2, 1), (2, 1), ())) == 1


def test_enumerated_klein_tableaux_are_valid_and_typed():
    for n in range(7):
        for beta in partitions_of(n):
            for k in range(n + 1):
                for alpha in partitions_of(k):
                    for gamma in partitions_of(n - k):
                        for tab in enumerate_klein(alpha, beta, gamma):
                            ok, reason = validate_klein(tab)
                            assert ok, reason
                            assert tableau_type(tab) == (alpha, beta, gamma)


def test_every_lr_tableau_has_a_refinement():
    for n in range(8):
        for beta in partitions_of(n):
            for k in range(n + 1):
                for alpha in partitions_of(k):
                    for gamma in partitions_of(n - k):
                        for lr in enumerate_lr(alpha, beta, gamma):
                            assert enumerate_klein_refinements(lr)


def test_restrict_worked_example():
    # one symbol 2_2 in row 4 after dropping to the top two strips
    expected = KleinTableau.make(
        [(3, 2, 1), (3, 3, 2), (4, 3, 2)], {(2, 4): [2]}
    )
    assert restrict(PI_2, 3, 2) == expected
    assert restrict(PI_2, 3, 3) == PI_2  # identity at full depth
    assert restrict(PI_2, 4, 1) == KleinTableau.make([(4, 3, 2), (4, 3, 2)])


def test_restrict_range_errors():
    with pytest.raises(RangeError):
        restrict(PI_2, 5, 1)
    with pytest.raises(RangeError):
        restrict(PI_2, 2, 3)


def test_restrictions_of_valid_tableaux_are_valid():
    for tab in enumerate_klein((3, 2, 1), (4, 3, 2), (2, 1)):
        for ell in range(2, tab.e + 1):
            ok, reason = validate_klein(restrict(tab, ell, 2))
            assert ok, reason


def test_valid_iff_all_two_restrictions_valid():
    # randomized converse: arbitrary subscript assignments on a valid chain
    rng = random.Random(7)
    lr = LRTableau(((2, 1), (3, 2, 1), (3, 3, 2), (4, 3, 2)))
    cells = [(2, 2, 1), (2, 3, 1), (3, 4, 1)]  # (entry, row, box count)
    for _ in range(200):
        subs = {
            (ell, m): [rng.randrange(1, m) for _ in range(cnt)]
            for ell, m, cnt in cells
        }
        tab = KleinTableau.make(lr.gammas, subs)
        whole, _ = validate_klein(tab)
        parts = all(
            validate_klein(restrict(tab, ell, 2))[0] for ell in range(2, tab.e + 1)
        )
        assert whole == parts


def test_direct_sum_examples():
    from hallkit.s2cat import Bipicket, Picket, S2Object, tableau_of_object

    t42 = tableau_of_object(S2Object.of(Bipicket(4, 2)))
    p13 = tableau_of_object(S2Object.of(Picket(1, 3)))
    total = direct_sum_tableau(t42, p13)
    assert total == KleinTableau.make(
        [(3, 2, 1), (3, 3, 2), (4, 3, 2)], {(2, 4): [2]}
    )
    empty = KleinTableau.make([()])
    assert direct_sum_tableau(total, empty) == total
    primed = direct_sum_tableau(
        direct_sum_tableau(
            tableau_of_object(S2Object.of(Picket(2, 4))),
            tableau_of_object(S2Object.of(Picket(0, 3))),
        ),
        tableau_of_object(S2Object.of(Picket(1, 2))),
    )
    assert primed == KleinTableau.make(
        [(3, 2, 1), (3, 3, 2), (4, 3, 2)], {(2, 4): [3]}
    )


def test_direct_sum_commutative_associative():
    tabs = enumerate_klein_entries2((3, 2))
    for a in tabs:
        for b in tabs:
            assert direct_sum_tableau(a, b) == direct_sum_tableau(b, a)
    a, b, c = tabs[0], tabs[len(tabs) // 2], tabs[-1]
    assert direct_sum_tableau(direct_sum_tableau(a, b), c) == direct_sum_tableau(
        a, direct_sum_tableau(b, c)
    )


def test_entries2_enumerator_matches_type_enumerator():
    for n in range(7):
        for beta in partitions_of(n):
            direct = set(enumerate_klein_entries2(beta))
            by_type = set()
            for k in range(n + 1):
                for alpha in partitions_of(k, max_part=2):
                    for gamma in partitions_of(n - k):
                        by_type.update(enumerate_klein(alpha, beta, gamma))
            assert direct == by_type


def test_klein_count_at_least_lr_count():
    for n in range(7):
        for beta in partitions_of(n):
            for k in range(n + 1):
                for alpha in partitions_of(k):
                    for gamma in partitions_of(n - k):
                        nlr = len(enumerate_lr(alpha, beta, gamma))
                        nk = len(enumerate_klein(alpha, beta, gamma))
                        assert nk >= nlr


def test_text_and_json_roundtrip():
    for tab in (PI_1, PI_2, PI_3, KleinTableau.make([()]), KleinTableau.make([(3, 1)])):
        assert KleinTableau.from_text(tab.to_text()) == tab
        assert KleinTableau.from_json(tab.to_json()) == tab


def test_json_shape():
    assert PI_2.to_json() == {
        "gammas": [[2, 1], [3, 2, 1], [3, 3, 2], [4, 3, 2]],
        "subscripts": [
            {"entry": 2, "row": 2, "subs": [1]},
            {"entry": 2, "row": 3, "subs": [2]},
            {"entry": 3, "row": 4, "subs": [2]},
        ],
    }


def test_enumeration_is_deterministic():
    first = enumerate_klein((3, 2, 1), (4, 3, 2), (2, 1))
    second = enumerate_klein((3, 2, 1), (4, 3, 2), (2, 1))
    assert first == second
    keys = [(t.gammas, t.subscripts) for t in first]
    assert keys == sorted(keys)
