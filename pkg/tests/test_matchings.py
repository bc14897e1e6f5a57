import itertools

import pytest

from ssv import InputError, Matching, enumerate_matchings, odd_double_factorial


def brute_signature(seq):
    """Independent sign oracle: parity of the number of out-of-order pairs,
    computed over itertools combinations rather than index loops."""
    inv = sum(1 for a, b in itertools.combinations(seq, 2) if a > b)
    return -1 if inv % 2 else 1


def test_single_pair():
    assert enumerate_matchings([1, 2]) == [Matching(((1, 2),), 1)]


def test_four_points_with_signs():
    got = enumerate_matchings([1, 2, 3, 4])
    assert got == [
        Matching(((1, 2), (3, 4)), 1),
        Matching(((1, 3), (2, 4)), -1),
        Matching(((1, 4), (2, 3)), 1),
    ]


def test_eight_points_count():
    assert len(enumerate_matchings(range(1, 9))) == 105


@pytest.mark.parametrize("m,count", [(1, 1), (2, 3), (3, 15), (4, 105), (5, 945), (6, 10395)])
def test_counts_are_double_factorials(m, count):
    assert odd_double_factorial(m) == count
    assert len(enumerate_matchings(range(1, 2 * m + 1))) == count


def test_every_sign_matches_brute_force():
    for m in range(1, 6):
        for mt in enumerate_matchings(range(1, 2 * m + 1)):
            assert mt.sign == brute_signature(mt.flatten())


def test_normalization_invariants():
    for mt in enumerate_matchings(range(1, 9)):
        assert all(a < b for a, b in mt.pairs)
        firsts = [a for a, _ in mt.pairs]
        assert firsts == sorted(firsts)
        assert sorted(mt.flatten()) == list(range(1, 9))


def test_arbitrary_ground_set():
    got = enumerate_matchings([2, 5, 7, 11])
    assert [mt.pairs for mt in got] == [
        ((2, 5), (7, 11)),
        ((2, 7), (5, 11)),
        ((2, 11), (5, 7)),
    ]
    assert [mt.sign for mt in got] == [1, -1, 1]


def test_lexicographic_order():
    pair_lists = [mt.pairs for mt in enumerate_matchings(range(1, 7))]
    assert pair_lists == sorted(pair_lists)


@pytest.mark.parametrize("bad", [[], [1], [1, 2, 3], [1, 1]])
def test_invalid_ground_sets(bad):
    with pytest.raises(InputError):
        enumerate_matchings(bad)
