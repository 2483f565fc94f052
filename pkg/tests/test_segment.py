from itertools import permutations

import pytest

from negabeta.perm import Corner, Permutation, hat, parse_permutation
from negabeta.segment import (
    Prefix,
    Segmentation,
    classify,
    enumerate_segmentations,
    is_segmentation,
    is_valid_prefix,
    minimal_segmentation,
    nbar,
    prefix_of,
    raw_nbar,
    valid_prefixes,
    words_p_q,
)


def all_perms(n):
    return [Permutation(v) for v in permutations(range(1, n + 1))]


def P(text):
    return parse_permutation(text)


def Z(text, N):
    return Prefix(tuple(int(c) for c in text), N)


def test_enumerate_1572364():
    cuts = {s.cuts for s in enumerate_segmentations(P("1572364"), 3)}
    assert cuts == {(0, 2, 3, 7), (0, 2, 4, 7)}


def test_enumerate_345261_contains_examples():
    cuts = {s.cuts for s in enumerate_segmentations(P("345261"), 3)}
    assert {(0, 3, 6, 6), (0, 0, 3, 6)} <= cuts


def test_enumerate_too_few_parts():
    assert enumerate_segmentations(P("1572364"), 2) == []


def test_enumerated_cuts_are_segmentations():
    for pi in all_perms(5):
        for N in range(1, 5):
            for seg in enumerate_segmentations(pi, N):
                assert is_segmentation(pi, seg.cuts)
                assert seg.N == N


def blocks_decreasing(pi, cuts):
    entries = hat(pi).entries
    for a, b in zip(cuts, cuts[1:]):
        block = [v for v in entries[a:b] if v is not None]
        if any(x <= y for x, y in zip(block, block[1:])):
            return False
    return True


@pytest.mark.parametrize("n", range(2, 6))
def test_segmentations_satisfy_condition_a(n):
    for pi in all_perms(n):
        for seg in enumerate_segmentations(pi, raw_nbar(pi)):
            assert blocks_decreasing(pi, seg.cuts)


@pytest.mark.parametrize(
    "perm, cuts, expected",
    [
        ("1572364", (0, 2, 3, 7), "022012"),
        ("345261", (0, 3, 6, 6), "01101"),
        ("15237864", (0, 2, 5, 6, 8), "0101332"),
    ],
)
def test_prefix_examples(perm, cuts, expected):
    assert str(prefix_of(P(perm), Segmentation(cuts))) == expected


def test_words_p_q_examples():
    assert words_p_q(P("3651742"), Z("010010", 3)) == ((0, 1, 0, 0, 1, 0), (0, 1, 0))
    assert words_p_q(P("15237864"), Z("0101332", 4))[1] == (1, 3, 3, 2)
    assert words_p_q(P("54321"), Z("0000", 1))[1] is None


def test_validity_examples():
    assert not is_valid_prefix(P("3651742"), Z("010010", 3))
    assert is_valid_prefix(P("3651742"), Z("121021", 3))
    assert is_valid_prefix(P("1572364"), Z("022012", 3))


def test_classify_examples():
    c = classify(P("3651742"))
    assert (c.kind, c.relation) == ("collapsed", "p=q^2")
    c = classify(P("23654718"))
    assert (c.kind, c.corner) == ("cornered", Corner.N1N)
    assert classify(P("345261")).corner is Corner.TWO_N1
    assert classify(P("81735642")).kind == "regular"
    assert classify(P("1")).kind == "regular"


def test_classification_text():
    assert str(classify(P("3651742"))) == "collapsed(p=q^2)"
    assert str(classify(P("23654718"))) == "cornered((n-1)1n)"
    assert str(classify(P("81735642"))) == "regular"


@pytest.mark.parametrize("perm, expected", [("345261", 3), ("41853762", 4), ("23654718", 5), ("1", 2), ("12", 2), ("21", 2)])
def test_nbar_examples(perm, expected):
    assert nbar(P(perm)) == expected


@pytest.mark.parametrize(
    "perm, expected",
    [
        ("3651742", ["121021", "021020", "010020"]),
        ("41853762", ["1032132", "0031032", "0031021"]),
        ("564132", ["22101"]),
    ],
)
def test_valid_prefixes_examples(perm, expected):
    assert [str(z) for z in valid_prefixes(P(perm))] == expected


@pytest.mark.parametrize("n", range(3, 8))
def test_cornered_collapsed_exclusive(n):
    for pi in all_perms(n):
        c = classify(pi)
        if c.kind == "collapsed":
            assert pi[n] not in (1, n)
        if c.kind == "cornered":
            assert pi[n] in (1, n)


@pytest.mark.parametrize("n", range(2, 7))
def test_minimal_segmentation_prefix_unique(n):
    # for regular pi every segmentation at 1 + asc parts is minimal and gives one prefix
    for pi in all_perms(n):
        if classify(pi).kind != "regular":
            continue
        prefixes = {prefix_of(pi, s).letters for s in enumerate_segmentations(pi, raw_nbar(pi))}
        assert prefixes == {prefix_of(pi, minimal_segmentation(pi)).letters}


@pytest.mark.parametrize("n", range(2, 7))
def test_nbar_is_minimal_alphabet_for_segmentations(n):
    for pi in all_perms(n):
        N = raw_nbar(pi)
        assert any(is_valid_prefix(pi, prefix_of(pi, s)) for s in enumerate_segmentations(pi, N))
        if N > 1:
            assert not any(is_valid_prefix(pi, prefix_of(pi, s)) for s in enumerate_segmentations(pi, N - 1))
