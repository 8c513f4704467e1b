import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from tropid.words import (
    Order,
    Word,
    a_height,
    apply_letter_permutation,
    blocks,
    compare,
    content,
    delete_letters,
    dual,
    format_content,
    join,
    letter_height,
    meet,
    neighbors,
    parse_content,
    parse_word,
    path,
    precedes,
    reverse,
    word_from_height,
    words_with_content,
)

from oracles import words

W = parse_word


def test_parse_word_basic():
    w = W("acbaacbcb", 3)
    assert len(w) == 9 and w.m == 3
    assert str(w) == "acbaacbcb"
    assert W("a", 2).m == 2
    assert W("abc").m == 3


@pytest.mark.parametrize("text,m", [("abd", 3), ("", 2), ("aB", 2), ("a1", None)])
def test_parse_word_rejects(text, m):
    with pytest.raises(ValueError):
        W(text, m)


def test_content():
    assert content(W("acbaacbcb", 3)) == (3, 3, 3)
    assert content(W("a", 2)) == (1, 0)
    assert content(W("abba")) == (2, 2)
    assert format_content((5, 5)) == "5,5"
    assert parse_content("3,0,1") == (3, 0, 1)
    for bad in ("", "1,-1", "0,0", "a,b"):
        with pytest.raises(ValueError):
            parse_content(bad)


def test_reverse_and_dual():
    assert str(reverse(W("aab"))) == "baa"
    assert reverse(W("abba")) == W("abba")
    w = W("acbaacbcb")
    assert reverse(reverse(w)) == w
    assert str(dual(W("abba"))) == "baab"
    text = "baabbaabbabaabaaababaaba"
    assert str(dual(W(text))) == text.translate(str.maketrans("ab", "ba"))
    assert str(dual(W(text))) == "abbaabbaababbabbbababbab"
    assert apply_letter_permutation(w, (0, 1, 2)) == w
    with pytest.raises(ValueError):
        apply_letter_permutation(w, (0, 0, 1))
    with pytest.raises(ValueError):
        dual(w)


def test_path():
    assert path(W("ab", 2)) == ((0, 0), (1, 0), (1, 1))
    assert path(W("ba", 2)) == ((0, 0), (0, 1), (1, 1))
    assert path(W("acb"))[3] == (1, 1, 1)


def test_letter_height_worked_example():
    # heights follow the prefix-content definition; the b and c lists here are
    # the ones that definition gives for acbaacbcb
    w = W("acbaacbcb", 3)
    assert letter_height(w, 0).points == ((0, 0, 0), (1, 1, 1), (2, 1, 1))
    assert letter_height(w, 1).points == ((1, 0, 1), (3, 1, 2), (3, 2, 3))
    assert letter_height(w, 2).points == ((1, 0, 0), (3, 1, 1), (3, 2, 2))
    assert not letter_height(W("aa", 2), 1)
    with pytest.raises(ValueError):
        letter_height(w, 3)


def test_word_from_height():
    assert str(word_from_height((0, 0, 0), 2)) == "aaabb"
    assert str(word_from_height((0, 2), 2)) == "abba"
    assert str(word_from_height(a_height(W("baab")), 2)) == "baab"
    for bad in ((1, 0), (0, 3)):
        with pytest.raises(ValueError):
            word_from_height(bad, 2)


def test_compare_meet_join():
    assert compare(W("abab"), W("baba")) is Order.LESS
    assert compare(W("baba"), W("abab")) is Order.GREATER
    assert compare(W("abba"), W("baab")) is Order.INCOMPARABLE
    assert compare(W("abba"), W("abba")) is Order.EQUAL
    assert str(meet(W("abba"), W("baab"))) == "abab"
    assert str(join(W("abba"), W("baab"))) == "baba"
    with pytest.raises(ValueError):
        compare(W("ab"), W("aab"))
    with pytest.raises(ValueError):
        compare(W("abc"), W("cba"))


def test_neighbors_and_deletion():
    assert [str(u) for u in neighbors(W("ab"))] == ["ba"]
    assert neighbors(W("aa", 2)) == []
    assert len(neighbors(W("abab"))) == 3
    assert str(delete_letters(W("acbaacbcb"), {2})) == "abaabb"
    w = W("abc")
    assert delete_letters(w, set()) == w
    assert str(delete_letters(w, {0, 1})) == "a"  # "c" reindexed to the first letter
    with pytest.raises(ValueError):
        delete_letters(w, {0, 1, 2})


def test_blocks():
    assert blocks(W("aabbab")) == [(0, 2), (1, 2), (0, 1), (1, 1)]


def test_words_with_content_lexicographic():
    ws = list(words_with_content((3, 2)))
    assert len(ws) == comb(5, 2)
    assert ws == sorted(ws, key=lambda w: w.letters)
    assert len(list(words_with_content((2, 1, 1)))) == 12


# --- properties --------------------------------------------------------------


@given(words(3, 1, 12))
def test_text_round_trip(w):
    assert W(str(w), w.m) == w


@given(words(3, 0, 12))
def test_path_endpoint_and_length(w):
    p = path(w)
    assert p[-1] == content(w) and len(p) == len(w) + 1


@given(words(3, 1, 12))
def test_heights_partition_path(w):
    p = path(w)[:-1]
    hs = [set(letter_height(w, i).points) for i in range(w.m)]
    assert set().union(*hs) == set(p)
    assert sum(map(len, hs)) == len(p)


@given(words(3, 1, 12))
def test_height_is_chain_with_right_size(w):
    c = content(w)
    for i in range(w.m):
        pts = letter_height(w, i).points
        assert len(pts) == c[i]
        assert all(x[i] == k for k, x in enumerate(pts))
        assert all(all(a <= b for a, b in zip(p, q)) for p, q in zip(pts, pts[1:]))


@given(words(3, 1, 12))
def test_height_under_reversal(w):
    c = content(w)
    r = reverse(w)
    for i in range(w.m):
        e = [int(k == i) for k in range(w.m)]
        image = {tuple(-x + cc - ee for x, cc, ee in zip(p, c, e)) for p in letter_height(w, i).points}
        assert image == set(letter_height(r, i).points)


@given(words(3, 1, 10))
def test_neighbor_symmetry(w):
    for u in neighbors(w):
        assert w in neighbors(u)
    assert len(set(neighbors(w))) == len(neighbors(w))


@st.composite
def same_content_triple(draw):
    la = draw(st.integers(0, 6))
    lb = draw(st.integers(0, 6))
    if la + lb == 0:
        la = 1
    base = [0] * la + [1] * lb
    return tuple(Word(tuple(draw(st.permutations(base))), 2) for _ in range(3))


@given(same_content_triple())
def test_lattice_laws(t):
    x, y, z = t
    assert meet(x, x) == x and join(x, x) == x
    assert meet(x, y) == meet(y, x) and join(x, y) == join(y, x)
    assert join(x, meet(x, y)) == x and meet(x, join(x, y)) == x
    assert precedes(meet(x, y), x) and precedes(x, join(x, y))
    # distributivity
    assert meet(x, join(y, z)) == join(meet(x, y), meet(x, z))
    assert join(x, meet(y, z)) == meet(join(x, y), join(x, z))


def test_word_from_height_is_bijection():
    for la, lb in [(3, 3), (4, 2), (0, 3), (2, 0)]:
        alphas = [
            a for a in itertools.product(range(lb + 1), repeat=la) if list(a) == sorted(a)
        ]
        ws = {word_from_height(a, lb) for a in alphas}
        assert ws == set(words_with_content((la, lb)))
        assert all(a_height(word_from_height(a, lb)) == a for a in alphas)
