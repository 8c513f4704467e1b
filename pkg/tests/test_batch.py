from math import comb

import numpy as np
from hypothesis import given, settings, strategies as st

from tropid.batch import (
    degree_one_keys,
    degree_two_fingerprints,
    fingerprint_directions,
    from_words,
    group_rows,
    heights_array,
    to_word,
    words_array,
)
from tropid.signature import degree_signature, support_table
from tropid.words import a_height, b_height, words_with_content


def test_words_array_order_and_size():
    W = words_array(3, 2)
    assert W.shape == (comb(5, 3), 5)
    assert [to_word(r) for r in W] == list(words_with_content((3, 2)))
    assert words_array(0, 3).tolist() == [[1, 1, 1]]
    assert words_array(2, 0).tolist() == [[0, 0]]
    assert (from_words([to_word(r) for r in W]) == W).all()


def test_heights_array():
    W = words_array(3, 3)
    for r, ha, hb in zip(W, heights_array(W, 0), heights_array(W, 1)):
        w = to_word(r)
        assert tuple(ha) == a_height(w) and tuple(hb) == b_height(w)


def test_group_rows():
    keys = np.array([[1, 2], [0, 0], [1, 2], [3, 3], [0, 0], [1, 2]])
    groups = sorted(sorted(g.tolist()) for g in group_rows(keys))
    assert groups == [[0, 2, 5], [1, 4]]
    assert len(group_rows(keys, min_size=1)) == 3
    assert group_rows(np.zeros((0, 2))) == []


def test_directions_are_deterministic():
    assert (fingerprint_directions(16, 3) == fingerprint_directions(16, 3)).all()
    assert not (fingerprint_directions(16, 3) == fingerprint_directions(16, 4)).all()


@given(st.integers(1, 7), st.integers(1, 7))
@settings(max_examples=25)
def test_degree_one_keys_are_exact(la, lb):
    W = words_array(la, lb)
    keys = degree_one_keys(W)
    sigs = [degree_signature(to_word(r), 1) for r in W]
    for i in range(0, len(W), max(1, len(W) // 40)):
        for j in range(len(W)):
            assert (keys[i] == keys[j]).all() == (sigs[i] == sigs[j])


@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 100))
@settings(max_examples=25)
def test_degree_two_fingerprints_match_brute_force(la, lb, seed):
    W = words_array(la, lb)
    D = fingerprint_directions(8, seed)
    fp = degree_two_fingerprints(W, D, chunk=7)
    for row, got in zip(W, fp):
        codes, pts = support_table(to_word(row), 2)
        for c in range(4):
            sel = pts[codes == c]
            want = (sel @ D.T).max(axis=0) if len(sel) else np.full(len(D), np.iinfo(np.int64).min)
            assert (got[c * 8:(c + 1) * 8] == want).all()
