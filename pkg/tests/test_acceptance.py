"""End-to-end acceptance checks, one test per numbered criterion.

Each test reports a one-line verdict in the "acceptance criteria" section
of the pytest summary.  The full length-21/22 search is marked slow; run it
with ``--runslow`` or ``TROPID_RUNSLOW=1``.  The performance smoke test is
advisory and never fails.
"""

import itertools
import time
import timeit
import warnings

import numpy as np
import pytest

from tropid.enumeration import (
    canonical_pair,
    classes_for_content,
    equivalence_class_n,
    list_classes_2,
    shortest_identity_search,
)
from tropid.identity import check_identity, random_morphism_test
from tropid.minmax import (
    catalan_max_word,
    catalan_size_formula,
    class_interval,
    class_size,
    interval_words,
    max_word,
    min_word,
)
from tropid.signature import check_recursion, degree_signature, support_points
from tropid.stats import exact_isoterm_fraction, isolated_fraction, sample_word
from tropid.words import (
    Word,
    blocks,
    join,
    meet,
    neighbors,
    parse_word,
)

from oracles import dyck_paths_bounded, extreme_points

W = parse_word

LENGTH_TEN_PAIRS = {
    frozenset({x + "ab" + y, x + "ba" + y})
    for x in ("abba", "baab")
    for y in ("abba", "baab")
}

# the ten shortest UT_3 identities, as (prefix, suffix) around the ab/ba swap
UT3_SPLITS = [
    ("abbaabba", "baababbbbaba"),
    ("abbabaabab", "babaababba"),
    ("ababbabaab", "baababbaba"),
    ("abbabaabab", "ababbabaab"),
    ("ababbabaab", "ababbabaab"),
    ("abbaabbaba", "baababbaba"),
    ("abbaabbaba", "babaabbaab"),
    ("ababbabaab", "abbabaabab"),
    ("ababbabaab", "babaababba"),
    ("abbaabbaba", "babaababba"),
]
UT3_PAIRS = [(x + "ab" + y, x + "ba" + y) for x, y in UT3_SPLITS]

EXAMPLE_WORD = "baabbaabbabaabaaababaaba"
EXAMPLE_MIN = "baababababbaaabaababaaba"
EXAMPLE_MAX = "baabbabababaabaabaabaaba"


def all_words(m, length):
    for t in itertools.product(range(m), repeat=length):
        yield Word(t, m)


def two_letter_classes(max_length):
    """Non-singleton ~_2 classes of every two-letter content up to ``max_length``."""
    out = []
    for total in range(2, max_length + 1):
        for la in range(total + 1):
            out.extend(classes_for_content(la, total - la, 2))
    return out


# --- 1 ---------------------------------------------------------------------


@pytest.mark.criterion(1)
def test_length_ten_identities(verdict):
    t0 = time.perf_counter()
    nontrivial = {}
    for total in range(1, 11):
        for la in range(total + 1):
            cls = [ci for ci in list_classes_2(la, total - la) if class_size(ci) > 1]
            if cls:
                nontrivial[(la, total - la)] = cls
    elapsed = time.perf_counter() - t0
    assert set(nontrivial) == {(5, 5)}, f"non-singleton classes at {sorted(nontrivial)}"
    found = {frozenset(map(str, interval_words(ci))) for ci in nontrivial[(5, 5)]}
    verdict["detail"] = f"{len(found)} classes at (5,5), none below length 10, {elapsed:.1f}s"
    assert found == LENGTH_TEN_PAIRS
    assert elapsed < 60


# --- 2 ---------------------------------------------------------------------


@pytest.mark.criterion(2)
def test_shortest_ut3_pairs_hold(verdict):
    t0 = time.perf_counter()
    ok = [check_identity(W(a), W(b), 3) for a, b in UT3_PAIRS]
    verdict["detail"] = f"{sum(ok)}/10 pairs are UT3 identities, {time.perf_counter() - t0:.1f}s"
    assert all(len(a) == 22 for a, _ in UT3_PAIRS)
    assert all(ok)


# --- 3 ---------------------------------------------------------------------


@pytest.mark.slow
@pytest.mark.criterion(3)
def test_full_shortest_search(verdict):
    t0 = time.perf_counter()
    at21 = shortest_identity_search(21, 3)
    t21 = time.perf_counter() - t0
    at22 = shortest_identity_search(22, 3)
    t22 = time.perf_counter() - t0 - t21
    got = {r.pair() for r in at22}
    want = {canonical_pair(W(a), W(b)) for a, b in UT3_PAIRS}
    verdict["detail"] = (
        f"length 21: {len(at21)} identities ({t21:.0f}s); "
        f"length 22: {len(got)} orbits ({t22:.0f}s)"
    )
    assert at21 == []
    assert got == want
    assert t21 + t22 < 2 * 3600


# --- 4 ---------------------------------------------------------------------


@pytest.mark.criterion(4)
def test_minmax_worked_example(verdict):
    w = W(EXAMPLE_WORD)
    ci = class_interval(w)
    assert str(ci.min_word) == EXAMPLE_MIN
    assert str(ci.max_word) == EXAMPLE_MAX
    assert class_size(ci) == 32
    best = float("inf")
    for _ in range(20):
        t0 = time.perf_counter()
        for _ in range(50):
            class_size(class_interval(w))
        best = min(best, (time.perf_counter() - t0) / 50)
    verdict["detail"] = f"min/max/size = 32 match, {best * 1e3:.3f} ms per call"
    assert best < 1e-3


# --- 5 ---------------------------------------------------------------------


@pytest.mark.criterion(5)
def test_signature_matches_brute_force(verdict):
    checked = mismatches = 0
    for m, max_len in ((2, 8), (3, 6)):
        us = {d: list(all_words(m, d)) for d in (1, 2, 3)}
        for length in range(1, max_len + 1):
            for w in all_words(m, length):
                for d in (1, 2, 3):
                    sig = degree_signature(w, d)
                    for u in us[d]:
                        pts = support_points(w, u).points
                        checked += 1
                        if set(sig[u].vertices) != set(extreme_points(pts)):
                            mismatches += 1
    verdict["detail"] = f"{checked} polytopes compared, {mismatches} mismatches"
    assert mismatches == 0


# --- 6 ---------------------------------------------------------------------


@pytest.mark.criterion(6)
def test_classes_are_intervals(verdict):
    rng = np.random.default_rng(2024)
    members_checked = boundary_checked = pairs_checked = 0
    for t in range(200):
        length = int(rng.integers(2, 17))
        w = Word(tuple(int(x) for x in rng.integers(0, 2, size=length)), 2)
        sig = degree_signature(w, 1)
        ci = class_interval(w)
        members = list(interval_words(ci))
        member_set = set(members)
        assert w in member_set
        assert len(members) == class_size(ci)
        for v in members:
            assert degree_signature(v, 1) == sig
        members_checked += len(members)
        for v in members:
            for u in neighbors(v):
                if u not in member_set:
                    boundary_checked += 1
                    assert degree_signature(u, 1) != sig
        for _ in range(5):
            x = members[int(rng.integers(len(members)))]
            y = members[int(rng.integers(len(members)))]
            assert meet(x, y) in member_set and join(x, y) in member_set
            pairs_checked += 1
    verdict["detail"] = (
        f"{members_checked} members, {boundary_checked} boundary neighbours, "
        f"{pairs_checked} meet/join pairs"
    )


# --- 7 ---------------------------------------------------------------------


@pytest.mark.criterion(7)
def test_recursion_exhaustive(verdict):
    us = [u for d in (1, 2) for u in all_words(2, d)]
    checked = 0
    for length in range(1, 9):
        for w in all_words(2, length):
            for u in us:
                for j in range(2):
                    assert check_recursion(w, u, j), (w, u, j)
                    checked += 1
    verdict["detail"] = f"{checked} (w, u, letter) triples"


# --- 8 ---------------------------------------------------------------------


@pytest.mark.criterion(8)
def test_ut3_counterexamples_to_lattice_structure(verdict):
    u, v = "baaaabaaaaaababbbbbabbba", "babbabbaabbabaa"
    w, w2, wj, wm = (W(u + x + v) for x in ("babab", "abbba", "babba", "abbab"))
    assert join(w, w2) == wj and meet(w, w2) == wm
    assert all(check_identity(w, x, 2) for x in (w2, wj, wm))
    assert equivalence_class_n(w2, 3) == [w2]
    assert check_identity(w, wj, 3) and check_identity(w, wm, 3)

    u, v = "abaaaabbbbaaaabbaabba", "abbaaababbabababbbb"
    w, w2, x_baba, x_abab = (W(u + x + v) for x in ("abba", "baab", "baba", "abab"))
    # the order that makes "babba" the join above puts "baba" on top here
    assert join(w, w2) == x_baba and meet(w, w2) == x_abab
    assert all(check_identity(w, x, 2) for x in (w2, x_baba, x_abab))
    assert check_identity(w, w2, 3) and check_identity(w, x_baba, 3)
    assert not check_identity(w, x_abab, 3)
    verdict["detail"] = "first: w' is a UT3 isoterm; second: only the ...abab... word splits off"


# --- 9 ---------------------------------------------------------------------


@pytest.mark.criterion(9)
def test_catalan_family_sizes(verdict):
    for r, k in itertools.product(range(2, 7), repeat=2):
        w = catalan_max_word(r, k)
        ci = class_interval(w)
        assert ci.max_word == w
        sig = degree_signature(w, 1)
        listed = list(interval_words(ci))
        assert all(degree_signature(x, 1) == sig for x in listed)
        size = class_size(ci)
        assert size == len(listed) == catalan_size_formula(r, k) == dyck_paths_bounded(r, k), (r, k)
    verdict["detail"] = "25 (r, k) pairs agree across DP, enumeration, formula"


# --- 10 --------------------------------------------------------------------


@pytest.mark.criterion(10)
def test_identities_survive_random_morphisms(verdict):
    pairs = []
    for cls in two_letter_classes(12):
        pairs.extend((a, b, 2) for a, b in itertools.combinations(cls, 2))
    pairs.extend((a, b, 3) for a, b in UT3_PAIRS)
    bad = [(a, b, n) for k, (a, b, n) in enumerate(pairs) if random_morphism_test(W(a), W(b), n, 1000, seed=k)]
    verdict["detail"] = f"{len(pairs)} identities x 1000 morphisms, {len(bad)} distinguished"
    assert not bad


# --- 11 --------------------------------------------------------------------


def _prefix_before_first(s, z):
    return s[: s.index(z)]


def _suffix_after_last(s, z):
    return s[s.rindex(z) + 1:]


def _same_class(x, y):
    if not x or not y:
        return x == y
    return check_identity(W(x, 2), W(y, 2), 2)


def _first_block(s, z):
    i = s.index(z)
    k = i
    while k < len(s) and s[k] == z:
        k += 1
    return i, k - i


def _last_block(s, z):
    j = s.rindex(z) + 1
    k = j
    while k > 0 and s[k - 1] == z:
        k -= 1
    return k, j - k


def _distinct_prefixes(s):
    """Split points after 1, 2, ... leading blocks of pairwise distinct letters."""
    runs = blocks(W(s, 2))
    seen, cut, out = set(), 0, []
    for letter, length in runs[:-1]:
        if letter in seen:
            break
        seen.add(letter)
        cut += length
        out.append(cut)
    return out


@pytest.mark.criterion(11)
def test_hereditary_and_block_properties(verdict):
    classes = two_letter_classes(12)
    in_class = {s for cls in classes for s in cls}
    pairs = 0
    for cls in classes:
        for x, y in itertools.permutations(cls, 2):
            pairs += 1
            for z in "ab":
                # left and right 1-hereditary
                assert _same_class(_prefix_before_first(x, z), _prefix_before_first(y, z))
                assert _same_class(_suffix_after_last(x, z), _suffix_after_last(y, z))
                # first and last blocks sit at the same place with the same length
                assert _first_block(x, z) == _first_block(y, z)
                assert _last_block(x, z) == _last_block(y, z)
            # a prefix of distinct-letter blocks is shared, and so is the next letter
            for cut in _distinct_prefixes(x):
                assert y[:cut] == x[:cut] and y[cut] == x[cut]
    # words with few blocks never appear in a non-singleton class
    few = 0
    for total in range(1, 13):
        for t in itertools.product("ab", repeat=total):
            s = "".join(t)
            runs = blocks(W(s, 2))
            per_letter = max(sum(1 for b in runs if b[0] == x) for x in (0, 1))
            if per_letter <= 2 or len(runs) <= 5:
                few += 1
                assert s not in in_class, s
    verdict["detail"] = f"{pairs} ordered pairs; {few} few-block words are isoterms"


# --- 12 --------------------------------------------------------------------


@pytest.mark.criterion(12)
def test_desk_scale_statistics(verdict):
    exact = exact_isoterm_fraction(12, 12)
    row = isolated_fraction((12, 12), 2, 4000, seed=12)
    gap = abs(row.estimate - float(exact))
    assert gap <= 3 * row.half_width, (float(exact), row)
    t0 = time.perf_counter()
    big = isolated_fraction((40, 40), 3, 5000, seed=40)
    elapsed = time.perf_counter() - t0
    verdict["detail"] = (
        f"(12,12) exact {float(exact):.4f} vs sampled {row.estimate:.4f} +- {row.half_width:.4f}; "
        f"(40,40) UT3 isolated {big.estimate:.4f} +- {big.half_width:.4f} "
        f"over {big.samples} samples ({elapsed:.0f}s)"
    )
    assert big.samples >= 5000
    assert big.estimate < 0.20


# --- 13 --------------------------------------------------------------------


def _interleaved_best(fns, rounds=7):
    """Best time of each callable, timing them in turn each round.

    Interleaving spreads bursts of machine noise over all sizes alike;
    timeit switches the garbage collector off during each call.
    """
    best = [float("inf")] * len(fns)
    for _ in range(rounds):
        for i, fn in enumerate(fns):
            best[i] = min(best[i], timeit.timeit(fn, number=1))
    return best


@pytest.mark.criterion(13)
def test_linear_scaling_smoke(verdict):
    lengths = (10_000, 20_000, 40_000)
    ws = [sample_word((n // 2, n // 2), seed=13, stream=n) for n in lengths]
    sig_t = _interleaved_best([lambda w=w: degree_signature(w, 1) for w in ws])
    mm_t = _interleaved_best([lambda w=w: (max_word(w), min_word(w)) for w in ws])
    ratios = [b / a for a, b in zip(sig_t, sig_t[1:])] + [b / a for a, b in zip(mm_t, mm_t[1:])]
    ok = all(r <= 2.5 for r in ratios)
    verdict["status"] = "PASS" if ok else "ADVISORY-FAIL"
    verdict["detail"] = (
        "signature " + ", ".join(f"{t * 1e3:.1f}ms" for t in sig_t)
        + "; minmax " + ", ".join(f"{t * 1e3:.1f}ms" for t in mm_t)
        + "; doubling ratios " + ", ".join(f"{r:.2f}" for r in ratios)
    )
    if not ok:
        warnings.warn(f"runtime grew faster than 2.5x per doubling: {verdict['detail']}")
