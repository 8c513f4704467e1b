"""Listing ~_n classes and searching for identities."""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

import numpy as np

from . import batch
from .minmax import class_interval, class_size, interval_words
from .signature import SupportCloud, degree_signature, signature_key, utn_signature
from .words import Word, content, dual, neighbors, reverse, swap_at, words_with_content

log = logging.getLogger(__name__)


@dataclass
class ClassTable:
    """Canonical signature bytes -> words (or a ClassInterval) sharing it."""

    content: tuple
    n: int
    buckets: dict = field(default_factory=dict)

    def classes(self) -> list:
        return list(self.buckets.values())

    def __len__(self):
        return len(self.buckets)

    def nontrivial(self) -> list:
        return [ws for ws in self.buckets.values() if len(ws) > 1]


def _key(w: Word, n: int) -> bytes:
    if w.m == 2 and n == 2:
        return signature_key(degree_signature(w, 1))
    return signature_key(utn_signature(w, n))


def list_classes_general(c: Sequence[int], n: int) -> ClassTable:
    """Bucket every word of W(c) by its UT_n signature."""
    c = tuple(int(x) for x in c)
    if sum(c) < 1:
        raise ValueError("content must have positive length")
    if n < 2:
        raise ValueError("n must be at least 2")
    table = ClassTable(c, n)
    for w in words_with_content(c):
        table.buckets.setdefault(_key(w, n), []).append(w)
    return table


def equivalence_class_general(w: Word, n: int) -> list:
    return list_classes_general(content(w), n).buckets[_key(w, n)]


def _upward_neighbors(w: Word) -> list:
    # ab -> ba raises the a-height by one at one place
    s = w.letters
    return [swap_at(w, k) for k in range(len(s) - 1) if s[k] == 0 and s[k + 1] == 1]


def list_classes_2(la: int, lb: int) -> list:
    """All ~_2 classes of W(la, lb) as intervals.

    Breadth-first search from a^la b^lb over upward swaps of class minima.
    That alone can miss classes (first at length 14, e.g. the class of
    abbbbbaabbbaab), so when the interval sizes do not add up to the
    binomial count the search continues from upward swaps of every member.
    """
    if la < 0 or lb < 0 or la + lb == 0:
        raise ValueError("need non-negative counts with positive sum")
    start = Word((0,) * la + (1,) * lb, 2)
    found: dict = {}
    covered = 0

    visited: set = set()

    def search(frontier, expand):
        nonlocal covered
        while frontier:
            nxt = []
            for w in frontier:
                if w in visited:
                    continue
                visited.add(w)
                ci = class_interval(w)
                if ci.min_word in found:
                    continue
                found[ci.min_word] = ci
                covered += class_size(ci)
                for v in expand(ci):
                    nxt.extend(_upward_neighbors(v))
            frontier = nxt

    search([start], lambda ci: [ci.min_word])
    if covered < comb(la + lb, la):
        log.debug("minimum-only search covered %d of %d words", covered, comb(la + lb, la))

        def outside(ci):
            members = set(interval_words(ci))
            return [v for v in members if any(u not in members for u in _upward_neighbors(v))]

        seeds = [u for ci in list(found.values()) for v in outside(ci) for u in _upward_neighbors(v)]
        search(seeds, outside)
    return sorted(found.values(), key=lambda ci: ci.min_word.letters)


def _refine(words: list, degrees) -> list:
    """Split ``words`` into classes of equal degree-d supports for each d."""
    classes = [words]
    for d in degrees:
        out = []
        for group in classes:
            if len(group) < 2:
                out.append(group)
                continue
            reps: list = []
            for w in group:
                cloud = SupportCloud(w, d)
                for rep, members in reps:
                    if rep.same_as(cloud):
                        members.append(w)
                        break
                else:
                    reps.append((cloud, [w]))
            out.extend(members for _, members in reps)
        classes = out
    return classes


def equivalence_class_n(w: Word, n: int) -> list:
    """Exact ~_n class: the ~_2 interval filtered by higher-degree supports."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if w.m != 2:
        return equivalence_class_general(w, n)
    members = list(interval_words(class_interval(w)))
    for d in range(2, n):
        if len(members) == 1:
            break
        target = SupportCloud(w, d)
        members = [v for v in members if v == w or target.same_as(SupportCloud(v, d))]
    return members


def equivalence_class(w: Word, n: int) -> list:
    return equivalence_class_n(w, n) if w.m == 2 else equivalence_class_general(w, n)


# --- identity search -----------------------------------------------------------


def _symmetry_images(w: Word) -> list:
    return [w, dual(w), reverse(w), reverse(dual(w))]


def canonical_pair(w: Word, v: Word) -> tuple:
    """Least representative of {w, v} under letter exchange and reversal."""
    best = None
    for g in range(4):
        x, y = _symmetry_images(w)[g], _symmetry_images(v)[g]
        cand = tuple(sorted((str(x), str(y))))
        if best is None or cand < best:
            best = cand
    return best


@dataclass(frozen=True)
class IdentityRecord:
    w: Word
    v: Word
    n: int
    canonical: bool

    def pair(self) -> tuple:
        return tuple(sorted((str(self.w), str(self.v))))

    def to_dict(self) -> dict:
        return {"w": str(self.w), "v": str(self.v), "n": self.n, "canonical": self.canonical}


# direction counts for successive fingerprint passes over degree-2 supports
FINGERPRINT_STAGES = (32, 128, 512)


def classes_for_content(la: int, lb: int, n: int) -> list:
    """Non-singleton ~_n classes of W(la, lb), each as a sorted list of strings.

    Exact degree-1 keys split W(la, lb) into ~_2 classes.  For n >= 3 the
    non-singleton ones are split further by degree-2 fingerprints with more
    directions each pass, and whatever still shares a fingerprint is
    compared exactly.
    """
    W = batch.words_array(la, lb)
    groups = batch.group_rows(batch.degree_one_keys(W))
    if n == 2 or not groups:
        return sorted(sorted(str(batch.to_word(W[i])) for i in g) for g in groups)
    for stage, count in enumerate(FINGERPRINT_STAGES):
        if not groups:
            break
        idx = np.concatenate(groups)
        label = np.concatenate([np.full(len(g), k) for k, g in enumerate(groups)])
        fp = batch.degree_two_fingerprints(W[idx], batch.fingerprint_directions(count, stage))
        sub = batch.group_rows(np.concatenate([label[:, None], fp], axis=1))
        groups = [idx[g] for g in sub]
    out = []
    for g in groups:
        words = [batch.to_word(W[i]) for i in g]
        for cls in _refine(words, range(2, n)):
            if len(cls) > 1:
                out.append(sorted(str(w) for w in cls))
    return sorted(out)


def _content_job(args):
    la, lb, n = args
    return la, classes_for_content(la, lb, n)


def _load_checkpoint(path, length, n) -> dict:
    if not path or not os.path.exists(path):
        return {}
    with open(path) as fh:
        state = json.load(fh)
    if state.get("length") != length or state.get("n") != n:
        raise ValueError(f"checkpoint {path} belongs to a different search")
    return {int(k): v for k, v in state["done"].items()}


def _save_checkpoint(path, length, n, done):
    if not path:
        return
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump({"length": length, "n": n, "done": {str(k): v for k, v in sorted(done.items())}}, fh)
    os.replace(tmp, path)


def shortest_identity_search(
    length: int,
    n: int,
    canonical: bool = True,
    threads: int = 1,
    checkpoint: str | None = None,
    progress: Callable | None = None,
) -> list:
    """All UT_n identities between two-letter words of the given length.

    Contents with l_a <= l_b are searched; the rest follow by letter
    exchange.  With ``canonical`` only one pair per symmetry orbit is kept.
    """
    if length < 1 or n < 2:
        raise ValueError("need length >= 1 and n >= 2")
    done = _load_checkpoint(checkpoint, length, n)
    todo = [(la, length - la, n) for la in range(length // 2 + 1) if la not in done]
    # biggest units first so a pool stays busy
    todo.sort(key=lambda t: -min(t[0], t[1]))

    def record(la, classes):
        done[la] = classes
        _save_checkpoint(checkpoint, length, n, done)
        log.info("content (%d,%d): %d non-singleton classes", la, length - la, len(classes))
        if progress:
            progress(la, length - la, len(classes))

    if threads > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for la, classes in pool.map(_content_job, todo):
                record(la, classes)
    else:
        for job in todo:
            record(*_content_job(job))

    pairs = set()
    for la in sorted(done):
        for cls in done[la]:
            for i in range(len(cls)):
                for j in range(i + 1, len(cls)):
                    pairs.add((cls[i], cls[j]))
                    if 2 * la != length:
                        pairs.add(tuple(sorted((_swap_text(cls[i]), _swap_text(cls[j])))))
    records = []
    seen = set()
    for a, b in sorted(pairs):
        w, v = Word(tuple(0 if ch == "a" else 1 for ch in a), 2), Word(tuple(0 if ch == "a" else 1 for ch in b), 2)
        rep = canonical_pair(w, v)
        is_rep = rep == (a, b)
        if canonical:
            if rep in seen:
                continue
            seen.add(rep)
            w, v = (Word(tuple(0 if ch == "a" else 1 for ch in s), 2) for s in rep)
            is_rep = True
        records.append(IdentityRecord(w, v, n, is_rep))
    return records


def _swap_text(s: str) -> str:
    return s.translate(str.maketrans("ab", "ba"))


def local_identities(w: Word, n: int) -> list:
    """Neighbours of ``w`` forming a UT_n identity with it."""
    from .identity import check_identity

    return [u for u in neighbors(w) if check_identity(w, u, n)]
