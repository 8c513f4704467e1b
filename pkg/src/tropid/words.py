"""Words over a finite alphabet and their staircase paths.

Letters are stored as 0-based indices; the text form uses ``a``, ``b``, ...
For two-letter words the module also provides the lattice order on
``W(l_a, l_b)`` given by comparing a-heights pointwise.
"""

from __future__ import annotations

import enum
import string
from dataclasses import dataclass
from typing import Iterable, Sequence

ALPHABET = string.ascii_lowercase
MAX_LETTERS = len(ALPHABET)


@dataclass(frozen=True, order=True)
class Word:
    letters: tuple
    m: int

    def __post_init__(self):
        if not 1 <= self.m <= MAX_LETTERS:
            raise ValueError(f"alphabet size must be in 1..{MAX_LETTERS}, got {self.m}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if not 0 <= x < self.m:
                raise ValueError(f"letter index {x} outside alphabet of size {self.m}")
        object.__setattr__(self, "letters", letters)

    def __str__(self):
        return "".join(ALPHABET[x] for x in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r}, m={self.m})"

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k):
        return self.letters[k]

    def __add__(self, other: "Word") -> "Word":
        if self.m != other.m:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.letters + other.letters, self.m)


def parse_word(text: str, m: int | None = None) -> Word:
    """Parse ``text`` over the first ``m`` lowercase letters.

    When ``m`` is omitted the alphabet size is the largest letter index + 1.
    """
    if not text:
        raise ValueError("empty word")
    letters = []
    for ch in text:
        k = ALPHABET.find(ch)
        if k < 0:
            raise ValueError(f"invalid character {ch!r}")
        letters.append(k)
    if m is None:
        m = max(letters) + 1
    bad = [ch for ch, k in zip(text, letters) if k >= m]
    if bad:
        raise ValueError(f"character {bad[0]!r} outside alphabet of size {m}")
    return Word(tuple(letters), m)


def content(w: Word) -> tuple:
    counts = [0] * w.m
    for x in w.letters:
        counts[x] += 1
    return tuple(counts)


def format_content(c: Sequence[int]) -> str:
    return ",".join(str(int(x)) for x in c)


def parse_content(text: str) -> tuple:
    try:
        c = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"malformed content {text!r}") from None
    if not c or any(x < 0 for x in c) or sum(c) == 0:
        raise ValueError(f"content must be non-negative with positive sum: {text!r}")
    return c


def reverse(w: Word) -> Word:
    return Word(w.letters[::-1], w.m)


def apply_letter_permutation(w: Word, sigma: Sequence[int]) -> Word:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(w.m)):
        raise ValueError(f"{sigma} is not a permutation of 0..{w.m - 1}")
    return Word(tuple(sigma[x] for x in w.letters), w.m)


def dual(w: Word) -> Word:
    """Exchange the letters of a two-letter word."""
    if w.m != 2:
        raise ValueError("dual is defined for two-letter alphabets")
    return apply_letter_permutation(w, (1, 0))


def path(w: Word) -> tuple:
    """Lattice points of the staircase walk of ``w``, from the origin to c(w)."""
    p = [0] * w.m
    pts = [tuple(p)]
    for x in w.letters:
        p[x] += 1
        pts.append(tuple(p))
    return tuple(pts)


@dataclass(frozen=True)
class Height:
    """The points of the path immediately preceding each occurrence of ``letter``.

    ``points`` is sorted by the ``letter`` coordinate; it is empty when the
    letter does not occur.
    """

    letter: int
    points: tuple

    def __bool__(self):
        return bool(self.points)

    def __len__(self):
        return len(self.points)


def letter_height(w: Word, i: int) -> Height:
    if not 0 <= i < w.m:
        raise ValueError(f"letter index {i} outside alphabet of size {w.m}")
    p = [0] * w.m
    pts = []
    for x in w.letters:
        if x == i:
            pts.append(tuple(p))
        p[x] += 1
    return Height(i, tuple(pts))


def heights(w: Word) -> tuple:
    return tuple(letter_height(w, i) for i in range(w.m))


# --- two-letter lattice ----------------------------------------------------


def _require_binary(*words: Word):
    for w in words:
        if w.m != 2:
            raise ValueError("operation requires a two-letter alphabet")


def a_height(w: Word) -> tuple:
    """alpha_i = number of b's before the (i+1)-th a."""
    _require_binary(w)
    out = []
    nb = 0
    for x in w.letters:
        if x == 0:
            out.append(nb)
        else:
            nb += 1
    return tuple(out)


def b_height(w: Word) -> tuple:
    """beta_j = number of a's before the (j+1)-th b."""
    _require_binary(w)
    out = []
    na = 0
    for x in w.letters:
        if x == 1:
            out.append(na)
        else:
            na += 1
    return tuple(out)


def word_from_height(alpha: Sequence[int], lb: int) -> Word:
    """The unique word of W(len(alpha), lb) whose a-height is ``alpha``."""
    alpha = [int(x) for x in alpha]
    prev = 0
    for x in alpha:
        if x < prev:
            raise ValueError(f"height {alpha} is not non-decreasing from 0")
        prev = x
    if prev > lb:
        raise ValueError(f"height {alpha} exceeds l_b={lb}")
    letters = []
    prev = 0
    for x in alpha:
        letters.extend([1] * (x - prev))
        letters.append(0)
        prev = x
    letters.extend([1] * (lb - prev))
    if not letters:
        raise ValueError("empty word")
    return Word(tuple(letters), 2)


class Order(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def _paired_heights(w: Word, v: Word):
    _require_binary(w, v)
    if content(w) != content(v):
        raise ValueError(f"words {w} and {v} have different contents")
    return a_height(w), a_height(v)


def compare(w: Word, v: Word) -> Order:
    aw, av = _paired_heights(w, v)
    le = all(x <= y for x, y in zip(aw, av))
    ge = all(x >= y for x, y in zip(aw, av))
    if le and ge:
        return Order.EQUAL
    if le:
        return Order.LESS
    if ge:
        return Order.GREATER
    return Order.INCOMPARABLE


def precedes(w: Word, v: Word) -> bool:
    """w ⪯ v in the lattice W(l_a, l_b)."""
    return compare(w, v) in (Order.LESS, Order.EQUAL)


def meet(w: Word, v: Word) -> Word:
    aw, av = _paired_heights(w, v)
    return word_from_height([min(x, y) for x, y in zip(aw, av)], content(w)[1])


def join(w: Word, v: Word) -> Word:
    aw, av = _paired_heights(w, v)
    return word_from_height([max(x, y) for x, y in zip(aw, av)], content(w)[1])


# --- neighbourhoods and deletions ------------------------------------------


def swap_at(w: Word, k: int) -> Word:
    s = list(w.letters)
    s[k], s[k + 1] = s[k + 1], s[k]
    return Word(tuple(s), w.m)


def neighbors(w: Word) -> list:
    """Words obtained from ``w`` by one swap of distinct adjacent letters."""
    out = []
    seen = set()
    s = w.letters
    for k in range(len(s) - 1):
        if s[k] != s[k + 1]:
            u = swap_at(w, k)
            if u not in seen:
                seen.add(u)
                out.append(u)
    return out


def delete_letters(w: Word, delta: Iterable[int]) -> Word:
    delta = set(delta)
    if not delta.issubset(range(w.m)):
        raise ValueError(f"letters {sorted(delta)} outside alphabet of size {w.m}")
    if len(delta) >= w.m:
        raise ValueError("cannot delete every letter of the alphabet")
    keep = [i for i in range(w.m) if i not in delta]
    index = {x: k for k, x in enumerate(keep)}
    letters = tuple(index[x] for x in w.letters if x in index)
    if not letters:
        raise ValueError(f"deleting {sorted(delta)} from {w} leaves the empty word")
    return Word(letters, len(keep))


def blocks(w: Word) -> list:
    """Maximal runs of ``w`` as (letter, length) pairs."""
    out = []
    for x in w.letters:
        if out and out[-1][0] == x:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return [tuple(b) for b in out]


def words_with_content(c: Sequence[int]):
    """All words of W(c) in lexicographic order."""
    c = list(c)
    m = len(c)
    total = sum(c)
    buf = [0] * total

    def rec(pos):
        if pos == total:
            yield Word(tuple(buf), m)
            return
        for x in range(m):
            if c[x]:
                c[x] -= 1
                buf[pos] = x
                yield from rec(pos + 1)
                c[x] += 1

    if total == 0:
        return
    yield from rec(0)
