"""
UT_2 classes are intervals
==========================

Read a two-letter word as a staircase path: a is a step East, b a step
North.  Raising the path (more b's before an a) moves the word up a
distributive lattice, and every UT_2 class is an interval of it.  So a class
is pinned down by two words, its bottom and its top, and those can be found
straight from the polygons in linear time, without listing the class.

Run:  python demos/02_class_intervals.py
"""

import math
import time

from tropid import class_interval, class_size, interval_words, parse_word
from tropid.minmax import catalan_max_word, catalan_size_formula
from tropid.stats import largest_class, sample_word

w = parse_word("baabbaabbabaabaaababaaba")
ci = class_interval(w)
print("word  ", w)
print("bottom", ci.min_word)
print("top   ", ci.max_word)
print("size  ", class_size(ci))

# The size comes from counting height vectors between the two bounds; listing
# the interval agrees.
assert class_size(ci) == sum(1 for _ in interval_words(ci))

# A family with large classes: the top word (a b^k)(ab)^r(a^k b).  Its class
# corresponds to Dyck paths of semilength r kept below height k.
print()
print(" r  k  size   closed form")
for r, k in [(3, 2), (4, 4), (5, 4), (6, 3), (8, 8)]:
    size = class_size(class_interval(catalan_max_word(r, k)))
    print(f"{r:2d} {k:2d} {size:5d}   {catalan_size_formula(r, k)}")

# Among balanced words the largest class is one of these, at least as far as
# exhaustive search reaches on a desk.
print()
for la in (5, 6, 7, 8):
    big = largest_class(la, la)
    print(f"largest class in W({la},{la}): {class_size(big):3d} words, top {big.max_word}")

# Finding the two bounds is linear, so long words are no trouble.  Counting
# what lies between them is slower: the counts run to thousands of digits.
print()
for n in (10_000, 40_000):
    u = sample_word((n // 2, n // 2), seed=0, stream=n)
    t0 = time.perf_counter()
    ci = class_interval(u)
    t1 = time.perf_counter()
    size = class_size(ci)
    t2 = time.perf_counter()
    digits = int(size.bit_length() * math.log10(2)) + 1
    print(f"length {n}: bounds in {t1 - t0:.2f}s; about 10^{digits - 1} words, counted in {t2 - t1:.1f}s")
