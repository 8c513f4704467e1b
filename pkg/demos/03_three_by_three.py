"""
Moving up to 3x3 matrices
=========================

For UT_3 the polygons are joined by degree-two supports: for each two-letter
pattern u, the points recording the letter content before, between and
after an occurrence of u.  Equivalence needs every hull to agree.  This is
much stricter; the shortest UT_3 identities are twenty-two letters long.

Run:  python demos/03_three_by_three.py
"""

from tropid import check_identity, parse_word
from tropid.enumeration import equivalence_class_n
from tropid.stats import isolated_fraction
from tropid.words import join, meet

# One of the ten shortest UT_3 identities: again a single ab/ba swap.
x, y = "abbaabba", "baababbbbaba"
w, v = parse_word(x + "ab" + y), parse_word(x + "ba" + y)
print(w, "~3", v, ":", check_identity(w, v, 3))

# The length-ten pairs hold in UT_2 but not here.
print("abbaababba ~3 abbabaabba :", check_identity(parse_word("abbaababba"), parse_word("abbabaabba"), 3))

# UT_2 classes are closed under meet and join; UT_3 classes need not be.
u, z = "baaaabaaaaaababbbbbabbba", "babbabbaabbabaa"
w, w2 = parse_word(u + "babab" + z), parse_word(u + "abbba" + z)
lo, hi = meet(w, w2), join(w, w2)
print()
print("four UT_2-equivalent words:", all(check_identity(w, t, 2) for t in (w2, lo, hi)))
print("w ~3 meet, w ~3 join      :", check_identity(w, lo, 3), check_identity(w, hi, 3))
print("but w' is alone in UT_3   :", equivalence_class_n(w2, 3) == [w2])

# Long random words usually sit next to a UT_3 identity: a sampled estimate
# of the words with no equivalent neighbour at all.
print()
row = isolated_fraction((30, 30), 3, samples=100, seed=7)
print(f"locally isolated in UT_3, content (30,30): {row.estimate:.2f} +- {row.half_width:.2f} ({row.samples} samples)")
