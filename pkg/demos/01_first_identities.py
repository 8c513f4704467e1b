"""
First identities of 2x2 upper-triangular tropical matrices
===========================================================

Two words are equivalent in UT_2 when every substitution of tropical
2x2 upper-triangular matrices for their letters gives the same product.
Checking that directly means quantifying over all matrices.  Instead, each
word carries two lattice polygons (the hulls of its a- and b-heights), and
two words are equivalent exactly when the polygons agree.

Run:  python demos/01_first_identities.py
"""

from tropid import check_identity, list_classes_2, parse_word, random_morphism_test
from tropid.minmax import interval_words
from tropid.signature import degree_signature

# Below length ten every two-letter word is alone in its class.
for total in range(2, 10):
    sizes = [sum(1 for _ in interval_words(ci)) for la in range(total + 1) for ci in list_classes_2(la, total - la)]
    assert max(sizes) == 1
print("no UT_2 identities below length 10")

# At length ten the first four appear, all in W(5, 5).
for ci in list_classes_2(5, 5):
    members = [str(w) for w in interval_words(ci)]
    if len(members) > 1:
        print("  ", " ~ ".join(members))

# Each is a single swap of the two middle letters.  The polygons show why
# the swap is invisible: the moved point stays inside both hulls.
w, v = parse_word("abbaababba"), parse_word("abbabaabba")
print()
print(w, "vs", v, "->", check_identity(w, v, 2))
sig = degree_signature(w, 1)
print("  a-polygon vertices:", sig["a"].vertices)
print("  b-polygon vertices:", sig["b"].vertices)

# The polygons decide the question exactly; random matrices only ever
# refute.  A thousand tries find nothing to separate the pair...
print("  random morphisms distinguish?", bool(random_morphism_test(w, v, 2, trials=1000, seed=1)))

# ...but a neighbouring non-identity is caught almost at once.
x, y = parse_word("abbaabba"), parse_word("abbababa")
res = random_morphism_test(x, y, 2, trials=1000, seed=1)
print()
print(x, "vs", y, "->", check_identity(x, y, 2), f"(separated after {res.trials} random tries)")
