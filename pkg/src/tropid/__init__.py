"""Identities of upper-triangular tropical matrix monoids, decided by Newton polytopes."""

__version__ = "0.1.0"

from .words import (
    Order,
    Word,
    compare,
    content,
    dual,
    join,
    meet,
    neighbors,
    parse_word,
    reverse,
)
from .signature import degree_signature, support_points, utn_signature
from .identity import check_identity, is_isoterm, is_locally_isolated, random_morphism_test
from .minmax import ClassInterval, class_interval, class_size, interval_words, max_word, min_word
from .enumeration import (
    equivalence_class,
    list_classes_2,
    list_classes_general,
    shortest_identity_search,
)

__all__ = [
    "Order",
    "Word",
    "ClassInterval",
    "check_identity",
    "class_interval",
    "class_size",
    "compare",
    "content",
    "degree_signature",
    "dual",
    "equivalence_class",
    "interval_words",
    "is_isoterm",
    "is_locally_isolated",
    "join",
    "list_classes_2",
    "list_classes_general",
    "max_word",
    "meet",
    "min_word",
    "neighbors",
    "parse_word",
    "random_morphism_test",
    "reverse",
    "shortest_identity_search",
    "support_points",
    "utn_signature",
]
