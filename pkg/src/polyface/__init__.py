"""Two-dimensional faces of order and chain polytopes of finite posets."""

from .census import FVector2, f_vector2
from .generate import all_posets, named_poset, random_poset
from .poset import Poset, PosetError, elements, mask, poset_from_covers

__all__ = [
    "FVector2",
    "Poset",
    "PosetError",
    "all_posets",
    "elements",
    "f_vector2",
    "mask",
    "named_poset",
    "poset_from_covers",
    "random_poset",
]
