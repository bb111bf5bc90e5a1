"""Test posets: named fixtures, seeded random posets, and all posets up to isomorphism."""

from __future__ import annotations

import os
import random
from itertools import permutations, product

from .poset import Poset, PosetError, enumerate_filters, iter_bits, opposite, poset_from_covers

DEFAULT_MAX_N = 7

NAMED = ("chain", "antichain", "v", "lambda", "x5", "diamond")


def max_n_bound() -> int:
    """Enumeration cap; ``POLYFACE_MAX_N`` overrides the default of 7."""
    value = os.environ.get("POLYFACE_MAX_N")
    return int(value) if value else DEFAULT_MAX_N


def chain(k: int) -> Poset:
    return poset_from_covers(k, [(i, i + 1) for i in range(k - 1)])


def antichain(k: int) -> Poset:
    return poset_from_covers(k, [])


def named_poset(name: str, k: int | None = None) -> Poset:
    name = name.lower()
    if name in ("chain", "antichain"):
        if k is None:
            raise PosetError(f"named poset {name!r} needs a size")
        return chain(k) if name == "chain" else antichain(k)
    if name == "v":
        return poset_from_covers(3, [(0, 1), (0, 2)])
    if name == "lambda":
        return opposite(named_poset("v"))
    if name == "x5":
        return poset_from_covers(5, [(0, 2), (1, 2), (2, 3), (2, 4)])
    if name == "diamond":
        return poset_from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    raise PosetError(f"unknown named poset {name!r}; expected one of {', '.join(NAMED)}")


def random_poset(n: int, density: float, seed: int) -> Poset:
    """Random upper-triangular relation with edge probability ``density``, closed transitively."""
    if not 0.0 <= density <= 1.0:
        raise PosetError("density must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return Poset.from_relation(n, pairs)


def _signature(P: Poset, x: int) -> tuple[int, int]:
    return (P.down[x].bit_count(), -P.up[x].bit_count())


def _encode(P: Poset, order: tuple[int, ...]) -> int:
    # row-major bits of the relation matrix in the given element order
    pos = {x: i for i, x in enumerate(order)}
    code = 0
    n = P.n
    for i, x in enumerate(order):
        row = 0
        for y in iter_bits(P.up[x]):
            row |= 1 << (n - 1 - pos[y])
        code = (code << n) | row
    return code


def _best_order(P: Poset) -> tuple[int, tuple[int, ...]]:
    cells: dict[tuple[int, int], list[int]] = {}
    for x in range(P.n):
        cells.setdefault(_signature(P, x), []).append(x)
    best, best_order = -1, tuple(range(P.n))
    for parts in product(*(permutations(cells[k]) for k in sorted(cells))):
        order = tuple(x for part in parts for x in part)
        code = _encode(P, order)
        if best < 0 or code < best:
            best, best_order = code, order
    return max(best, 0), best_order


def canonical_form(P: Poset) -> bytes:
    """Isomorphism-invariant encoding of ``P``.

    Elements are grouped by (number below, number above) and the relation
    matrix is minimised over all orderings that list the groups in signature
    order.  Isomorphisms preserve signatures, and a shared minimum is a shared
    relation matrix, so equal forms characterise isomorphic posets.
    """
    code, _ = _best_order(P)
    return bytes([P.n]) + code.to_bytes((P.n * P.n + 7) // 8 or 1, "big")


def canonical_poset(P: Poset) -> Poset:
    """The member of P's class whose relation matrix realises ``canonical_form``."""
    _, order = _best_order(P)
    pos = {x: i for i, x in enumerate(order)}
    pairs = [(pos[x], pos[y]) for x in range(P.n) for y in iter_bits(P.up[x])]
    return Poset.from_relation(P.n, pairs)


def _extend_by_maximal(P: Poset, ideal: int) -> Poset:
    # new element n sits strictly above exactly the members of ``ideal``
    pairs = [(x, y) for x in range(P.n) for y in iter_bits(P.up[x])]
    pairs += [(x, P.n) for x in iter_bits(ideal)]
    return Poset.from_relation(P.n + 1, pairs)


_CACHE: dict[int, list[Poset]] = {0: [Poset(0, (), ())]}


def all_posets(n: int) -> list[Poset]:
    """One representative per isomorphism class of n-element posets.

    Every poset is obtained from a smaller one by adding a maximal element
    above some order ideal, so classes are grown level by level and
    deduplicated by canonical form.  The output is sorted by canonical form.
    """
    bound = max_n_bound()
    if n < 0 or n > bound:
        raise PosetError(f"all_posets supports 0 <= n <= {bound}, got {n}")
    if n in _CACHE:
        return list(_CACHE[n])
    smaller = all_posets(n - 1)
    seen: dict[bytes, Poset] = {}
    for P in smaller:
        for ideal in enumerate_filters(opposite(P)):
            Q = _extend_by_maximal(P, ideal)
            key = canonical_form(Q)
            if key not in seen:
                seen[key] = Q
    reps = [canonical_poset(seen[k]) for k in sorted(seen)]
    _CACHE[n] = reps
    return list(reps)
