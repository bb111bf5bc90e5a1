"""Finite posets on the ground set ``range(n)``.

Subsets of the ground set are plain ``int`` bitmasks: element ``x`` is a
member of ``S`` iff ``S >> x & 1``.  Every enumeration in the package is
ordered by the integer value of these masks, which keeps output
reproducible.

The strict order is stored transitively closed as two tuples of masks,
``up[x]`` (elements strictly above ``x``) and ``down[x]`` (strictly below).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


class PosetError(ValueError):
    """Raised for invalid relations or arguments outside an operation's domain."""


def mask(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def elements(m: int) -> list[int]:
    """Members of a bitmask in increasing order."""
    out = []
    x = 0
    while m:
        if m & 1:
            out.append(x)
        m >>= 1
        x += 1
    return out


def iter_bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def submasks(m: int) -> Iterator[int]:
    """All submasks of ``m`` in increasing order, including 0 and ``m``."""
    sub = 0
    while True:
        yield sub
        if sub == m:
            return
        sub = (sub - m) & m


@dataclass(frozen=True)
class Poset:
    n: int
    up: tuple[int, ...]
    down: tuple[int, ...]

    def __post_init__(self):
        if len(self.up) != self.n or len(self.down) != self.n:
            raise PosetError("relation tables must have length n")

    @classmethod
    def from_relation(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Build from arbitrary ``(lower, upper)`` pairs, closing transitively."""
        up = [0] * n
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise PosetError(f"element out of range in pair ({a}, {b}) for n={n}")
            if a == b:
                raise PosetError(f"cycle: {a} < {a}")
            up[a] |= 1 << b
        # Warshall on bit rows
        for k in range(n):
            bk = 1 << k
            for i in range(n):
                if up[i] & bk:
                    up[i] |= up[k]
        for i in range(n):
            if up[i] >> i & 1:
                raise PosetError(f"cycle through element {i}")
        down = [0] * n
        for i in range(n):
            for j in iter_bits(up[i]):
                down[j] |= 1 << i
        return cls(n, tuple(up), tuple(down))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def lt(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(bool(self.up[i] >> j & 1) for j in range(self.n)) for i in range(self.n))

    def less(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def comp(self, x: int) -> int:
        """Mask of elements comparable to ``x`` (``x`` included)."""
        return self.up[x] | self.down[x] | (1 << x)

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs ``(lower, upper)`` in lexicographic order."""
        out = []
        for a in range(self.n):
            for b in iter_bits(self.up[a]):
                # b covers a iff nothing strictly between
                if not (self.up[a] & self.down[b]):
                    out.append((a, b))
        return out

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={self.covers()})"


def poset_from_covers(n: int, covers: Iterable[Sequence[int]]) -> Poset:
    if n < 0:
        raise PosetError("n must be non-negative")
    return Poset.from_relation(n, ((int(a), int(b)) for a, b in covers))


def opposite(P: Poset) -> Poset:
    return Poset(P.n, P.down, P.up)


def comparable(P: Poset, x: int, y: int) -> bool:
    return x == y or P.less(x, y) or P.less(y, x)


def sets_parallel(P: Poset, A: int, B: int) -> bool:
    """True iff every element of ``A`` is incomparable to every element of ``B``."""
    for a in iter_bits(A):
        if P.comp(a) & B:
            return False
    return True


def component_of(P: Poset, S: int, x: int) -> int:
    """Connected component of ``x`` in the comparability graph restricted to ``S``."""
    seen = 1 << x
    frontier = seen
    while frontier:
        reach = 0
        for y in iter_bits(frontier):
            reach |= P.comp(y)
        reach &= S & ~seen
        seen |= reach
        frontier = reach
    return seen


def is_connected(P: Poset, S: int) -> bool:
    # the empty set is not connected
    if not S:
        return False
    return component_of(P, S, (S & -S).bit_length() - 1) == S


def components(P: Poset, S: int) -> list[int]:
    out = []
    rest = S
    while rest:
        c = component_of(P, rest, (rest & -rest).bit_length() - 1)
        out.append(c)
        rest &= ~c
    return out


def is_order_convex(P: Poset, S: int) -> bool:
    for x in iter_bits(S):
        for z in iter_bits(P.up[x] & S):
            if P.up[x] & P.down[z] & ~S:
                return False
    return True


def min_of(P: Poset, S: int) -> int:
    return mask(x for x in iter_bits(S) if not P.down[x] & S)


def max_of(P: Poset, S: int) -> int:
    return mask(x for x in iter_bits(S) if not P.up[x] & S)


def up_closure(P: Poset, S: int) -> int:
    out = S
    for x in iter_bits(S):
        out |= P.up[x]
    return out


def down_closure(P: Poset, S: int) -> int:
    out = S
    for x in iter_bits(S):
        out |= P.down[x]
    return out


def is_filter(P: Poset, S: int) -> bool:
    return all(P.up[x] & ~S == 0 for x in iter_bits(S))


def is_ideal(P: Poset, S: int) -> bool:
    return all(P.down[x] & ~S == 0 for x in iter_bits(S))


def is_antichain(P: Poset, S: int) -> bool:
    return all(P.up[x] & S == 0 for x in iter_bits(S))


def enumerate_filters(P: Poset) -> list[int]:
    return [S for S in range(1 << P.n) if is_filter(P, S)]


def enumerate_antichains(P: Poset) -> list[int]:
    return [S for S in range(1 << P.n) if is_antichain(P, S)]


def antichain_to_filter(P: Poset, A: int) -> int:
    if not is_antichain(P, A):
        raise PosetError(f"{elements(A)} is not an antichain")
    return up_closure(P, A)


def filter_to_antichain(P: Poset, F: int) -> int:
    if not is_filter(P, F):
        raise PosetError(f"{elements(F)} is not a filter")
    return min_of(P, F)


def height(P: Poset, S: int | None = None) -> int:
    """Size of a longest chain inside ``S`` (the whole poset by default)."""
    if S is None:
        S = P.full
    best: dict[int, int] = {}
    # longest chain ending at x, processed in an order compatible with <
    for x in sorted(iter_bits(S), key=lambda v: (P.down[v] & S).bit_count()):
        below = [best[y] for y in iter_bits(P.down[x] & S)]
        best[x] = 1 + max(below, default=0)
    return max(best.values(), default=0)


def is_x_free(P: Poset) -> bool:
    """No d1 || d2 < e < u1 || u2 configuration, i.e. no induced copy of X."""
    for e in range(P.n):
        if not is_chain(P, P.down[e]) and not is_chain(P, P.up[e]):
            return False
    return True


def is_chain(P: Poset, S: int) -> bool:
    for x in iter_bits(S):
        if S & ~P.comp(x):
            return False
    return True


def connected_order_convex_subposets(P: Poset, min_height: int = 1) -> list[int]:
    if min_height < 1:
        raise PosetError("min_height must be at least 1")
    return [
        S
        for S in range(1, 1 << P.n)
        if is_connected(P, S) and is_order_convex(P, S) and height(P, S) >= min_height
    ]


class Deletion(NamedTuple):
    """Induced subposet on the survivors; ``kept[i]`` is the original label of ``i``."""

    poset: Poset
    kept: tuple[int, ...]

    def to_new(self, S: int) -> int:
        index = {old: new for new, old in enumerate(self.kept)}
        return mask(index[x] for x in iter_bits(S) if x in index)

    def to_old(self, S: int) -> int:
        return mask(self.kept[x] for x in iter_bits(S))


def induced(P: Poset, S: int) -> Deletion:
    kept = tuple(iter_bits(S))
    index = {old: new for new, old in enumerate(kept)}
    up = tuple(mask(index[y] for y in iter_bits(P.up[x] & S)) for x in kept)
    down = tuple(mask(index[y] for y in iter_bits(P.down[x] & S)) for x in kept)
    return Deletion(Poset(len(kept), up, down), kept)


def delete(P: Poset, S: int) -> Deletion:
    return induced(P, P.full & ~S)


@dataclass(frozen=True)
class Contraction:
    """``P/J``: elements outside ``J`` keep their relative order and ``vJ`` comes last."""

    quotient: Poset
    class_of: tuple[int, ...]
    vJ: int | None

    def image(self, S: int) -> int:
        return mask(self.class_of[x] for x in iter_bits(S))


def contract(P: Poset, J: int) -> Contraction:
    if not J:
        return Contraction(P, tuple(range(P.n)), None)
    if not (is_filter(P, J) or is_ideal(P, J)):
        raise PosetError(f"{elements(J)} is neither a filter nor an ideal")
    outside = [x for x in range(P.n) if not J >> x & 1]
    vJ = len(outside)
    class_of = [vJ] * P.n
    for i, x in enumerate(outside):
        class_of[x] = i
    pairs = []
    for a in range(P.n):
        for b in iter_bits(P.up[a]):
            ca, cb = class_of[a], class_of[b]
            if ca != cb:
                pairs.append((ca, cb))
    return Contraction(Poset.from_relation(vJ + 1, pairs), tuple(class_of), vJ)
