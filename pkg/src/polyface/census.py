"""Combinatorial census of vertices, edges and 2-faces of order and chain polytopes.

Faces of the order polytope O(P) are labelled by filters, faces of the chain
polytope C(P) by antichains; all sets are bitmasks (see ``poset``).  Only
proper faces are counted, so an n-element poset contributes no edges when
n <= 1 and no 2-faces when n <= 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, NamedTuple

from .poset import (
    Poset,
    PosetError,
    connected_order_convex_subposets,
    contract,
    delete,
    down_closure,
    elements,
    enumerate_antichains,
    enumerate_filters,
    height,
    induced,
    is_antichain,
    is_connected,
    is_filter,
    is_order_convex,
    iter_bits,
    max_of,
    min_of,
    sets_parallel,
    submasks,
    up_closure,
)

Polytope = Literal["O", "C"]


class OTriangleTriple(NamedTuple):
    Q: int
    W: int
    G: int


class CTriangleTriple(NamedTuple):
    Q: int
    W: int
    B: int


class OSquareSpec(NamedTuple):
    """Unordered filter pair, stored with ``F1 < F2`` as bitmasks."""

    F1: int
    F2: int

    def vertices(self) -> tuple[int, int, int, int]:
        return (self.F1 & self.F2, self.F1, self.F2, self.F1 | self.F2)


def split_two_antichains(P: Poset, Q: int) -> tuple[int, int]:
    """Split a connected set of height <= 2 into (lower, upper) antichains.

    A singleton splits as (empty, Q).
    """
    if height(P, Q) == 2:
        return min_of(P, Q), max_of(P, Q)
    return 0, Q


class CSquareSpec(NamedTuple):
    """``({Q, R}, S)`` with ``Q < R`` as bitmasks."""

    Q: int
    R: int
    S: int

    def parts(self, P: Poset) -> tuple[int, int, int, int]:
        return split_two_antichains(P, self.Q) + split_two_antichains(P, self.R)

    def vertices(self, P: Poset) -> tuple[int, int, int, int]:
        q1, q2, r1, r2 = self.parts(P)
        S = self.S
        return (q1 | r1 | S, q1 | r2 | S, q2 | r1 | S, q2 | r2 | S)


@dataclass(frozen=True)
class FVector2:
    f0: int
    f1: int
    f2_tri: int
    f2_sq: int

    @property
    def f2(self) -> int:
        return self.f2_tri + self.f2_sq

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.f0, self.f1, self.f2_tri, self.f2_sq)


def _check_polytope(polytope: str) -> None:
    if polytope not in ("O", "C"):
        raise PosetError(f"polytope must be 'O' or 'C', got {polytope!r}")


# --- vertices and edges -------------------------------------------------------


def o_edges(P: Poset) -> list[tuple[int, int]]:
    if P.n <= 1:
        return []
    filters = enumerate_filters(P)
    return [
        (F, G)
        for F in filters
        for G in filters
        if F != G and F & ~G == 0 and is_connected(P, G & ~F)
    ]


def c_edges(P: Poset) -> list[tuple[int, int]]:
    if P.n <= 1:
        return []
    antichains = enumerate_antichains(P)
    return [
        (A, B)
        for i, A in enumerate(antichains)
        for B in antichains[i + 1 :]
        if is_connected(P, A ^ B)
    ]


# --- triangles ------------------------------------------------------------------


def o_triangles(P: Poset) -> list[tuple[int, int, int]]:
    """Chains F < G < H of filters whose three differences are connected."""
    if P.n <= 2:
        return []
    edges = o_edges(P)
    above: dict[int, list[int]] = {}
    for F, G in edges:
        above.setdefault(F, []).append(G)
    edge_set = set(edges)
    out = []
    for F, G in edges:
        for H in above.get(G, ()):
            if (F, H) in edge_set:
                out.append((F, G, H))
    return sorted(out)


def _is_c_triangle(P: Poset, A: int, B: int, C: int) -> bool:
    if len({A, B, C}) != 3 or not all(is_antichain(P, X) for X in (A, B, C)):
        return False
    return is_connected(P, A ^ B) and is_connected(P, B ^ C) and is_connected(P, A ^ C)


def normalize_c_triangle(P: Poset, A: int, B: int, C: int) -> tuple[int, int, int]:
    """Order a chain-polytope triangle as (min of union, middle, max of union)."""
    if not _is_c_triangle(P, A, B, C):
        raise PosetError("antichains do not span a triangle of C(P)")
    union = A | B | C
    lo, hi = min_of(P, union), max_of(P, union)
    rest = [X for X in (A, B, C) if X not in (lo, hi)]
    if lo not in (A, B, C) or hi not in (A, B, C) or len(rest) != 1:
        raise PosetError("triangle vertices are not ordered by min/max of their union")
    return lo, rest[0], hi


def c_triangles(P: Poset) -> list[tuple[int, int, int]]:
    if P.n <= 2:
        return []
    nbrs: dict[int, set[int]] = {}
    for A, B in c_edges(P):
        nbrs.setdefault(A, set()).add(B)
        nbrs.setdefault(B, set()).add(A)
    out = set()
    for A, Ns in nbrs.items():
        for B in Ns:
            if B <= A:
                continue
            for C in Ns & nbrs[B]:
                if C > B:
                    out.add(normalize_c_triangle(P, A, B, C))
    return sorted(out)


# --- triangle parametrisations -------------------------------------------------


def _filters_within(P: Poset, Q: int) -> list[int]:
    """Subsets of Q that are upward closed inside Q."""
    return [G for G in submasks(Q) if all(P.up[x] & Q & ~G == 0 for x in iter_bits(G))]


def _antichains_parallel_to(P: Poset, Q: int) -> list[int]:
    # W ranges over antichains of P avoiding everything comparable to Q
    blocked = up_closure(P, Q) | down_closure(P, Q)
    free = P.full & ~blocked
    return [W for W in submasks(free) if is_antichain(P, W)]


def _valid_q(P: Poset, Q: int) -> bool:
    return is_connected(P, Q) and is_order_convex(P, Q) and height(P, Q) >= 2


def _check_o_triple(P: Poset, t: OTriangleTriple) -> None:
    Q, W, G = t
    if not _valid_q(P, Q):
        raise PosetError(f"Q={elements(Q)} is not connected, order-convex of height >= 2")
    if not is_antichain(P, W) or not sets_parallel(P, W, Q):
        raise PosetError(f"W={elements(W)} is not an antichain parallel to Q")
    if G & ~Q or any(P.up[x] & Q & ~G for x in iter_bits(G)):
        raise PosetError(f"G={elements(G)} is not a filter of Q")
    if not (is_connected(P, G) and is_connected(P, Q & ~G)):
        raise PosetError("G or Q \\ G is disconnected")


def o_triangle_params(P: Poset) -> list[OTriangleTriple]:
    if P.n <= 2:
        return []
    out = []
    for Q in connected_order_convex_subposets(P, 2):
        Gs = [G for G in _filters_within(P, Q) if is_connected(P, G) and is_connected(P, Q & ~G)]
        for W in _antichains_parallel_to(P, Q):
            out.extend(OTriangleTriple(Q, W, G) for G in Gs)
    return out


def map_o_triple(P: Poset, t: OTriangleTriple) -> tuple[int, int, int]:
    _check_o_triple(P, t)
    H = up_closure(P, t.Q | t.W)
    F = H & ~t.Q
    return F, F | t.G, H


def _check_c_triple(P: Poset, t: CTriangleTriple) -> None:
    Q, W, B = t
    if not _valid_q(P, Q):
        raise PosetError(f"Q={elements(Q)} is not connected, order-convex of height >= 2")
    if not is_antichain(P, W) or not sets_parallel(P, W, Q):
        raise PosetError(f"W={elements(W)} is not an antichain parallel to Q")
    if B & ~Q or not is_antichain(P, B):
        raise PosetError(f"B={elements(B)} is not an antichain of Q")
    if not (is_connected(P, B ^ min_of(P, Q)) and is_connected(P, B ^ max_of(P, Q))):
        raise PosetError("B is not biconnected in Q")


def c_triangle_params(P: Poset) -> list[CTriangleTriple]:
    if P.n <= 2:
        return []
    out = []
    for Q in connected_order_convex_subposets(P, 2):
        lo, hi = min_of(P, Q), max_of(P, Q)
        Bs = [
            B
            for B in submasks(Q)
            if is_antichain(P, B) and is_connected(P, B ^ lo) and is_connected(P, B ^ hi)
        ]
        for W in _antichains_parallel_to(P, Q):
            out.extend(CTriangleTriple(Q, W, B) for B in Bs)
    return out


def map_c_triple(P: Poset, t: CTriangleTriple) -> tuple[int, int, int]:
    _check_c_triple(P, t)
    return t.W | min_of(P, t.Q), t.W | t.B, t.W | max_of(P, t.Q)


# --- biconnected filter / antichain counters -----------------------------------


def _check_extremal(Q: Poset, X: int, Y: int) -> None:
    if X & ~max_of(Q, Q.full):
        raise PosetError(f"X={elements(X)} is not a set of maximal elements")
    if Y & ~min_of(Q, Q.full):
        raise PosetError(f"Y={elements(Y)} is not a set of minimal elements")


def phi(Q: Poset, X: int, Y: int) -> int:
    """Number of biconnected (X, Y)-filters of Q."""
    _check_extremal(Q, X, Y)
    top, bottom = max_of(Q, Q.full), min_of(Q, Q.full)
    count = 0
    for G in enumerate_filters(Q):
        rest = Q.full & ~G
        if rest & top == X and G & bottom == Y and is_connected(Q, G) and is_connected(Q, rest):
            count += 1
    return count


def alpha(Q: Poset, X: int, Y: int) -> int:
    """Number of biconnected (X, Y)-antichains of Q."""
    _check_extremal(Q, X, Y)
    top, bottom = max_of(Q, Q.full), min_of(Q, Q.full)
    count = 0
    for B in enumerate_antichains(Q):
        if B & top == X and B & bottom == Y and is_connected(Q, B ^ bottom) and is_connected(Q, B ^ top):
            count += 1
    return count


class RecursionParts(NamedTuple):
    """The four posets of the one-element recursion with X, Y transported into each."""

    deleted: tuple[Poset, int, int]
    by_up: tuple[Poset, int, int]
    by_down: tuple[Poset, int, int]
    by_both: tuple[Poset, int, int]


def recursion_parts(Q: Poset, X: int, Y: int, e: int) -> RecursionParts:
    """Build Q - e and its contractions by U = {x > e} and D = {x < e}.

    Requires Q connected, e neither minimal nor maximal, and {e}, X, Y
    pairwise parallel.
    """
    _check_extremal(Q, X, Y)
    if not 0 <= e < Q.n:
        raise PosetError(f"element {e} out of range")
    if not is_connected(Q, Q.full):
        raise PosetError("Q must be connected")
    if not Q.up[e] or not Q.down[e]:
        raise PosetError(f"element {e} is extremal")
    single = 1 << e
    if not (sets_parallel(Q, single, X) and sets_parallel(Q, single, Y) and sets_parallel(Q, X, Y)):
        raise PosetError("{e}, X and Y must be pairwise parallel")
    d = delete(Q, single)
    Qp = d.poset
    U, D, Xp, Yp = d.to_new(Q.up[e]), d.to_new(Q.down[e]), d.to_new(X), d.to_new(Y)

    cu = contract(Qp, U)
    cd = contract(Qp, D)
    cud = contract(cu.quotient, cu.image(D))
    both = lambda S: cud.image(cu.image(S))  # noqa: E731
    return RecursionParts(
        (Qp, Xp, Yp),
        (cu.quotient, cu.image(Xp), cu.image(Yp)),
        (cd.quotient, cd.image(Xp), cd.image(Yp)),
        (cud.quotient, both(Xp), both(Yp)),
    )


def alpha_via_recursion(Q: Poset, X: int, Y: int, e: int) -> int:
    parts = recursion_parts(Q, X, Y, e)
    return alpha(*parts.deleted) + alpha(*parts.by_both)


def phi_via_recursion(Q: Poset, X: int, Y: int, e: int) -> int:
    parts = recursion_parts(Q, X, Y, e)
    return phi(*parts.by_up) + phi(*parts.by_down)


class Supermodularity(NamedTuple):
    lhs: int
    rhs: int
    strict: bool
    strict_required: bool


def check_supermodularity(Q: Poset, X: int, Y: int, e: int) -> Supermodularity:
    """Compare alpha(Q') + alpha(Q'/U/D) against alpha(Q'/U) + alpha(Q'/D).

    Raises ``AssertionError`` if the inequality fails, or if it is not strict
    although min(Q) lies below e, max(Q) above e, and both have size >= 2.
    """
    parts = recursion_parts(Q, X, Y, e)
    lhs = alpha(*parts.deleted) + alpha(*parts.by_both)
    rhs = alpha(*parts.by_up) + alpha(*parts.by_down)
    lo, hi = min_of(Q, Q.full), max_of(Q, Q.full)
    required = (
        lo & ~Q.down[e] == 0 and hi & ~Q.up[e] == 0 and lo.bit_count() >= 2 and hi.bit_count() >= 2
    )
    if lhs < rhs:
        raise AssertionError(f"supermodularity fails: {lhs} < {rhs}")
    if required and lhs == rhs:
        raise AssertionError(f"expected strict inequality, got {lhs} == {rhs}")
    return Supermodularity(lhs, rhs, lhs > rhs, required)


def valid_recursion_instances(Q: Poset) -> list[tuple[int, int, int]]:
    """All (X, Y, e) accepted by ``recursion_parts`` for this Q."""
    if not is_connected(Q, Q.full):
        return []
    top, bottom = max_of(Q, Q.full), min_of(Q, Q.full)
    out = []
    for e in range(Q.n):
        if not Q.up[e] or not Q.down[e]:
            continue
        free = Q.full & ~Q.comp(e)
        for X in submasks(top & free):
            for Y in submasks(bottom & free):
                if sets_parallel(Q, X, Y):
                    out.append((X, Y, e))
    return out


# --- squares --------------------------------------------------------------------


def o_squares(P: Poset) -> list[OSquareSpec]:
    if P.n <= 2:
        return []
    filters = enumerate_filters(P)
    return [
        OSquareSpec(F1, F2)
        for i, F1 in enumerate(filters)
        for F2 in filters[i + 1 :]
        if is_connected(P, F1 & ~F2) and is_connected(P, F2 & ~F1)
    ]


def square_blocks(P: Poset) -> list[int]:
    """Connected subsets of height <= 2, the candidates for Q and R."""
    return [S for S in range(1, 1 << P.n) if is_connected(P, S) and height(P, S) <= 2]


def c_squares(P: Poset) -> list[CSquareSpec]:
    if P.n <= 2:
        return []
    blocks = square_blocks(P)
    out = []
    for i, Q in enumerate(blocks):
        for R in blocks[i + 1 :]:
            if sets_parallel(P, Q, R):
                out.extend(CSquareSpec(Q, R, S) for S in _antichains_parallel_to(P, Q | R))
    return sorted(out)


def is_o_square(P: Poset, s: OSquareSpec) -> bool:
    F1, F2 = s
    return (
        F1 < F2
        and is_filter(P, F1)
        and is_filter(P, F2)
        and is_connected(P, F1 & ~F2)
        and is_connected(P, F2 & ~F1)
    )


def is_c_square(P: Poset, s: CSquareSpec) -> bool:
    Q, R, S = s
    return (
        Q < R
        and is_connected(P, Q)
        and is_connected(P, R)
        and height(P, Q) <= 2
        and height(P, R) <= 2
        and is_antichain(P, S)
        and sets_parallel(P, Q, R)
        and sets_parallel(P, Q, S)
        and sets_parallel(P, R, S)
    )


# --- f-vectors ------------------------------------------------------------------


def f_vector2(P: Poset, polytope: Polytope) -> FVector2:
    _check_polytope(polytope)
    if polytope == "O":
        return FVector2(len(enumerate_filters(P)), len(o_edges(P)), len(o_triangles(P)), len(o_squares(P)))
    return FVector2(len(enumerate_antichains(P)), len(c_edges(P)), len(c_triangles(P)), len(c_squares(P)))


@lru_cache(maxsize=4096)
def _counter_total(Q: Poset, polytope: str) -> int:
    # sum over X ⊆ max(Q), Y ⊆ min(Q) with X || Y; other cells vanish
    count = phi if polytope == "O" else alpha
    top, bottom = max_of(Q, Q.full), min_of(Q, Q.full)
    total = 0
    for X in submasks(top):
        for Y in submasks(bottom):
            if sets_parallel(Q, X, Y):
                total += count(Q, X, Y)
    return total


def triangle_count_by_formula(P: Poset, polytope: Polytope) -> int:
    """Triangle count as a sum over connected order-convex Q of height >= 2.

    Each Q contributes (#antichains W of P parallel to Q) times the sum of
    phi (for O) or alpha (for C) over the extremal subsets of Q.
    """
    _check_polytope(polytope)
    if P.n <= 2:
        return 0
    total = 0
    for Q in connected_order_convex_subposets(P, 2):
        total += len(_antichains_parallel_to(P, Q)) * _counter_total(induced(P, Q).poset, polytope)
    return total
