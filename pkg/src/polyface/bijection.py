"""Explicit bijection between square faces of O(P) and of C(P)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .census import CSquareSpec, OSquareSpec, c_squares, is_c_square, is_o_square, o_squares
from .poset import Poset, PosetError, down_closure, iter_bits, max_of, min_of, sets_parallel, up_closure


def phi_map(P: Poset, s: OSquareSpec) -> CSquareSpec:
    """{F1, F2} -> ({Q, R}, S).

    Q and R are the extremal elements of F1 \\ F2 and F2 \\ F1; S collects the
    minimal elements of F1 & F2 incomparable to both.
    """
    if not is_o_square(P, s):
        raise PosetError(f"not an O-square spec: {s}")
    F1, F2 = s
    d12, d21 = F1 & ~F2, F2 & ~F1
    Q = min_of(P, d12) | max_of(P, d12)
    R = min_of(P, d21) | max_of(P, d21)
    S = 0
    for p in iter_bits(min_of(P, F1 & F2)):
        if sets_parallel(P, 1 << p, Q | R):
            S |= 1 << p
    Q, R = min(Q, R), max(Q, R)
    return CSquareSpec(Q, R, S)


def psi_map(P: Poset, s: CSquareSpec) -> OSquareSpec:
    """({Q, R}, S) -> {F1, F2} with F1 = up(Q) | up(S) | (up(R) minus down(R)), F2 symmetric."""
    if not is_c_square(P, s):
        raise PosetError(f"not a C-square spec: {s}")
    Q, R, S = s
    upQ, upR, upS = up_closure(P, Q), up_closure(P, R), up_closure(P, S)
    F1 = upQ | upS | (upR & ~down_closure(P, R))
    F2 = upR | upS | (upQ & ~down_closure(P, Q))
    return OSquareSpec(min(F1, F2), max(F1, F2))


@dataclass
class BijectionReport:
    count_O: int
    count_C: int
    roundtrip_failures: int
    pairs: list[tuple[OSquareSpec, CSquareSpec]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.count_O == self.count_C and self.roundtrip_failures == 0


def verify_bijection(P: Poset) -> BijectionReport:
    """Apply both maps to every square spec; failures are counted, not raised."""
    os_, cs = o_squares(P), c_squares(P)
    c_set = set(cs)
    failures = 0
    pairs = []
    for s in os_:
        try:
            t = phi_map(P, s)
            back = psi_map(P, t)
        except PosetError:
            failures += 1
            continue
        if t not in c_set or back != s:
            failures += 1
        pairs.append((s, t))
    o_set = set(os_)
    for t in cs:
        try:
            s = psi_map(P, t)
            back = phi_map(P, s)
        except PosetError:
            failures += 1
            continue
        if s not in o_set or back != t:
            failures += 1
    return BijectionReport(len(os_), len(cs), failures, pairs)
