"""Exact geometric oracle for low-dimensional faces of O(P) and C(P).

The polytopes are given by their facet inequalities ``a . x <= b`` together
with their 0/1 vertices.  The face generated by a set of vertices is the set
of vertices tight on every inequality that is tight on all of them; its
dimension is the rank of the difference vectors, computed with fraction-free
integer elimination.  No floating point is involved.

Completeness of the 2-face enumeration: a 2-face is a polygon, so any three
affinely independent vertices of it generate exactly that face.  Closures
of all vertex triples therefore reach every 2-face; pairs are seeded as well
so that a square is also found from either diagonal.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .poset import Poset, enumerate_antichains, enumerate_filters, iter_bits, max_of, min_of

log = logging.getLogger(__name__)

LatticePoint = tuple[int, ...]


class Inequality(NamedTuple):
    a: tuple[int, ...]
    b: int

    def value(self, x: Sequence[int]) -> int:
        return sum(ai * xi for ai, xi in zip(self.a, x))


@dataclass(frozen=True)
class FacetSystem:
    n: int
    inequalities: tuple[Inequality, ...]

    def __post_init__(self):
        if len(set(self.inequalities)) != len(self.inequalities):
            raise ValueError("duplicate inequality in facet system")
        for ineq in self.inequalities:
            if len(ineq.a) != self.n or not any(ineq.a):
                raise ValueError(f"malformed inequality {ineq}")


@dataclass(frozen=True)
class FaceRecord:
    vertex_ids: frozenset[int]
    dim: int
    tight: frozenset[int]

    @property
    def kind(self) -> str:
        return {3: "triangle", 4: "square"}.get(len(self.vertex_ids), f"{len(self.vertex_ids)}-gon")


class FaceContractError(RuntimeError):
    """A 2-face with more than four vertices: impossible for 0/1 polytopes."""


class FVectorLow(NamedTuple):
    f0: int
    f1: int
    f2_tri: int
    f2_sq: int


# --- exact linear algebra -------------------------------------------------------


def integer_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over the rationals by Bareiss fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            row = m[r]
            prow = m[rank]
            for c in range(col, ncols):
                # exact: Bareiss guarantees divisibility by the previous pivot
                row[c] = (p * row[c] - f * prow[c]) // prev
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def affine_dim(pts: Sequence[Sequence[int]]) -> int:
    if not pts:
        raise ValueError("affine_dim of an empty point set")
    x0 = pts[0]
    return integer_rank([tuple(a - b for a, b in zip(x, x0)) for x in pts[1:]])


# --- the two polytopes ----------------------------------------------------------


def _unit(n: int, i: int, value: int) -> tuple[int, ...]:
    v = [0] * n
    v[i] = value
    return tuple(v)


def o_facet_system(P: Poset) -> FacetSystem:
    n = P.n
    ineqs = [Inequality(_unit(n, p, -1), 0) for p in iter_bits(min_of(P, P.full))]
    ineqs += [Inequality(_unit(n, q, 1), 1) for q in iter_bits(max_of(P, P.full))]
    for p, q in P.covers():
        a = [0] * n
        a[p], a[q] = 1, -1
        ineqs.append(Inequality(tuple(a), 0))
    return FacetSystem(n, tuple(ineqs))


def maximal_chains(P: Poset) -> list[tuple[int, ...]]:
    """Maximal chains as increasing tuples, found by DFS along covers from minimal elements."""
    above: dict[int, list[int]] = {x: [] for x in range(P.n)}
    for p, q in P.covers():
        above[p].append(q)
    out = []

    def walk(path: list[int]) -> None:
        nxt = above[path[-1]]
        if not nxt:
            out.append(tuple(path))
            return
        for q in nxt:
            walk(path + [q])

    for p in iter_bits(min_of(P, P.full)):
        walk([p])
    return out


def c_facet_system(P: Poset) -> FacetSystem:
    n = P.n
    ineqs = [Inequality(_unit(n, p, -1), 0) for p in range(n)]
    for ch in maximal_chains(P):
        a = [0] * n
        for p in ch:
            a[p] = 1
        ineqs.append(Inequality(tuple(a), 1))
    return FacetSystem(n, tuple(ineqs))


def indicator(n: int, S: int) -> LatticePoint:
    return tuple(S >> i & 1 for i in range(n))


def o_vertex_points(P: Poset) -> list[LatticePoint]:
    return [indicator(P.n, F) for F in enumerate_filters(P)]


def c_vertex_points(P: Poset) -> list[LatticePoint]:
    return [indicator(P.n, A) for A in enumerate_antichains(P)]


def all_feasible_01_points(sys: FacetSystem) -> list[LatticePoint]:
    """Every 0/1 point satisfying the system, by exhaustion over the cube."""
    pts = []
    for bits in range(1 << sys.n):
        x = indicator(sys.n, bits)
        if all(ineq.value(x) <= ineq.b for ineq in sys.inequalities):
            pts.append(x)
    return pts


# --- faces ----------------------------------------------------------------------


def _tight_mask(sys: FacetSystem, x: Sequence[int]) -> int:
    m = 0
    for i, ineq in enumerate(sys.inequalities):
        v = ineq.value(x)
        if v > ineq.b:
            raise ValueError(f"point {tuple(x)} violates inequality {i}")
        if v == ineq.b:
            m |= 1 << i
    return m


def tight_set(sys: FacetSystem, pts: Sequence[Sequence[int]]) -> frozenset[int]:
    m = (1 << len(sys.inequalities)) - 1
    for x in pts:
        m &= _tight_mask(sys, x)
    return frozenset(iter_bits(m))


def face_closure(sys: FacetSystem, all_vertices: Sequence[Sequence[int]], seed: Iterable[int]) -> frozenset[int]:
    """Vertex ids of the smallest face containing the seed vertices."""
    seed = list(seed)
    if not seed:
        raise ValueError("face_closure needs a non-empty seed")
    return _Oracle(sys, all_vertices).closure(seed)


class _Oracle:
    """Tight-set bitmasks per vertex, shared by all closure queries on one polytope."""

    def __init__(self, sys: FacetSystem, vertices: Sequence[Sequence[int]]):
        self.sys = sys
        self.vertices = [tuple(v) for v in vertices]
        self.masks = [_tight_mask(sys, v) for v in self.vertices]
        self._dims: dict[frozenset[int], int] = {}

    def closure(self, ids: Iterable[int]) -> frozenset[int]:
        m = (1 << len(self.sys.inequalities)) - 1
        for i in ids:
            m &= self.masks[i]
        return frozenset(j for j, vm in enumerate(self.masks) if vm & m == m)

    def tight_of(self, face: frozenset[int]) -> frozenset[int]:
        m = (1 << len(self.sys.inequalities)) - 1
        for i in face:
            m &= self.masks[i]
        return frozenset(iter_bits(m))

    def dim(self, face: frozenset[int]) -> int:
        if face not in self._dims:
            self._dims[face] = affine_dim([self.vertices[i] for i in sorted(face)])
        return self._dims[face]


def _faces_from_seeds(oracle: _Oracle, seeds: Iterable[tuple[int, ...]], dim: int) -> list[frozenset[int]]:
    everything = frozenset(range(len(oracle.vertices)))
    found: set[frozenset[int]] = set()
    seen: set[frozenset[int]] = set()
    for seed in seeds:
        face = oracle.closure(seed)
        if face in seen:
            continue
        seen.add(face)
        # the polytope itself is not a proper face
        if face != everything and oracle.dim(face) == dim:
            found.add(face)
    return sorted(found, key=lambda f: sorted(f))


def enumerate_edges(sys: FacetSystem, vertices: Sequence[Sequence[int]]) -> list[frozenset[int]]:
    oracle = _Oracle(sys, vertices)
    return _faces_from_seeds(oracle, combinations(range(len(vertices)), 2), 1)


def enumerate_2faces(sys: FacetSystem, vertices: Sequence[Sequence[int]]) -> list[FaceRecord]:
    oracle = _Oracle(sys, vertices)
    k = len(vertices)
    seeds = list(combinations(range(k), 2)) + list(combinations(range(k), 3))
    faces = _faces_from_seeds(oracle, seeds, 2)
    out = []
    for face in faces:
        if len(face) > 4:
            raise FaceContractError(f"2-face with {len(face)} vertices: {sorted(face)}")
        out.append(FaceRecord(face, 2, oracle.tight_of(face)))
    return out


def f_vector_low(sys: FacetSystem, vertices: Sequence[Sequence[int]]) -> FVectorLow:
    faces = enumerate_2faces(sys, vertices)
    tri = sum(1 for f in faces if len(f.vertex_ids) == 3)
    return FVectorLow(len(vertices), len(enumerate_edges(sys, vertices)), tri, len(faces) - tri)


def oracle_f_vector(P: Poset, polytope: str) -> FVectorLow:
    if polytope == "O":
        return f_vector_low(o_facet_system(P), o_vertex_points(P))
    if polytope == "C":
        return f_vector_low(c_facet_system(P), c_vertex_points(P))
    raise ValueError(f"polytope must be 'O' or 'C', got {polytope!r}")


def irredundant_facets(sys: FacetSystem, vertices: Sequence[Sequence[int]]) -> list[bool]:
    """Per inequality: does it cut out a face of dimension n - 1?"""
    oracle = _Oracle(sys, vertices)
    full_dim = affine_dim(oracle.vertices)
    flags = []
    for i in range(len(sys.inequalities)):
        face = frozenset(j for j, m in enumerate(oracle.masks) if m >> i & 1)
        flags.append(bool(face) and oracle.dim(face) == full_dim - 1)
    return flags


def facet_count(sys: FacetSystem, vertices: Sequence[Sequence[int]]) -> int:
    flags = irredundant_facets(sys, vertices)
    if not all(flags):
        bad = [i for i, ok in enumerate(flags) if not ok]
        warnings.warn(f"facet list contains non-facet inequalities {bad}", stacklevel=2)
    return sum(flags)


# --- projections and squares ----------------------------------------------------


def project_to_full_dim(pts: Sequence[Sequence[int]]) -> tuple[list[LatticePoint], tuple[int, ...]]:
    """Drop coordinates greedily while the affine dimension is preserved."""
    if not pts:
        raise ValueError("project_to_full_dim of an empty point set")
    d = affine_dim(pts)
    kept = list(range(len(pts[0])))
    for c in range(len(pts[0])):
        trial = [k for k in kept if k != c]
        if affine_dim([tuple(p[k] for k in trial) for p in pts]) == d:
            kept = trial
    return [tuple(p[k] for k in kept) for p in pts], tuple(kept)


def _cross(o: Sequence[int], a: Sequence[int], b: Sequence[int]) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def square_diagonals(pts4: Sequence[Sequence[int]]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Index pairs of the two diagonals of a planar 0/1 quadrilateral.

    The points are projected to two coordinates; a pair is a diagonal iff the
    other two points lie strictly on opposite sides of the line through it.
    """
    flat, kept = project_to_full_dim(pts4)
    if len(kept) != 2:
        raise ValueError("points do not span a plane")
    for i, j in combinations(range(4), 2):
        k, l = (t for t in range(4) if t not in (i, j))
        if _cross(flat[i], flat[j], flat[k]) * _cross(flat[i], flat[j], flat[l]) < 0:
            return (i, j), (k, l)
    raise ValueError("no diagonal pair found; points are not in convex position")


def check_square_diagonals(face: FaceRecord, vertices: Sequence[Sequence[int]]) -> bool:
    """Verify chi_A + chi_D = chi_B + chi_C for the diagonals and the parity rule.

    Parity: no coordinate is 1 in exactly one or exactly three of the four vertices.
    """
    if len(face.vertex_ids) != 4 or face.dim != 2:
        raise ValueError("check_square_diagonals needs a square 2-face")
    ids = sorted(face.vertex_ids)
    pts = [tuple(vertices[i]) for i in ids]
    (a, d), (b, c) = square_diagonals(pts)
    sums_ok = all(x + y == u + v for x, y, u, v in zip(pts[a], pts[d], pts[b], pts[c]))
    parity_ok = all(sum(p[k] for p in pts) not in (1, 3) for k in range(len(pts[0])))
    if not (sums_ok and parity_ok):
        log.debug("square %s failed: sums=%s parity=%s", ids, sums_ok, parity_ok)
    return sums_ok and parity_ok


def vertex_sets(face: FaceRecord, vertices: Sequence[Sequence[int]]) -> list[int]:
    """Bitmask of the support of each vertex of a face, in vertex-id order."""
    return [sum(1 << k for k, v in enumerate(vertices[i]) if v) for i in sorted(face.vertex_ids)]
