"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from itertools import combinations

import pytest

from polyface.bijection import verify_bijection
from polyface.census import (
    alpha,
    alpha_via_recursion,
    c_triangle_params,
    c_triangles,
    check_supermodularity,
    f_vector2,
    map_c_triple,
    map_o_triple,
    normalize_c_triangle,
    o_triangle_params,
    o_triangles,
    phi,
    phi_via_recursion,
    valid_recursion_instances,
)
from polyface.generate import all_posets, antichain, canonical_form, chain, named_poset, random_poset
from polyface.geometry import (
    c_facet_system,
    c_vertex_points,
    check_square_diagonals,
    enumerate_2faces,
    o_facet_system,
    o_vertex_points,
    oracle_f_vector,
    vertex_sets,
)
from polyface.poset import Poset, is_x_free, poset_from_covers

RESULTS: dict[str, tuple[bool, str]] = {}


def _posets(max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        yield from all_posets(n)


def _containment_poset(sets: list[int]) -> Poset:
    rel = [(i, j) for i in range(4) for j in range(4) if i != j and sets[i] & ~sets[j] == 0]
    return Poset.from_relation(4, rel)


DIAMOND = canonical_form(named_poset("diamond"))
C_SHAPES = {
    DIAMOND,
    canonical_form(poset_from_covers(4, [[0, 1], [2, 3]])),
    canonical_form(antichain(4)),
}


# --- criteria -------------------------------------------------------------------


def crit_oracle_equivalence():
    t0 = time.perf_counter()
    count, bad = 0, []
    for P in _posets(5):
        count += 1
        for pt in "OC":
            if tuple(oracle_f_vector(P, pt)) != f_vector2(P, pt).as_tuple():
                bad.append((P, pt))
    dt = time.perf_counter() - t0
    return count == 87 and not bad and dt < 300, f"{count} posets, {len(bad)} mismatches, {dt:.1f}s"


def crit_square_equality():
    t0 = time.perf_counter()
    bad = [P for P in _posets(6) if f_vector2(P, "O").f2_sq != f_vector2(P, "C").f2_sq]
    dt = time.perf_counter() - t0
    return not bad and dt < 600, f"{len(bad)} violations over n <= 6, {dt:.1f}s"


def crit_triangle_inequality():
    bad, strict = [], 0
    for P in _posets(6):
        o, c = f_vector2(P, "O").f2_tri, f_vector2(P, "C").f2_tri
        strict += o < c
        if o > c or (o == c) != is_x_free(P):
            bad.append(P)
    return not bad, f"{len(bad)} violations, {strict} strict cases"


def crit_vertex_edge_equality():
    bad = [P for P in _posets(6) if f_vector2(P, "O").as_tuple()[:2] != f_vector2(P, "C").as_tuple()[:2]]
    return not bad, f"{len(bad)} violations over n <= 6"


def crit_bijection():
    failures = mismatched = 0
    for P in _posets(6):
        rep = verify_bijection(P)
        failures += rep.roundtrip_failures
        mismatched += rep.count_O != rep.count_C
        if P.n <= 5:
            sq = oracle_f_vector(P, "O").f2_sq
            mismatched += not (rep.count_O == rep.count_C == sq)
    return failures == 0 and mismatched == 0, f"{failures} round-trip failures, {mismatched} count mismatches"


def _recursion_instances():
    exhaustive = [(Q, X, Y, e) for Q in _posets(5) for X, Y, e in valid_recursion_instances(Q)]
    rng = random.Random(20240601)
    sampled = []
    while len(sampled) < 200:
        Q = random_poset(rng.randint(3, 7), rng.uniform(0.2, 0.7), rng.randrange(2**32))
        inst = valid_recursion_instances(Q)
        if inst:
            X, Y, e = rng.choice(inst)
            sampled.append((Q, X, Y, e))
    return exhaustive, sampled


_INSTANCES = None


def recursion_instances():
    global _INSTANCES
    if _INSTANCES is None:
        _INSTANCES = _recursion_instances()
    return _INSTANCES


def crit_recursions():
    exhaustive, sampled = recursion_instances()
    bad = 0
    for Q, X, Y, e in exhaustive + sampled:
        bad += alpha_via_recursion(Q, X, Y, e) != alpha(Q, X, Y)
        bad += phi_via_recursion(Q, X, Y, e) != phi(Q, X, Y)
    return bad == 0 and len(sampled) == 200, f"{len(exhaustive)} exhaustive + {len(sampled)} random, {bad} mismatches"


def crit_supermodularity():
    exhaustive, sampled = recursion_instances()
    bad, required, strict = 0, 0, 0
    for Q, X, Y, e in exhaustive + sampled:
        try:
            s = check_supermodularity(Q, X, Y, e)
        except AssertionError:
            bad += 1
            continue
        required += s.strict_required
        strict += s.strict
    return bad == 0, f"{bad} violations, {required} instances requiring strictness, {strict} strict overall"


def crit_triangle_params():
    bad = 0
    for P in _posets(5):
        o_params, c_params = o_triangle_params(P), c_triangle_params(P)
        o_img = [map_o_triple(P, t) for t in o_params]
        c_img = [normalize_c_triangle(P, *map_c_triple(P, t)) for t in c_params]
        bad += len(set(o_img)) != len(o_img) or sorted(o_img) != o_triangles(P)
        bad += len(set(c_img)) != len(c_img) or sorted(c_img) != c_triangles(P)
    return bad == 0, f"{bad} non-bijective cases over n <= 5"


def crit_spot_values():
    checks = {
        "V": f_vector2(named_poset("v"), "O").as_tuple() == f_vector2(named_poset("v"), "C").as_tuple() == (5, 8, 4, 1),
        "antichain4": (f_vector2(antichain(4), "O").f2_sq, f_vector2(antichain(4), "O").f2_tri) == (24, 0),
        "chain4": (f_vector2(chain(4), "O").f2_tri, f_vector2(chain(4), "O").f2_sq) == (10, 0),
    }
    x5 = named_poset("x5")
    fo, fc = f_vector2(x5, "O"), f_vector2(x5, "C")
    checks["x5_strict"] = fo.f2_tri < fc.f2_tri and fo.f2_sq == fc.f2_sq
    checks["x5_frozen"] = (fo.as_tuple(), fc.as_tuple()) == ((8, 24, 32, 2), (8, 24, 33, 2))
    checks["x5_oracle"] = tuple(oracle_f_vector(x5, "O")) == fo.as_tuple() and tuple(oracle_f_vector(x5, "C")) == fc.as_tuple()
    failed = [k for k, ok in checks.items() if not ok]
    return not failed, "all spot values hold" if not failed else f"failed: {failed}"


def crit_structural_invariants():
    faces = squares = bad = 0
    for P in _posets(5):
        for pt, sys_, verts in (
            ("O", o_facet_system(P), o_vertex_points(P)),
            ("C", c_facet_system(P), c_vertex_points(P)),
        ):
            for f in enumerate_2faces(sys_, verts):
                faces += 1
                if len(f.vertex_ids) not in (3, 4):
                    bad += 1
                    continue
                if len(f.vertex_ids) == 3:
                    continue
                squares += 1
                bad += not check_square_diagonals(f, verts)
                shape = canonical_form(_containment_poset(vertex_sets(f, verts)))
                bad += shape != DIAMOND if pt == "O" else shape not in C_SHAPES
    return bad == 0, f"{faces} 2-faces, {squares} squares, {bad} violations"


def crit_enumeration():
    counts = [len(all_posets(n)) for n in range(1, 7)]
    four = all_posets(4)
    distinct = len({canonical_form(P) for P in four}) == 16
    return counts == [1, 2, 5, 16, 63, 318] and distinct, f"counts {counts}"


CRITERIA = [
    ("1 oracle equivalence n<=5", crit_oracle_equivalence),
    ("2 square count equality n<=6", crit_square_equality),
    ("3 triangle inequality and X-free equality n<=6", crit_triangle_inequality),
    ("4 vertex and edge count equality n<=6", crit_vertex_edge_equality),
    ("5 square bijection round trip", crit_bijection),
    ("6 counter recursions", crit_recursions),
    ("7 supermodularity", crit_supermodularity),
    ("8 triangle parametrizations n<=5", crit_triangle_params),
    ("9 spot values", crit_spot_values),
    ("10 structural invariants of oracle 2-faces", crit_structural_invariants),
    ("11 enumeration counts", crit_enumeration),
]


def _line(name: str, ok: bool, detail: str) -> str:
    return f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"


@pytest.mark.parametrize("name,check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    all_ok = True
    for name, check in CRITERIA:
        ok, detail = check()
        all_ok &= ok
        print(_line(name, ok, detail), flush=True)
    sys.exit(0 if all_ok else 1)
