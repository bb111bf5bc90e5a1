"""JSON and DOT encodings for posets, face descriptors and reports."""

from __future__ import annotations

import json
from typing import Any, Iterator

from .census import (
    CSquareSpec,
    OSquareSpec,
    c_squares,
    c_triangles,
    f_vector2,
    o_squares,
    o_triangles,
)
from .geometry import (
    c_facet_system,
    c_vertex_points,
    enumerate_2faces,
    f_vector_low,
    o_facet_system,
    o_vertex_points,
    vertex_sets,
)
from .poset import Poset, PosetError, elements, poset_from_covers


def poset_to_json(P: Poset) -> dict[str, Any]:
    return {"n": P.n, "covers": [list(c) for c in P.covers()]}


def poset_from_json(obj: Any) -> Poset:
    if not isinstance(obj, dict) or "n" not in obj:
        raise PosetError("poset JSON must be an object with keys 'n' and 'covers'")
    n = obj["n"]
    covers = obj.get("covers", [])
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise PosetError("'n' must be a non-negative integer")
    if not isinstance(covers, list) or not all(
        isinstance(c, list) and len(c) == 2 and all(isinstance(v, int) for v in c) for c in covers
    ):
        raise PosetError("'covers' must be a list of [lower, upper] integer pairs")
    return poset_from_covers(n, covers)


def read_posets(text: str) -> Iterator[Poset]:
    """Posets from a single JSON document or from line-delimited JSON."""
    text = text.strip()
    if not text:
        raise PosetError("no poset given")
    try:
        docs = [json.loads(text)]
    except json.JSONDecodeError:
        try:
            docs = [json.loads(line) for line in text.splitlines() if line.strip()]
        except json.JSONDecodeError as exc:
            raise PosetError(f"malformed JSON: {exc}") from None
    for doc in docs:
        if isinstance(doc, list):
            yield from (poset_from_json(d) for d in doc)
        else:
            yield poset_from_json(doc)


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def o_square_json(s: OSquareSpec) -> dict[str, list[int]]:
    return {"F1": elements(s.F1), "F2": elements(s.F2)}


def c_square_json(s: CSquareSpec) -> dict[str, list[int]]:
    return {"Q": elements(s.Q), "R": elements(s.R), "S": elements(s.S)}


def census_report(P: Poset, polytope: str) -> dict[str, Any]:
    fv = f_vector2(P, polytope)
    if polytope == "O":
        triangles = [[elements(x) for x in t] for t in o_triangles(P)]
        squares = [o_square_json(s) for s in o_squares(P)]
    else:
        triangles = [[elements(x) for x in t] for t in c_triangles(P)]
        squares = [c_square_json(s) for s in c_squares(P)]
    return {
        "poset": poset_to_json(P),
        "polytope": polytope,
        "f0": fv.f0,
        "f1": fv.f1,
        "f2_tri": fv.f2_tri,
        "f2_sq": fv.f2_sq,
        "squares": squares,
        "triangles": triangles,
    }


def oracle_report(P: Poset, polytope: str) -> dict[str, Any]:
    """Oracle counts; triangles and squares are listed as vertex supports."""
    if polytope == "O":
        sys, verts = o_facet_system(P), o_vertex_points(P)
    else:
        sys, verts = c_facet_system(P), c_vertex_points(P)
    fv = f_vector_low(sys, verts)
    faces = enumerate_2faces(sys, verts)
    support = lambda f: sorted(elements(m) for m in vertex_sets(f, verts))  # noqa: E731
    return {
        "poset": poset_to_json(P),
        "polytope": polytope,
        "source": "oracle",
        "f0": fv.f0,
        "f1": fv.f1,
        "f2_tri": fv.f2_tri,
        "f2_sq": fv.f2_sq,
        "squares": sorted(support(f) for f in faces if len(f.vertex_ids) == 4),
        "triangles": sorted(support(f) for f in faces if len(f.vertex_ids) == 3),
    }


def to_dot(P: Poset, name: str = "P") -> str:
    """Hasse diagram: one node per element, one arc per cover, lower -> upper."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    lines += [f"  {x};" for x in range(P.n)]
    lines += [f"  {a} -> {b};" for a, b in P.covers()]
    lines.append("}")
    return "\n".join(lines) + "\n"
