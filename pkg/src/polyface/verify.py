"""Exhaustive verification sweep over all posets up to a given size."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from .bijection import verify_bijection
from .census import (
    alpha,
    alpha_via_recursion,
    check_supermodularity,
    f_vector2,
    phi,
    phi_via_recursion,
    triangle_count_by_formula,
    valid_recursion_instances,
)
from .generate import all_posets, max_n_bound
from .geometry import (
    c_facet_system,
    c_vertex_points,
    facet_count,
    o_facet_system,
    o_vertex_points,
    oracle_f_vector,
)
from .poset import Poset, PosetError, elements, is_x_free
from .serialize import poset_to_json

log = logging.getLogger(__name__)

CHECKS = (
    "f0_f1_equal",
    "square_equality",
    "triangle_inequality",
    "triangle_formula",
    "bijection_roundtrip",
    "recursions",
    "census_vs_oracle",
    "facet_inequality",
)


@dataclass
class PosetResult:
    poset: Poset
    fO: tuple[int, int, int, int]
    fC: tuple[int, int, int, int]
    x_free: bool
    outcomes: list[tuple[str, bool, str]]


@dataclass
class VerificationReport:
    n_range: tuple[int, int]
    posets_checked: int = 0
    per_n: dict[int, int] = field(default_factory=dict)
    tallies: dict[str, dict[str, int]] = field(
        default_factory=lambda: {c: {"pass": 0, "fail": 0} for c in CHECKS}
    )
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    rows: list[PosetResult] = field(default_factory=list, repr=False)

    @property
    def clean(self) -> bool:
        return not self.counterexamples

    def add(self, result: PosetResult) -> None:
        self.posets_checked += 1
        self.per_n[result.poset.n] = self.per_n.get(result.poset.n, 0) + 1
        self.rows.append(result)
        for name, ok, details in result.outcomes:
            self.tallies[name]["pass" if ok else "fail"] += 1
            if not ok:
                self.counterexamples.append(
                    {"poset": poset_to_json(result.poset), "property": name, "details": details}
                )

    def to_json(self) -> dict[str, Any]:
        return {
            "n_range": list(self.n_range),
            "posets_checked": self.posets_checked,
            "per_n": {str(k): v for k, v in sorted(self.per_n.items())},
            "tallies": self.tallies,
            "counterexamples": self.counterexamples,
            "clean": self.clean,
        }


def _check_recursions(P: Poset) -> tuple[bool, str]:
    for X, Y, e in valid_recursion_instances(P):
        a, p = alpha(P, X, Y), phi(P, X, Y)
        ar, pr = alpha_via_recursion(P, X, Y, e), phi_via_recursion(P, X, Y, e)
        if a != ar or p != pr:
            return False, f"X={elements(X)} Y={elements(Y)} e={e}: alpha {a} vs {ar}, phi {p} vs {pr}"
        try:
            check_supermodularity(P, X, Y, e)
        except AssertionError as exc:
            return False, f"X={elements(X)} Y={elements(Y)} e={e}: {exc}"
    return True, ""


def verify_poset(P: Poset, oracle: bool = True) -> PosetResult:
    fO = f_vector2(P, "O").as_tuple()
    fC = f_vector2(P, "C").as_tuple()
    x_free = is_x_free(P)
    out: list[tuple[str, bool, str]] = []

    out.append(("f0_f1_equal", fO[:2] == fC[:2], f"O={fO[:2]} C={fC[:2]}"))
    out.append(("square_equality", fO[3] == fC[3], f"O={fO[3]} C={fC[3]}"))
    tri_ok = fO[2] <= fC[2] and ((fO[2] == fC[2]) == x_free)
    out.append(("triangle_inequality", tri_ok, f"O={fO[2]} C={fC[2]} x_free={x_free}"))
    formula = (triangle_count_by_formula(P, "O"), triangle_count_by_formula(P, "C"))
    out.append(("triangle_formula", formula == (fO[2], fC[2]), f"formula={formula} census={(fO[2], fC[2])}"))

    rep = verify_bijection(P)
    out.append(
        (
            "bijection_roundtrip",
            rep.ok and rep.count_O == fO[3] and rep.count_C == fC[3],
            f"count_O={rep.count_O} count_C={rep.count_C} failures={rep.roundtrip_failures}",
        )
    )
    ok, details = _check_recursions(P)
    out.append(("recursions", ok, details))

    if oracle:
        gO, gC = tuple(oracle_f_vector(P, "O")), tuple(oracle_f_vector(P, "C"))
        out.append(("census_vs_oracle", gO == fO and gC == fC, f"census O={fO} C={fC}; oracle O={gO} C={gC}"))
        kO = facet_count(o_facet_system(P), o_vertex_points(P))
        kC = facet_count(c_facet_system(P), c_vertex_points(P))
        facet_ok = kO <= kC and ((kO == kC) == x_free) if P.n > 0 else True
        out.append(("facet_inequality", facet_ok, f"facets O={kO} C={kC} x_free={x_free}"))
    return PosetResult(P, fO, fC, x_free, out)


def _job(args: tuple[Poset, bool]) -> PosetResult:
    return verify_poset(*args)


def run_verification(max_n: int = 5, oracle_max_n: int = 5, jobs: int = 1, min_n: int = 1) -> VerificationReport:
    bound = max_n_bound()
    if max_n > bound:
        raise PosetError(f"--max-n {max_n} exceeds the enumeration cap {bound}")
    work = [(P, n <= oracle_max_n) for n in range(min_n, max_n + 1) for P in all_posets(n)]
    report = VerificationReport((min_n, max_n))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_job, work, chunksize=8))
    else:
        results = [_job(w) for w in work]
    # results come back in submission order, so the report is job-count independent
    for r in results:
        report.add(r)
    log.info("checked %d posets, %d counterexamples", report.posets_checked, len(report.counterexamples))
    return report
