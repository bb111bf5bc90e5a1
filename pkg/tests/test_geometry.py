from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import posets
from polyface.census import f_vector2
from polyface.generate import all_posets, antichain, chain, named_poset
from polyface.geometry import (
    FaceContractError,
    FacetSystem,
    Inequality,
    affine_dim,
    all_feasible_01_points,
    c_facet_system,
    c_vertex_points,
    check_square_diagonals,
    enumerate_2faces,
    enumerate_edges,
    face_closure,
    facet_count,
    integer_rank,
    irredundant_facets,
    maximal_chains,
    o_facet_system,
    o_vertex_points,
    oracle_f_vector,
    project_to_full_dim,
    square_diagonals,
    vertex_sets,
)


def fraction_rank(rows):
    m = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=0, max_size=7)
)


@given(matrices)
def test_integer_rank_matches_rational_elimination(rows):
    assert integer_rank(rows) == fraction_rank(rows)


def test_affine_dim():
    assert affine_dim([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_dim([(0, 0, 0)]) == 0
    with pytest.raises(ValueError):
        affine_dim([])


def test_facet_system_validation():
    with pytest.raises(ValueError):
        FacetSystem(2, (Inequality((1, 0), 1), Inequality((1, 0), 1)))
    with pytest.raises(ValueError):
        FacetSystem(2, (Inequality((0, 0), 1),))
    with pytest.raises(ValueError):
        FacetSystem(2, (Inequality((1,), 1),))


def test_facet_systems_of_v():
    V = named_poset("v")
    assert len(o_facet_system(V).inequalities) == 1 + 2 + 2
    assert maximal_chains(V) == [(0, 1), (0, 2)]
    assert len(c_facet_system(V).inequalities) == 3 + 2


@pytest.mark.parametrize("n", range(0, 7))
def test_vertices_are_exactly_the_01_solutions(n):
    for P in all_posets(n):
        assert set(all_feasible_01_points(o_facet_system(P))) == set(o_vertex_points(P))
        assert set(all_feasible_01_points(c_facet_system(P))) == set(c_vertex_points(P))
        assert len(o_vertex_points(P)) == len(set(o_vertex_points(P)))


@settings(max_examples=40, deadline=None)
@given(posets(min_n=1, max_n=5), st.data())
def test_closure_laws(P, data):
    sys, verts = c_facet_system(P), c_vertex_points(P)
    k = len(verts)
    a = data.draw(st.sets(st.integers(0, k - 1), min_size=1))
    b = data.draw(st.sets(st.integers(0, k - 1))) | a
    ca, cb = face_closure(sys, verts, a), face_closure(sys, verts, b)
    assert a <= ca
    assert ca <= cb
    assert face_closure(sys, verts, ca) == ca


def test_closure_needs_seed():
    with pytest.raises(ValueError):
        face_closure(o_facet_system(chain(2)), o_vertex_points(chain(2)), [])


@pytest.mark.parametrize("n", range(2, 6))
def test_edges_have_dimension_one(n):
    for P in all_posets(n):
        sys, verts = o_facet_system(P), o_vertex_points(P)
        for e in enumerate_edges(sys, verts):
            assert len(e) == 2
            assert affine_dim([verts[i] for i in e]) == 1


def test_whole_polytope_is_not_a_face():
    # the segment and the square have no proper 1-/2-faces of that dimension
    assert oracle_f_vector(chain(1), "O") == (2, 0, 0, 0)
    assert oracle_f_vector(antichain(2), "C") == (4, 4, 0, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_oracle_matches_census(n):
    for P in all_posets(n):
        for pt in "OC":
            assert tuple(oracle_f_vector(P, pt)) == f_vector2(P, pt).as_tuple()


def test_two_faces_have_three_or_four_vertices():
    P = named_poset("x5")
    for sys, verts in ((o_facet_system(P), o_vertex_points(P)), (c_facet_system(P), c_vertex_points(P))):
        for f in enumerate_2faces(sys, verts):
            assert f.kind in ("triangle", "square")


def test_hexagon_violates_face_contract():
    # hexagonal prism; its two ends are hexagons, which no 0/1 polytope has
    rows = [((0, -1, 0), 0), ((0, 1, 0), 2), ((-1, -1, 0), -1), ((1, -1, 0), 2), ((1, 1, 0), 4), ((-1, 1, 0), 1)]
    rows += [((0, 0, -1), 0), ((0, 0, 1), 1)]
    sys = FacetSystem(3, tuple(Inequality(a, b) for a, b in rows))
    hexagon = [(0, 1), (1, 0), (2, 0), (3, 1), (2, 2), (1, 2)]
    verts = [(x, y, z) for z in (0, 1) for x, y in hexagon]
    with pytest.raises(FaceContractError):
        enumerate_2faces(sys, verts)


def test_square_diagonals_and_identity():
    sq = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
    (a, d), (b, c) = square_diagonals(sq)
    assert {a, d} == {0, 3} and {b, c} == {1, 2}
    with pytest.raises(ValueError):
        square_diagonals([(0, 0), (1, 1), (2, 2), (3, 3)])


@pytest.mark.parametrize("n", range(3, 6))
def test_squares_satisfy_diagonal_and_parity_rules(n):
    for P in all_posets(n):
        for sys, verts in ((o_facet_system(P), o_vertex_points(P)), (c_facet_system(P), c_vertex_points(P))):
            for f in enumerate_2faces(sys, verts):
                if f.kind == "square":
                    assert check_square_diagonals(f, verts)
                else:
                    with pytest.raises(ValueError):
                        check_square_diagonals(f, verts)


@given(st.lists(st.lists(st.integers(0, 1), min_size=5, max_size=5), min_size=1, max_size=6, unique_by=tuple))
def test_projection_is_injective_and_full_dimensional(pts):
    pts = [tuple(p) for p in pts]
    flat, kept = project_to_full_dim(pts)
    assert len(kept) == affine_dim(pts)
    assert len(set(flat)) == len(flat)
    assert affine_dim(flat) == affine_dim(pts)


def test_vertex_sets_of_a_face():
    P = antichain(3)
    sys, verts = o_facet_system(P), o_vertex_points(P)
    f = enumerate_2faces(sys, verts)[0]
    assert vertex_sets(f, verts) == sorted(vertex_sets(f, verts))
    assert len(vertex_sets(f, verts)) == 4


def test_facet_counts():
    X5 = named_poset("x5")
    kO = facet_count(o_facet_system(X5), o_vertex_points(X5))
    kC = facet_count(c_facet_system(X5), c_vertex_points(X5))
    assert (kO, kC) == (2 + 2 + 4, 5 + 4)
    P = chain(3)
    assert all(irredundant_facets(o_facet_system(P), o_vertex_points(P)))


def test_redundant_inequality_warns():
    P = chain(2)
    sys = o_facet_system(P)
    extra = FacetSystem(2, sys.inequalities + (Inequality((1, 1), 2),))
    with pytest.warns(UserWarning):
        assert facet_count(extra, o_vertex_points(P)) == len(sys.inequalities)


@pytest.mark.parametrize("n", range(1, 6))
def test_facet_inequality(n):
    from polyface.poset import is_x_free

    for P in all_posets(n):
        kO = facet_count(o_facet_system(P), o_vertex_points(P))
        kC = facet_count(c_facet_system(P), c_vertex_points(P))
        assert kO <= kC
        assert (kO == kC) == is_x_free(P)


def test_oracle_rejects_unknown_polytope():
    with pytest.raises(ValueError):
        oracle_f_vector(chain(2), "Q")


def test_all_pairs_closure_equals_brute_edges():
    P = named_poset("diamond")
    sys, verts = o_facet_system(P), o_vertex_points(P)
    edges = enumerate_edges(sys, verts)
    assert all(frozenset(p) in edges or len(face_closure(sys, verts, p)) > 2 for p in combinations(range(len(verts)), 2))
