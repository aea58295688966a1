from __future__ import annotations

import random
from fractions import Fraction

import pytest

from bettisplit.complexes import SimplicialComplex, enumerate_faces
from bettisplit.errors import MalformedInputError
from bettisplit.homology import boundary_rows, chain_complex_ranks, reduced_homology_dims
from bettisplit.linalg import GF, QQ, FieldSpec, matrix_rank, sparse_rank

from oracles import all_faces, boundary_matrix, dense_rank, reduced_homology

RP2 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]


def test_field_spec():
    assert str(FieldSpec.parse("0")) == "QQ"
    assert str(GF(2)) == "GF(2)"
    assert FieldSpec().characteristic == 32003
    with pytest.raises(MalformedInputError):
        FieldSpec(4)
    with pytest.raises(MalformedInputError):
        FieldSpec.parse("q")


def test_matrix_rank_small():
    assert matrix_rank([[1, 2], [2, 4]], QQ) == 1
    assert matrix_rank([[2, 0], [0, 2]], GF(2)) == 0
    assert matrix_rank([[Fraction(1, 2), 1], [1, 2]], QQ) == 1
    assert matrix_rank([], QQ) == 0
    with pytest.raises(MalformedInputError):
        matrix_rank([[Fraction(1, 2)]], GF(3))


def test_matrix_rank_matches_dense_oracle():
    rng = random.Random(7)
    for _ in range(60):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        m = [[rng.choice([0, 0, 1, -1, 2, 3, -5]) for _ in range(c)] for _ in range(r)]
        for p in (0, 2, 3, 32003):
            assert matrix_rank(m, FieldSpec(p)) == dense_rank(m, p)


def test_rp2_top_boundary_rank():
    faces = enumerate_faces(RP2)
    rows = boundary_rows(faces[2], faces[1])
    assert sparse_rank(rows, QQ) == 10
    assert sparse_rank(rows, GF(2)) == 9
    dense = boundary_matrix(faces[2], faces[1])
    assert dense_rank(dense, 0) == 10 and dense_rank(dense, 2) == 9


def test_rp2_homology_signature():
    assert reduced_homology_dims(RP2, QQ) == [0, 0, 0, 0]
    assert reduced_homology_dims(RP2, GF(2)) == [0, 0, 1, 1]


def test_void_and_empty_face():
    assert reduced_homology_dims([], QQ) == []
    assert reduced_homology_dims([()], QQ) == [1]


def test_sphere_and_points():
    boundary_of_triangle = [(1, 2), (2, 3), (1, 3)]
    assert reduced_homology_dims(boundary_of_triangle, QQ) == [0, 0, 1]
    assert reduced_homology_dims([(1,), (2,), (3,)], QQ) == [0, 2]


def _euler(facets):
    counts = chain_complex_ranks(facets, QQ).face_counts
    return sum((-1) ** d * c for d, c in counts.items())


def test_euler_characteristic_and_oracle_agreement():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(2, 6)
        facets = [tuple(sorted(rng.sample(range(1, n + 1), rng.randint(1, n)))) for _ in range(rng.randint(1, 5))]
        D = SimplicialComplex.from_faces(n, facets)
        for p in (0, 2):
            h = reduced_homology_dims(D, FieldSpec(p))
            # reduced Euler characteristic, with the empty face counted in dimension -1
            assert sum((-1) ** (d - 1) * v for d, v in enumerate(h)) == _euler(D.facets)
            expected = reduced_homology(all_faces(D.facets), p)
            assert {d - 1: v for d, v in enumerate(h) if v} == expected


def test_homology_independent_of_facet_order():
    rng = random.Random(4)
    for _ in range(20):
        facets = list(RP2)
        rng.shuffle(facets)
        relabel = list(range(1, 7))
        rng.shuffle(relabel)
        moved = [tuple(relabel[v - 1] for v in f) for f in facets]
        assert reduced_homology_dims(moved, GF(2)) == [0, 0, 1, 1]
        assert reduced_homology_dims(moved, QQ) == [0, 0, 0, 0]
