from __future__ import annotations

import random

import pytest

from bettisplit.complexes import SimplicialComplex
from bettisplit.errors import DegenerateComplexError, PreconditionError
from bettisplit.linalg import GF, QQ
from bettisplit.monomials import ideal_sum
from bettisplit.simplicial import (
    alexander_dual_ideal,
    complex_from_dual_ideal,
    deletion,
    find_shelling,
    is_sequentially_cm,
    is_shedding_vertex,
    is_vertex_decomposable,
    link,
    shedding_identity,
    shedding_vertices,
    union_splitting_check,
    verify_shelling,
)
from bettisplit.splitting import admits_xi_splitting


def random_complex(rng, n):
    facets = [rng.sample(range(1, n + 1), rng.randint(1, n - 1)) for _ in range(rng.randint(1, 5))]
    return SimplicialComplex.from_faces(n, facets)


def test_dual_of_a_path():
    D = SimplicialComplex(3, ((1, 2), (2, 3)))
    assert alexander_dual_ideal(D).gens == ((1, 0, 0), (0, 0, 1))


def test_dual_degenerate_cases():
    with pytest.raises(DegenerateComplexError):
        alexander_dual_ideal(SimplicialComplex(2, ()))
    with pytest.raises(DegenerateComplexError):
        alexander_dual_ideal(SimplicialComplex.simplex([1, 2]))


def test_dual_round_trip():
    rng = random.Random(5)
    for _ in range(30):
        D = random_complex(rng, rng.randint(2, 7))
        assert complex_from_dual_ideal(alexander_dual_ideal(D)) == D


def test_link_and_deletion():
    D = SimplicialComplex(4, ((1, 2, 3), (3, 4)))
    assert link(D, 3).facets == ((1, 2), (4,))
    assert deletion(D, 3).facets == ((1, 2), (4,))
    assert not is_shedding_vertex(D, 3)
    assert is_shedding_vertex(D, 4)
    with pytest.raises(PreconditionError):
        link(D, 9)


def test_shedding_identity_recovers_dual():
    rng = random.Random(9)
    for _ in range(40):
        D = random_complex(rng, rng.randint(3, 7))
        for v in D.vertices:
            try:
                J, K = shedding_identity(D, v)
            except DegenerateComplexError:
                continue
            assert ideal_sum(J, K) == alexander_dual_ideal(D)


def test_vertex_decomposable_path_and_union_example(load_complex):
    ok, order = is_vertex_decomposable(SimplicialComplex(4, ((1, 2), (2, 3), (3, 4))))
    assert ok and order
    ok, _ = is_vertex_decomposable(load_complex("union_D.complex"))
    assert ok


def test_two_disjoint_edges_are_not_shellable():
    D = SimplicialComplex(4, ((1, 2), (3, 4)))
    assert find_shelling(D) is None
    assert not is_vertex_decomposable(D)[0]
    assert not is_sequentially_cm(D, QQ)


def test_verify_shelling_order_matters():
    D = SimplicialComplex(4, ((1, 2), (2, 3), (3, 4)))
    assert verify_shelling(D, [(1, 2), (2, 3), (3, 4)])
    assert not verify_shelling(D, [(1, 2), (3, 4), (2, 3)])
    with pytest.raises(PreconditionError):
        verify_shelling(D, [(1, 2)])


def test_rp2(load_complex):
    D = load_complex("rp2.complex")
    assert not is_vertex_decomposable(D)[0]
    assert find_shelling(D) is None
    assert is_sequentially_cm(D, QQ)
    assert not is_sequentially_cm(D, GF(2))


def test_union_split_of_two_shellable_parts(load_complex):
    D, D1, D2 = (load_complex(f"union_{x}.complex") for x in ("D", "D1", "D2"))
    report = union_splitting_check(D, D1, D2, QQ)
    assert report.verdict
    assert report.JK[1, 11] > 0 and report.J[1, 11] > 0 and report.K[1, 11] > 0
    with pytest.raises(PreconditionError):
        union_splitting_check(D, D1, D1, QQ)


def test_shedding_vertices_split_the_dual():
    rng = random.Random(21)
    for _ in range(25):
        D = random_complex(rng, rng.randint(3, 6))
        try:
            I = alexander_dual_ideal(D)
        except DegenerateComplexError:
            continue
        if len(I.gens) < 2:
            continue
        assert shedding_vertices(D) <= admits_xi_splitting(I, QQ)
