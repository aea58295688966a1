"""Alexander duality, links, deletions, and combinatorial decomposability checks.

Vertex decomposability and shellability follow the non-pure definitions of
Björner and Wachs.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .betti import is_componentwise_linear
from .complexes import SimplicialComplex, maximal_faces
from .errors import DegenerateComplexError, PreconditionError, ResourceLimitError
from .linalg import DEFAULT_FIELD, FieldSpec
from .monomials import MonomialIdeal, minimalize, scale_by_monomial, variable
from .splitting import SplittingReport, is_betti_splitting

DEFAULT_SEARCH_CAP = 200_000


def alexander_dual_ideal(D: SimplicialComplex, vertices: Optional[Iterable[int]] = None) -> MonomialIdeal:
    """``(x_{V \\ F} : F a facet)`` in ``D.n_vertices`` variables.

    ``vertices`` is the ground set ``V`` used for complements; it defaults to
    ``{1, ..., n_vertices}``.
    """
    ground = set(range(1, D.n_vertices + 1)) if vertices is None else set(vertices)
    if D.is_void:
        raise DegenerateComplexError("the void complex has no Alexander dual ideal")
    gens = []
    for f in D.facets:
        if not set(f) <= ground:
            raise PreconditionError(f"facet {list(f)} is not inside the ground set")
        comp = ground - set(f)
        if not comp:
            raise DegenerateComplexError(f"facet {list(f)} is the whole ground set; its dual generator is 1")
        gens.append(tuple(1 if v in comp else 0 for v in range(1, D.n_vertices + 1)))
    return minimalize(gens, D.n_vertices)


def complex_from_dual_ideal(I: MonomialIdeal) -> SimplicialComplex:
    """Inverse of :func:`alexander_dual_ideal` for squarefree ideals."""
    if not I.is_squarefree():
        raise PreconditionError(f"{I} is not squarefree")
    facets = [tuple(k + 1 for k in range(I.n) if not g[k]) for g in I.gens]
    return SimplicialComplex(I.n, facets)


def _check_vertex(D: SimplicialComplex, v: int) -> None:
    if not 1 <= v <= D.n_vertices:
        raise PreconditionError(f"vertex {v} outside 1..{D.n_vertices}")


def link(D: SimplicialComplex, v: int) -> SimplicialComplex:
    """Faces ``F`` with ``v ∉ F`` and ``F ∪ {v}`` in ``D``; void if ``v`` is in no facet."""
    _check_vertex(D, v)
    faces = [tuple(u for u in f if u != v) for f in D.facets if v in f]
    return SimplicialComplex(D.n_vertices, maximal_faces(faces))


def deletion(D: SimplicialComplex, v: int) -> SimplicialComplex:
    """Faces of ``D`` not containing ``v``."""
    _check_vertex(D, v)
    return SimplicialComplex(D.n_vertices, maximal_faces(tuple(u for u in f if u != v) for f in D.facets))


def shedding_identity(D: SimplicialComplex, v: int) -> tuple:
    """``(x_v * I*_del, I*_link)`` with both duals taken over the ground set ``V \\ {v}``.

    Their sum is always the Alexander dual ideal of ``D``.
    """
    ground = set(range(1, D.n_vertices + 1)) - {v}
    dl, lk = deletion(D, v), link(D, v)
    J = scale_by_monomial(variable(v, D.n_vertices), alexander_dual_ideal(dl, ground))
    K = alexander_dual_ideal(lk, ground)
    return J, K


def is_shedding_vertex(D: SimplicialComplex, v: int) -> bool:
    """``v`` is a vertex of ``D`` and no facet of ``link(v)`` is a facet of ``deletion(v)``."""
    if v not in D.vertices:
        return False
    return not set(link(D, v).facets) & set(deletion(D, v).facets)


@lru_cache(maxsize=1 << 16)
def _vd(facets: tuple) -> Optional[tuple]:
    # facets canonical; returns the shedding order along deletions, or None
    if len(facets) <= 1:
        return ()
    D = SimplicialComplex(max(max(f, default=1) for f in facets), facets)
    for v in sorted(D.vertices):
        if not is_shedding_vertex(D, v):
            continue
        if _vd(link(D, v).facets) is None:
            continue
        rest = _vd(deletion(D, v).facets)
        if rest is not None:
            return (v,) + rest
    return None


def is_vertex_decomposable(D: SimplicialComplex) -> tuple:
    """``(verdict, shedding sequence)``.

    The sequence lists the shedding vertices removed one after another, each
    from the deletion left by the previous step, until a simplex remains.
    """
    if len(D.facets) > 64:
        raise ResourceLimitError("vertex decomposability search is capped at 64 facets")
    order = _vd(D.facets)
    return (order is not None, list(order) if order is not None else [])


def shedding_vertices(D: SimplicialComplex) -> set:
    """Shedding vertices whose link and deletion are both vertex decomposable."""
    return {
        v
        for v in D.vertices
        if is_shedding_vertex(D, v)
        and _vd(link(D, v).facets) is not None
        and _vd(deletion(D, v).facets) is not None
    }


def _attaches_properly(previous: Sequence[frozenset], new: frozenset) -> bool:
    # <previous> ∩ <new> must be pure of dimension dim(new) - 1
    if not previous:
        return True
    meets = maximal_faces(new & f for f in previous)
    return all(len(m) == len(new) - 1 for m in meets)


def verify_shelling(D: SimplicialComplex, order: Sequence[Sequence[int]]) -> bool:
    """Check that ``order`` (a permutation of the facets) is a shelling."""
    if sorted(tuple(sorted(f)) for f in order) != sorted(D.facets):
        raise PreconditionError("order is not a permutation of the facets")
    placed: list = []
    for f in order:
        f = frozenset(f)
        if not _attaches_properly(placed, f):
            return False
        placed.append(f)
    return True


def find_shelling(D: SimplicialComplex, cap: int = DEFAULT_SEARCH_CAP) -> Optional[list]:
    """A shelling order of the facets, or ``None`` if none exists.

    Facets are placed in order of decreasing size, which loses no shellings.
    Raises :class:`ResourceLimitError` after ``cap`` search states.
    """
    facets = [frozenset(f) for f in D.facets]
    if not facets:
        return []
    dead: set = set()
    explored = 0

    def extend(used: frozenset, order: list) -> Optional[list]:
        nonlocal explored
        if len(order) == len(facets):
            return order
        if used in dead:
            return None
        explored += 1
        if explored > cap:
            raise ResourceLimitError(f"shelling search exceeded {cap} states")
        remaining = [f for f in facets if f not in used]
        top = max(len(f) for f in remaining)
        placed = [f for f in facets if f in used]
        for f in remaining:
            if len(f) == top and _attaches_properly(placed, f):
                found = extend(used | {f}, order + [f])
                if found is not None:
                    return found
        dead.add(used)
        return None

    found = extend(frozenset(), [])
    return None if found is None else [tuple(sorted(f)) for f in found]


def union_splitting_check(
    D: SimplicialComplex, D1: SimplicialComplex, D2: SimplicialComplex, field: FieldSpec = DEFAULT_FIELD
) -> SplittingReport:
    """Is ``I*_D = I*_D1 + I*_D2`` a Betti splitting (duals over the vertices of ``D``)?"""
    if not (D.n_vertices == D1.n_vertices == D2.n_vertices):
        raise PreconditionError("the three complexes must share the vertex set")
    f, f1, f2 = set(D.facets), set(D1.facets), set(D2.facets)
    if not f1 or not f2 or f1 & f2 or f1 | f2 != f:
        raise PreconditionError("facets of D are not the disjoint union of the facets of D1 and D2")
    I, J, K = (alexander_dual_ideal(x) for x in (D, D1, D2))
    return is_betti_splitting(I, J, K, field)


def is_sequentially_cm(D: SimplicialComplex, field: FieldSpec = DEFAULT_FIELD) -> bool:
    """Sequential Cohen-Macaulayness, via componentwise linearity of the Alexander dual."""
    if D.is_void:
        return True
    if any(len(f) == D.n_vertices for f in D.facets):
        return True  # a full simplex
    return is_componentwise_linear(alexander_dual_ideal(D), field)
