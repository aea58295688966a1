"""Reduced simplicial homology over a field."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .complexes import SimplicialComplex, enumerate_faces
from .errors import ResourceLimitError
from .linalg import DEFAULT_FIELD, FieldSpec, sparse_rank

DEFAULT_FACE_CAP = 500_000


@dataclass(frozen=True)
class ChainComplexRanks:
    """Face counts ``f[d]`` (``d >= -1``, empty face included) and boundary ranks ``rank[d]`` of ``C_d -> C_{d-1}``."""

    face_counts: dict = dc_field(default_factory=dict)
    ranks: dict = dc_field(default_factory=dict)

    def homology(self) -> list:
        if not self.face_counts:
            return []
        top = max(self.face_counts)
        return [
            self.face_counts[d] - self.ranks.get(d, 0) - self.ranks.get(d + 1, 0)
            for d in range(-1, top + 1)
        ]


def _facets_of(X):
    return X.facets if isinstance(X, SimplicialComplex) else tuple(tuple(sorted(f)) for f in X)


def boundary_rows(faces_d: list, faces_lower: list) -> list:
    """Sparse rows of the boundary map: one row per face in ``faces_d``."""
    index = {f: k for k, f in enumerate(faces_lower)}
    rows = []
    for f in faces_d:
        row = {}
        for t in range(len(f)):
            row[index[f[:t] + f[t + 1:]]] = -1 if t % 2 else 1
        rows.append(row)
    return rows


def chain_complex_ranks(X, field: FieldSpec = DEFAULT_FIELD, face_cap: int = DEFAULT_FACE_CAP) -> ChainComplexRanks:
    facets = _facets_of(X)
    if not facets:
        return ChainComplexRanks()
    total = sum(2 ** len(f) for f in facets)
    if total > face_cap:
        # the bound above overcounts shared faces; enumerate before giving up
        faces = enumerate_faces(facets)
        if sum(len(v) for v in faces.values()) > face_cap:
            raise ResourceLimitError(f"complex has more than {face_cap} faces")
    else:
        faces = enumerate_faces(facets)
    counts = {d: len(fs) for d, fs in faces.items()}
    ranks = {}
    for d in sorted(faces):
        if d < 0:
            continue
        ranks[d] = sparse_rank(boundary_rows(faces[d], faces[d - 1]), field)
    return ChainComplexRanks(counts, ranks)


def reduced_homology_dims(X, field: FieldSpec = DEFAULT_FIELD, face_cap: int = DEFAULT_FACE_CAP) -> list:
    """Dimensions of reduced homology ``[H_-1, H_0, ..., H_dim]``.

    ``X`` is a :class:`SimplicialComplex` or an iterable of facets.  The void
    complex yields ``[]``; ``{∅}`` yields ``[1]``.
    """
    facets = _facets_of(X)
    if not facets:
        return []
    dim = max(len(f) for f in facets) - 1
    common = set(facets[0])
    for f in facets[1:]:
        common &= set(f)
        if not common:
            break
    if common:
        # a cone over any vertex in every facet is acyclic
        return [0] * (dim + 2)
    return chain_complex_ranks(facets, field, face_cap).homology()
