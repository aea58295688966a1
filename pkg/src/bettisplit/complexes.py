"""The simplicial complex value type.

Vertices are the integers ``1..n_vertices``; a complex is stored through its
facets.  The *void* complex has no faces at all (``facets == ()``), while the
complex ``{∅}`` has the single facet ``()``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import MalformedInputError


def _canonical(faces) -> tuple:
    return tuple(sorted({tuple(sorted(f)) for f in faces}, key=lambda f: (-len(f), f)))


def maximal_faces(faces: Iterable[Iterable[int]]) -> tuple:
    """Inclusion-maximal members of ``faces``, canonically ordered."""
    sets = sorted({frozenset(f) for f in faces}, key=len, reverse=True)
    kept: list = []
    for f in sets:
        if not any(f <= g for g in kept):
            kept.append(f)
    return _canonical(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    n_vertices: int
    facets: tuple = ()

    def __post_init__(self):
        if not isinstance(self.n_vertices, int) or self.n_vertices < 1:
            raise MalformedInputError(f"vertex count must be positive, got {self.n_vertices!r}")
        facets = []
        for f in self.facets:
            f = tuple(f)
            if len(set(f)) != len(f):
                raise MalformedInputError(f"facet {list(f)} repeats a vertex")
            for v in f:
                if not isinstance(v, int) or not 1 <= v <= self.n_vertices:
                    raise MalformedInputError(f"vertex {v!r} outside 1..{self.n_vertices}")
            facets.append(f)
        canon = _canonical(facets)
        sets = [frozenset(f) for f in canon]
        for a in sets:
            for b in sets:
                if a < b:
                    raise MalformedInputError(f"{sorted(a)} is contained in {sorted(b)}; facets must be maximal")
        object.__setattr__(self, "facets", canon)

    @classmethod
    def from_faces(cls, n_vertices: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Complex generated by arbitrary faces; non-maximal ones are dropped."""
        return cls(n_vertices, maximal_faces(faces))

    @classmethod
    def simplex(cls, vertices: Iterable[int], n_vertices: int | None = None) -> "SimplicialComplex":
        vertices = tuple(sorted(vertices))
        return cls(n_vertices or max(vertices, default=1), (vertices,))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; ``-1`` for ``{∅}`` and, by convention, also for the void complex."""
        return max((len(f) - 1 for f in self.facets), default=-1)

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for f in self.facets for v in f)

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def __contains__(self, face) -> bool:
        face = set(face)
        return any(face <= set(f) for f in self.facets)

    def faces(self) -> dict:
        """All faces grouped by dimension, each list sorted lexicographically."""
        return enumerate_faces(self.facets)

    def __str__(self) -> str:
        body = ", ".join("[" + ",".join(map(str, f)) + "]" for f in self.facets)
        return f"<{body}> on {self.n_vertices} vertices"


def enumerate_faces(facets) -> dict:
    by_dim: dict = {}
    seen = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(len(f) + 1):
            for sub in combinations(f, k):
                if sub not in seen:
                    seen.add(sub)
                    by_dim.setdefault(k - 1, []).append(sub)
    for faces in by_dim.values():
        faces.sort()
    return by_dim
