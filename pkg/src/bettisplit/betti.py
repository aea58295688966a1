"""Graded Betti numbers of monomial ideals.

For a multidegree ``b`` the upper Koszul simplicial complex ``K^b(I)`` is the
set of squarefree ``τ`` with ``x^(b-τ)`` in ``I``; then

    beta_{i,b}(I) = dim reduced H_{i-1}(K^b(I); k)

and only multidegrees in the lcm-lattice of ``G(I)`` contribute.  Betti
numbers are those of the ideal ``I`` itself, not of ``R/I``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Mapping

import numpy as np

from .complexes import SimplicialComplex
from .errors import NotEquigeneratedError, PreconditionError, ResourceLimitError, UndefinedError
from .homology import reduced_homology_dims
from .linalg import DEFAULT_FIELD, FieldSpec
from .monomials import MonomialIdeal, degree_component, divides, lcm

DEFAULT_LATTICE_CAP = 200_000
# above this many candidate grid points the lattice is built by lcm closure instead
_GRID_LIMIT = 3_000_000
_CHUNK_CELLS = 4_000_000


@dataclass(frozen=True)
class BettiTable:
    """Sparse table ``(i, j) -> beta_{i,j}``; absent keys are zero."""

    entries: Mapping = dc_field(default_factory=dict)
    field: FieldSpec = DEFAULT_FIELD
    n: int = 1

    def __post_init__(self):
        clean = {}
        for (i, j), v in sorted(dict(self.entries).items()):
            if v < 0:
                raise ValueError(f"negative Betti number at {(i, j)}")
            if v:
                clean[(int(i), int(j))] = int(v)
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def items(self):
        return self.entries.items()

    @property
    def is_zero(self) -> bool:
        return not self.entries

    @property
    def projdim(self) -> int:
        if not self.entries:
            raise UndefinedError("projective dimension of the zero ideal is undefined")
        return max(i for i, _ in self.entries)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def shifted(self, di: int = 0, dj: int = 0) -> "BettiTable":
        """Table of ``beta_{i-di, j-dj}`` (shift homological and internal degree)."""
        moved = {(i + di, j + dj): v for (i, j), v in self.entries.items() if i + di >= 0}
        return BettiTable(moved, self.field, self.n)

    def __add__(self, other: "BettiTable") -> "BettiTable":
        if other.field != self.field:
            raise ValueError(f"cannot add tables over {self.field} and {other.field}")
        merged = dict(self.entries)
        for k, v in other.entries.items():
            merged[k] = merged.get(k, 0) + v
        return BettiTable(merged, self.field, max(self.n, other.n))

    def same_numbers(self, other: "BettiTable") -> bool:
        """Entrywise equality, ignoring field annotation and ambient ring size."""
        return self.entries == other.entries


def regularity(T: BettiTable) -> int:
    """``max{j - i : beta_{i,j} != 0}``."""
    if T.is_zero:
        raise UndefinedError("regularity of the zero ideal is undefined")
    return max(j - i for i, j in T.entries)


def koszul_subcomplex(I: MonomialIdeal, b) -> SimplicialComplex:
    """Upper Koszul simplicial complex of ``I`` in multidegree ``b``."""
    b = tuple(b)
    if len(b) != I.n or any(e < 0 for e in b):
        raise PreconditionError(f"multidegree {b} is not a nonnegative vector of length {I.n}")
    facets = []
    for g in I.gens:
        if divides(g, b):
            facets.append(tuple(k + 1 for k in range(I.n) if g[k] < b[k]))
    return SimplicialComplex.from_faces(I.n, facets)


def _closure_lattice(gens: tuple, cap: int) -> list:
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        fresh = set()
        for m in frontier:
            for g in gens:
                l = lcm(m, g)
                if l not in lattice:
                    lattice.add(l)
                    fresh.add(l)
        if len(lattice) > cap:
            raise ResourceLimitError(f"lcm-lattice exceeds {cap} points")
        frontier = fresh
    return sorted(lattice)


def _grid_lattice(gens: tuple, n: int, cap: int) -> list:
    G = np.array(gens, dtype=np.int64)
    values = [np.unique(np.concatenate([[0], G[:, k]])) for k in range(n)]
    grid = np.array(np.meshgrid(*values, indexing="ij")).reshape(n, -1).T
    step = max(1, _CHUNK_CELLS // (len(gens) * n))
    found = []
    for start in range(0, len(grid), step):
        B = grid[start:start + step]
        div = (G[None, :, :] <= B[:, None, :]).all(axis=2)
        hit = ((G[None, :, :] == B[:, None, :]) & div[:, :, None]).any(axis=1)
        ok = div.any(axis=1) & ((B == 0) | hit).all(axis=1)
        found.extend(map(tuple, B[ok].tolist()))
        if len(found) > cap:
            raise ResourceLimitError(f"lcm-lattice exceeds {cap} points")
    return sorted(found)


def lcm_lattice(I: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> list:
    """All lcms of nonempty subsets of ``G(I)``, sorted."""
    if I.is_zero:
        return []
    grid_size = 1
    for k in range(I.n):
        grid_size *= len({g[k] for g in I.gens} | {0})
    if grid_size <= _GRID_LIMIT:
        return _grid_lattice(I.gens, I.n, cap)
    return _closure_lattice(I.gens, cap)


@lru_cache(maxsize=1 << 16)
def _homology_of_masks(masks: frozenset, characteristic: int) -> tuple:
    facets = [tuple(k + 1 for k in range(m.bit_length()) if m >> k & 1) for m in masks]
    return tuple(reduced_homology_dims(facets, FieldSpec(characteristic)))


def _maximal_masks(masks) -> frozenset:
    ordered = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    kept = []
    for m in ordered:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return frozenset(kept)


def _betti_at_points(gens: tuple, n: int, characteristic: int, points: list) -> list:
    G = np.array(gens, dtype=np.int64)
    weights = 1 << np.arange(n, dtype=np.int64)
    out = []
    step = max(1, _CHUNK_CELLS // (len(gens) * n))
    for start in range(0, len(points), step):
        B = np.array(points[start:start + step], dtype=np.int64).reshape(-1, n)
        div = (G[None, :, :] <= B[:, None, :]).all(axis=2)
        bits = ((G[None, :, :] < B[:, None, :]) * weights).sum(axis=2)
        for r, b in enumerate(points[start:start + step]):
            masks = _maximal_masks(bits[r][div[r]].tolist())
            common = -1
            for m in masks:
                common &= m
            if common:
                continue  # cone: acyclic
            dims = _homology_of_masks(masks, characteristic)
            for idx, h in enumerate(dims):
                if h:
                    out.append((idx, b, h))
    return out


def multigraded_betti(
    I: MonomialIdeal,
    field: FieldSpec = DEFAULT_FIELD,
    jobs: int = 1,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> dict:
    """``{(i, b): beta_{i,b}(I)}`` for all nonzero multigraded Betti numbers."""
    if I.is_zero:
        return {}
    points = lcm_lattice(I, lattice_cap)
    if jobs > 1 and len(points) > 64:
        size = -(-len(points) // jobs)
        chunks = [points[k:k + size] for k in range(0, len(points), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                _betti_at_points,
                itertools.repeat(I.gens),
                itertools.repeat(I.n),
                itertools.repeat(field.characteristic),
                chunks,
            )
            triples = [t for part in parts for t in part]
    else:
        triples = _betti_at_points(I.gens, I.n, field.characteristic, points)
    return {(i, b): h for i, b, h in sorted(triples)}


@lru_cache(maxsize=4096)
def _graded_cached(gens: tuple, n: int, characteristic: int, lattice_cap: int) -> tuple:
    I = MonomialIdeal(n, gens)
    totals: dict = {}
    for (i, b), h in multigraded_betti(I, FieldSpec(characteristic), 1, lattice_cap).items():
        key = (i, sum(b))
        totals[key] = totals.get(key, 0) + h
    return tuple(sorted(totals.items()))


def graded_betti(
    I: MonomialIdeal,
    field: FieldSpec = DEFAULT_FIELD,
    jobs: int = 1,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> BettiTable:
    """Graded Betti table of ``I``; the zero ideal gives the empty table."""
    if jobs > 1:
        totals: dict = {}
        for (i, b), h in multigraded_betti(I, field, jobs, lattice_cap).items():
            totals[(i, sum(b))] = totals.get((i, sum(b)), 0) + h
        return BettiTable(totals, field, I.n)
    return BettiTable(dict(_graded_cached(I.gens, I.n, field.characteristic, lattice_cap)), field, I.n)


def has_linear_resolution(I: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD) -> bool:
    """True iff ``I``, generated in the single degree ``d``, has a ``d``-linear resolution."""
    if I.is_zero:
        raise PreconditionError("the zero ideal has no resolution to test")
    if not I.is_equigenerated():
        raise NotEquigeneratedError(f"{I} is generated in degrees {sorted(I.degrees())}")
    return regularity(graded_betti(I, field)) == I.indeg


def nonlinear_components(I: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD, extra_degrees: int = 0) -> list:
    """Degrees ``j`` for which ``I_<j>`` lacks a ``j``-linear resolution.

    Degrees from ``indeg(I)`` to ``maxdeg(I) + extra_degrees`` are examined;
    above the top generator degree each component is ``m`` times the previous one.
    """
    if I.is_zero:
        raise PreconditionError("componentwise linearity of the zero ideal is not defined")
    bad = []
    for j in range(I.indeg, I.maxdeg + extra_degrees + 1):
        if not has_linear_resolution(degree_component(I, j), field):
            bad.append(j)
    return bad


def is_componentwise_linear(I: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD) -> bool:
    if I.is_zero:
        raise PreconditionError("componentwise linearity of the zero ideal is not defined")
    for j in range(I.indeg, I.maxdeg + 1):
        if not has_linear_resolution(degree_component(I, j), field):
            return False
    return True
