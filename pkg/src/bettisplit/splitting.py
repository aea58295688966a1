"""Betti splittings ``I = J + K`` of monomial ideals.

A decomposition with ``G(I) = G(J) ⊔ G(K)`` is a Betti splitting when

    beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J ∩ K)

for every ``(i, j)``.  Verification compares the four Betti tables directly.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional

from .betti import BettiTable, graded_betti, has_linear_resolution, is_componentwise_linear, regularity
from .errors import DegenerateSplitError, PreconditionError, ResourceLimitError
from .linalg import DEFAULT_FIELD, FieldSpec
from .monomials import MonomialIdeal, _trusted, ideal_intersection, partition_is_valid

DEFAULT_SEARCH_BOUND = 20


@dataclass(frozen=True)
class SplittingReport:
    """Outcome of checking the Betti identity; ``witness`` is the first failing ``(i, j)``."""

    verdict: bool
    witness: Optional[tuple]
    I: BettiTable
    J: BettiTable
    K: BettiTable
    JK: BettiTable

    def __bool__(self) -> bool:
        return self.verdict

    def predicted(self) -> BettiTable:
        """Right-hand side of the identity, as a table."""
        return self.J + self.K + self.JK.shifted(1, 0)


def splitting_identity_witness(tI: BettiTable, tJ: BettiTable, tK: BettiTable, tJK: BettiTable):
    keys = set(tI) | set(tJ) | set(tK) | {(i + 1, j) for i, j in tJK}
    for i, j in sorted(keys):
        if tI[i, j] != tJ[i, j] + tK[i, j] + tJK[i - 1, j]:
            return (i, j)
    return None


def is_betti_splitting(
    I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD
) -> SplittingReport:
    if not partition_is_valid(I, J, K):
        raise PreconditionError("G(I) is not the disjoint union of G(J) and G(K) with both parts nonzero")
    JK = ideal_intersection(J, K)
    tI, tJ, tK, tJK = (graded_betti(x, field) for x in (I, J, K, JK))
    witness = splitting_identity_witness(tI, tJ, tK, tJK)
    return SplittingReport(witness is None, witness, tI, tJ, tK, tJK)


def xi_split(I: MonomialIdeal, i: int) -> tuple:
    """Split ``G(I)`` into generators divisible by ``x_i`` and the rest."""
    if I.is_zero:
        raise PreconditionError("cannot split the zero ideal")
    if not 1 <= i <= I.n:
        raise PreconditionError(f"variable index {i} outside 1..{I.n}")
    inside = [g for g in I.gens if g[i - 1] > 0]
    outside = [g for g in I.gens if g[i - 1] == 0]
    if not inside or not outside:
        raise DegenerateSplitError(f"x{i}-split of {I} leaves an empty part")
    return _trusted(I.n, inside), _trusted(I.n, outside)


def linear_splitting_criterion(
    I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD, check: bool = True
) -> bool:
    """For ``I`` with a ``d``-linear resolution: do ``J`` and ``K`` both have ``d``-linear resolutions?

    With ``check`` set, a positive answer is cross-checked against the Betti
    identity and against ``J ∩ K`` having a ``(d+1)``-linear resolution.
    """
    if not partition_is_valid(I, J, K):
        raise PreconditionError("G(I) is not the disjoint union of G(J) and G(K) with both parts nonzero")
    if not I.is_equigenerated() or not has_linear_resolution(I, field):
        raise PreconditionError(f"{I} does not have a linear resolution")
    d = I.indeg
    result = has_linear_resolution(J, field) and has_linear_resolution(K, field)
    if check:
        report = is_betti_splitting(I, J, K, field)
        if report.verdict != result:
            raise AssertionError(f"linear criterion {result} disagrees with Betti identity {report.verdict}")
        if result and regularity(report.JK) != d + 1:
            raise AssertionError(f"reg(J ∩ K) = {regularity(report.JK)}, expected {d + 1}")
    return result


def componentwise_splitting_criterion(
    I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD, check: bool = True
) -> bool:
    """True iff ``J`` and ``K`` are both componentwise linear (then ``I = J + K`` splits)."""
    if not partition_is_valid(I, J, K):
        raise PreconditionError("G(I) is not the disjoint union of G(J) and G(K) with both parts nonzero")
    result = is_componentwise_linear(J, field) and is_componentwise_linear(K, field)
    if result and check:
        report = is_betti_splitting(I, J, K, field)
        if not report.verdict:
            raise AssertionError(f"componentwise linear parts but identity fails at {report.witness}")
    return result


def admits_xi_splitting(
    I: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD, use_linear_shortcut: bool = True
) -> set:
    """All ``i`` whose ``x_i``-split is nondegenerate and a Betti splitting.

    If ``I`` has a linear resolution, a split is decided by the linearity of
    its two parts alone, skipping ``J ∩ K``.
    """
    if I.is_zero:
        raise PreconditionError("the zero ideal has no splittings")
    linear = use_linear_shortcut and I.is_equigenerated() and has_linear_resolution(I, field)
    found = set()
    for i in range(1, I.n + 1):
        try:
            J, K = xi_split(I, i)
        except DegenerateSplitError:
            continue
        if linear:
            ok = has_linear_resolution(J, field) and has_linear_resolution(K, field)
        else:
            ok = is_betti_splitting(I, J, K, field).verdict
        if ok:
            found.add(i)
    return found


def partition_count(g: int) -> int:
    """Unordered splits of ``g`` generators into two nonempty parts."""
    return 2 ** (g - 1) - 1 if g >= 2 else 0


def ordered_small_part_count(g: int) -> int:
    """Choices of a part with at most ``g // 2`` generators (both halves counted when ``g`` is even)."""
    return sum(comb(g, k) for k in range(1, g // 2 + 1))


def _parts(I: MonomialIdeal, mask: int) -> tuple:
    J = [g for k, g in enumerate(I.gens) if mask >> k & 1]
    K = [g for k, g in enumerate(I.gens) if not mask >> k & 1]
    return _trusted(I.n, J), _trusted(I.n, K)


def _check_masks(I: MonomialIdeal, characteristic: int, masks: list) -> list:
    field = FieldSpec(characteristic)
    out = []
    for mask in masks:
        J, K = _parts(I, mask)
        report = is_betti_splitting(I, J, K, field)
        if report.verdict:
            out.append(mask)
    return out


def partition_masks(g: int) -> range:
    """Bitmasks choosing ``G(J)``; the last generator always lies in ``K`` so each unordered pair appears once."""
    return range(1, 2 ** (g - 1)) if g >= 2 else range(0)


def search_betti_splittings(
    I: MonomialIdeal,
    field: FieldSpec = DEFAULT_FIELD,
    limit: Optional[int] = None,
    bound: int = DEFAULT_SEARCH_BOUND,
    jobs: int = 1,
) -> list:
    """Verified Betti splittings ``(J, K, report)`` in increasing bitmask order."""
    g = len(I.gens)
    if g > bound:
        raise ResourceLimitError(f"{g} generators exceed the search bound {bound}")
    masks = list(partition_masks(g))
    if jobs > 1 and len(masks) > jobs:
        size = -(-len(masks) // jobs)
        chunks = [masks[k:k + size] for k in range(0, len(masks), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_check_masks, [I] * len(chunks), [field.characteristic] * len(chunks), chunks)
            good = sorted(m for part in parts for m in part)
    else:
        good = []
        for mask in masks:
            if limit is not None and len(good) >= limit:
                break
            good.extend(_check_masks(I, field.characteristic, [mask]))
    if limit is not None:
        good = good[:limit]
    results = []
    for mask in good:
        J, K = _parts(I, mask)
        results.append((J, K, is_betti_splitting(I, J, K, field)))
    return results


def random_partition(I: MonomialIdeal, rng: random.Random) -> tuple:
    """A uniformly random unordered nontrivial partition of ``G(I)``."""
    masks = partition_masks(len(I.gens))
    if not masks:
        raise DegenerateSplitError(f"{I} has fewer than two generators")
    return _parts(I, rng.choice(masks))


def all_xi_splits(I: MonomialIdeal) -> Iterable:
    for i in range(1, I.n + 1):
        try:
            yield i, xi_split(I, i)
        except DegenerateSplitError:
            continue
