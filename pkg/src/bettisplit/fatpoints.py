"""Ideals of two and three general fat points in projective space.

After a change of coordinates the points are ``P1, P2, P3``, the first three
coordinate points of ``P^(n-1)``, and with multiplicities ``a <= b <= c``

    I_{n,a,b,c} = (x2,...,xn)^a ∩ (x1,x3,...,xn)^b ∩ (x1,x2,x4,...,xn)^c.

Multiplicity 0 drops a point, so ``I_{n,0,b,c}`` is the ideal of two fat
points and ``I_{n,k,k,k}`` the ideal of three points of equal multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .betti import BettiTable, graded_betti, is_componentwise_linear
from .errors import ConstructionFailure, DegenerateSplitError, HypothesisError, MalformedInputError
from .linalg import DEFAULT_FIELD, FieldSpec
from .monomials import (
    MonomialIdeal,
    embed,
    format_monomial,
    ideal_sum,
    intersect_all,
    power_of_subset_ideal,
    scale_by_monomial,
    variable,
)
from .splitting import SplittingReport, is_betti_splitting


@dataclass(frozen=True)
class FatPointParams:
    n: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if not all(isinstance(v, int) for v in (self.n, self.a, self.b, self.c)):
            raise MalformedInputError("fat point parameters must be integers")
        if not 0 <= self.a <= self.b <= self.c or self.c < 1:
            raise MalformedInputError(f"need 0 <= a <= b <= c and c >= 1, got {(self.a, self.b, self.c)}")
        if self.n < 3:
            raise MalformedInputError(f"need n >= 3 variables, got {self.n}")

    @property
    def multiplicities(self) -> tuple:
        return (self.a, self.b, self.c)


def binom(top: int, bottom: int) -> int:
    """Binomial coefficient, zero when ``top`` is negative or ``bottom`` is out of range."""
    if top < 0 or bottom < 0 or bottom > top:
        return 0
    return comb(top, bottom)


def binomial_column_sum(h: int, s: int, c: int) -> int:
    """``sum_{r=h}^{s} C(r, c)`` through the hockey-stick identity."""
    return binom(s + 1, c + 1) - binom(h, c + 1)


def point_ideal_power(k: int, m: int, n: int) -> MonomialIdeal:
    """``m``-th power of the ideal of the ``k``-th coordinate point."""
    return power_of_subset_ideal([v for v in range(1, n + 1) if v != k], m, n)


def fat_ideal(n: int, mults) -> MonomialIdeal:
    """Ideal of fat points ``P1, P2, P3`` with multiplicities ``mults`` (any order, zeros allowed)."""
    return intersect_all([point_ideal_power(k + 1, m, n) for k, m in enumerate(mults)])


def fat_points_ideal(p: FatPointParams) -> MonomialIdeal:
    return fat_ideal(p.n, p.multiplicities)


def _offending(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal) -> list:
    gi = set(I.gens)
    bad = [("J", g) for g in J.gens if g not in gi] + [("K", g) for g in K.gens if g not in gi]
    if not bad:
        bad = [("I", g) for g in I.gens if g not in set(J.gens) | set(K.gens)]
    return bad


def theorem51_split(p: FatPointParams) -> tuple:
    """The ``x1``-split ``J = x1*I_{n,a,b-1,c-1}``, ``K = (x3..xn)^b ∩ (x2,x4..xn)^c``.

    Raises :class:`ConstructionFailure` (naming the bad generators) when
    ``G(I)`` is not the disjoint union of ``G(J)`` and ``G(K)``; with
    ``c == a`` this is the expected outcome.
    """
    n, a, b, c = p.n, p.a, p.b, p.c
    if n < 4:
        raise HypothesisError(f"the x1-split needs n >= 4, got n = {n}")
    if a < 1:
        raise HypothesisError("the x1-split needs three points (a >= 1)")
    I = fat_points_ideal(p)
    J = scale_by_monomial(variable(1, n), fat_ideal(n, (a, b - 1, c - 1)))
    K = intersect_all([
        power_of_subset_ideal(range(3, n + 1), b, n),
        power_of_subset_ideal([2] + list(range(4, n + 1)), c, n),
    ])
    bad = _offending(I, J, K)
    if bad or ideal_sum(J, K) != I:
        names = ", ".join(f"{format_monomial(g)} in G({part})" for part, g in bad)
        raise ConstructionFailure(f"I_{{{n},{a},{b},{c}}} = J + K is not a split: {names} is not a minimal generator of I",
                                  offending=[g for _, g in bad])
    if c == a:
        raise HypothesisError(f"the x1-split needs c != a, got a = c = {a}")
    return J, K


def verify_theorem51_split(p: FatPointParams, field: FieldSpec = DEFAULT_FIELD) -> SplittingReport:
    """Build the ``x1``-split and confirm it is a Betti splitting with componentwise linear parts."""
    J, K = theorem51_split(p)
    I = fat_points_ideal(p)
    report = is_betti_splitting(I, J, K, field)
    if not report.verdict:
        raise AssertionError(f"x1-split of I_{p.multiplicities} fails the Betti identity at {report.witness}")
    if not (is_componentwise_linear(J, field) and is_componentwise_linear(K, field)):
        raise AssertionError(f"x1-split of I_{p.multiplicities} has a part that is not componentwise linear")
    return report


def two_point_relabeling(n: int) -> dict:
    """Variable renaming taking ``K`` of the ``x1``-split onto ``I_{n-1,b,c}``.

    ``x2, x3`` keep their names, ``x4`` becomes ``x1``, and ``x_k`` becomes
    ``x_{k-1}`` for ``k >= 5``.
    """
    mapping = {2: 2, 3: 3, 4: 1}
    mapping.update({k: k - 1 for k in range(5, n + 1)})
    return mapping


def xn_split_equal_multiplicity(n: int, a: int) -> tuple:
    """``I_{n,a} = x_n*I_{n,a-1} + I_{n-1,a}`` with ``I_{n-1,a}`` viewed in ``n`` variables."""
    if a < 1:
        raise DegenerateSplitError("equal-multiplicity split needs a >= 1")
    if n < 4:
        raise HypothesisError(f"equal-multiplicity split needs n >= 4, got {n}")
    I = fat_ideal(n, (a, a, a))
    J = scale_by_monomial(variable(n, n), fat_ideal(n, (a - 1, a - 1, a - 1)))
    K = embed(fat_ideal(n - 1, (a, a, a)), n)
    bad = _offending(I, J, K)
    if bad or ideal_sum(J, K) != I:
        names = ", ".join(f"{format_monomial(g)} in G({part})" for part, g in bad)
        raise ConstructionFailure(f"x{n}-split of I_{{{n},{a}}} is not a split: {names}", offending=[g for _, g in bad])
    return J, K


@lru_cache(maxsize=None)
def _direct(n: int, mults: tuple, characteristic: int) -> BettiTable:
    return graded_betti(fat_ideal(n, mults), FieldSpec(characteristic))


def _check_hypotheses(p: FatPointParams) -> None:
    if p.n < 4:
        raise HypothesisError(f"step 0: need n >= 4, got {p.n}")
    if p.a < 1:
        raise HypothesisError("step 0: need three points, a >= 1")
    if p.a == p.c:
        raise HypothesisError(f"step 0: I_{{{p.n},{p.a},{p.b},{p.c}}} has c = a; no x1-splitting")


def recursion_steps(p: FatPointParams) -> list:
    """Multiplicity triples visited by the recursion, ending at a base case."""
    _check_hypotheses(p)
    steps = []
    mults = tuple(sorted(p.multiplicities))
    while mults[0] > 0 and mults[0] != mults[2]:
        steps.append(mults)
        a, b, c = mults
        mults = tuple(sorted((a, b - 1, c - 1)))
    steps.append(mults)
    return steps


def betti_recursive(p: FatPointParams, field: FieldSpec = DEFAULT_FIELD) -> BettiTable:
    """Betti table assembled from repeated ``x1``-splittings.

    Each step uses ``beta_{i,j}(I) = beta_{i,j-1}(I_{n,a,b-1,c-1}) + beta_{i,j}(I_{n-1,b,c})
    + beta_{i-1,j-1}(I_{n-1,b,c})``, re-sorting multiplicities (relabelling the
    points) before the next step.  Two-point ideals and ``I_{n,k}`` are
    computed directly.
    """
    steps = recursion_steps(p)
    n, ch = p.n, field.characteristic
    table = BettiTable({}, field, n)
    shift = 0
    for a, b, c in steps[:-1]:
        two = _direct(n - 1, (0, b, c), ch)
        table = table + two.shifted(0, shift) + two.shifted(1, shift + 1)
        shift += 1
    base = _direct(n, steps[-1], ch)
    table = table + base.shifted(0, shift)
    return BettiTable(table.entries, field, n)


def _two(n: int, s: int, t: int, ch: int) -> BettiTable:
    return _direct(n, (0, s, t), ch)


def betti_closed_form(p: FatPointParams, i: int, j: int, field: FieldSpec = DEFAULT_FIELD) -> int:
    """``beta_{i,j}(I_{n,a,b,c})`` from the piecewise closed formulas.

    Two-point and equal-multiplicity ideals entering the ``j = i + c`` row
    (and, when ``a + b > c``, the first band) are computed directly.
    """
    _check_hypotheses(p)
    n, a, b, c = p.n, p.a, p.b, p.c
    ch = field.characteristic
    if i < 0 or j < i + c or j >= b + c + 1 + i:
        return 0
    lead = binom(n - 2, i)
    first = binom(n - 3 + c + a - j + i, n - 3)
    second = binom(n - 3 + c + b - j + i, n - 3)

    if a + b <= c:
        if j == i + c:
            total = _two(n, a, c - b, ch)[i, i + c - b]
            for r in range(b):
                two = _two(n - 1, b - r, c - r, ch)
                total += two[i, i + c - r] + two[i - 1, i + c - r - 1]
            return total
        if j <= a + c + i:
            return lead * (first + second)
        return lead * second

    k = a + b - c
    equal = _direct(n, (k, k, k), ch)
    if j == i + c:

        def gamma(s, t):
            two = _two(n - 1, s, t, ch)
            return two[i, i + t] + two[i - 1, i + t - 1]

        total = equal[i, i + k]
        total += sum(gamma(b - r, c - r) for r in range(c - a))
        total += sum(gamma(a - r, a - r) for r in range(c - b))
        return total
    if j <= a + b + i:
        correction = first + second - 2 * binom(n - 3 + a + b - j + i, n - 3)
        return equal[i, j + k - c] + lead * correction
    if j <= a + c + i:
        return lead * (first + second)
    return lead * second


def closed_form_table(p: FatPointParams, field: FieldSpec = DEFAULT_FIELD) -> BettiTable:
    """All nonzero closed-form values; ``i`` ranges over ``0..n-1``."""
    entries = {}
    for i in range(p.n):
        for j in range(i + p.c, i + p.b + p.c + 1):
            v = betti_closed_form(p, i, j, field)
            if v:
                entries[(i, j)] = v
    return BettiTable(entries, field, p.n)
