"""Monomials and monomial ideals.

A monomial in ``k[x1, ..., xn]`` is stored as a tuple of ``n`` nonnegative
exponents; ``(1, 0, 2)`` is ``x1*x3^2``.  A :class:`MonomialIdeal` stores its
minimal monomial generators in a canonical order, so two ideals compare equal
exactly when they are the same ideal of the same ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import AmbientMismatchError, MalformedInputError

Monomial = tuple  # tuple[int, ...]

# Exponents are treated as machine-width integers.
MAX_EXPONENT = 2**63 - 1


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    """True when the monomial ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def multiply(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def unit_monomial(n: int) -> Monomial:
    return (0,) * n


def variable(i: int, n: int) -> Monomial:
    """The monomial ``x_i`` (1-based) in ``n`` variables."""
    if not 1 <= i <= n:
        raise MalformedInputError(f"variable index {i} outside 1..{n}")
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def support(m: Monomial) -> frozenset:
    """1-based indices of the variables dividing ``m``."""
    return frozenset(k + 1 for k, e in enumerate(m) if e)


def format_monomial(m: Monomial) -> str:
    """Render as ``x1*x4^2``; the unit monomial renders as ``1``."""
    parts = []
    for k, e in enumerate(m):
        if e == 1:
            parts.append(f"x{k + 1}")
        elif e > 1:
            parts.append(f"x{k + 1}^{e}")
    return "*".join(parts) if parts else "1"


def _sort_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


def _check_monomial(m, n: int) -> Monomial:
    m = tuple(m)
    if len(m) != n:
        raise MalformedInputError(f"monomial {m} has {len(m)} exponents, expected {n}")
    for e in m:
        if not isinstance(e, int) or isinstance(e, bool):
            raise MalformedInputError(f"exponent {e!r} is not an integer")
        if e < 0:
            raise MalformedInputError(f"negative exponent in {m}")
        if e > MAX_EXPONENT:
            raise MalformedInputError(f"exponent {e} overflows a 64-bit integer")
    return m


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Build instances with :func:`minimalize` (or :meth:`from_generators`);
    the constructor itself checks that ``gens`` already is a divisibility
    antichain and puts it in canonical order.
    """

    n: int
    gens: tuple = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise MalformedInputError(f"ambient variable count must be positive, got {self.n!r}")
        gens = tuple(sorted({_check_monomial(g, self.n) for g in self.gens}, key=_sort_key))
        for a in gens:
            for b in gens:
                if a != b and divides(a, b):
                    raise MalformedInputError(
                        f"{format_monomial(a)} divides {format_monomial(b)}; generators are not minimal"
                    )
        object.__setattr__(self, "gens", gens)

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], n: int) -> "MonomialIdeal":
        return minimalize(gens, n)

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (unit_monomial(n),))

    def __contains__(self, m) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    @property
    def indeg(self) -> int:
        if not self.gens:
            raise ValueError("the zero ideal has no initial degree")
        return min(sum(g) for g in self.gens)

    @property
    def maxdeg(self) -> int:
        if not self.gens:
            raise ValueError("the zero ideal has no generators")
        return max(sum(g) for g in self.gens)

    def degrees(self) -> set:
        return {sum(g) for g in self.gens}

    def is_equigenerated(self) -> bool:
        return len(self.degrees()) == 1

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def used_variables(self) -> frozenset:
        out = set()
        for g in self.gens:
            out |= support(g)
        return frozenset(out)


def _trusted(n: int, gens) -> MonomialIdeal:
    ideal = object.__new__(MonomialIdeal)
    object.__setattr__(ideal, "n", n)
    object.__setattr__(ideal, "gens", tuple(sorted(gens, key=_sort_key)))
    return ideal


def _antichain(gens) -> list:
    kept = []
    for m in sorted(set(gens), key=sum):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return kept


def minimalize(gens: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    """The ideal generated by ``gens``, with its unique minimal generating set."""
    if not isinstance(n, int) or n < 1:
        raise MalformedInputError(f"ambient variable count must be positive, got {n!r}")
    checked = [_check_monomial(g, n) for g in gens]
    return _trusted(n, _antichain(checked))


def _same_ring(*ideals: MonomialIdeal) -> int:
    n = ideals[0].n
    for other in ideals[1:]:
        if other.n != n:
            raise AmbientMismatchError(f"ideals live in {n} and {other.n} variables")
    return n


def ideal_sum(J: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    n = _same_ring(J, K)
    return _trusted(n, _antichain(J.gens + K.gens))


def ideal_intersection(J: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    n = _same_ring(J, K)
    return _trusted(n, _antichain(lcm(a, b) for a in J.gens for b in K.gens))


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    result = ideals[0]
    for other in ideals[1:]:
        result = ideal_intersection(result, other)
    return result


def scale_by_monomial(m: Sequence[int], I: MonomialIdeal) -> MonomialIdeal:
    """The ideal ``m*I``; multiplying by a monomial preserves minimality."""
    m = _check_monomial(m, I.n)
    gens = [multiply(m, g) for g in I.gens]
    for g in gens:
        if max(g, default=0) > MAX_EXPONENT:
            raise MalformedInputError("exponent overflow while scaling")
    return _trusted(I.n, gens)


def colon_by_variable(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """The quotient ``I : x_i``."""
    k = i - 1
    if not 0 <= k < I.n:
        raise MalformedInputError(f"variable index {i} outside 1..{I.n}")
    gens = [tuple(e - 1 if (j == k and e > 0) else e for j, e in enumerate(g)) for g in I.gens]
    return _trusted(I.n, _antichain(gens))


def _monomials_of_degree(variables: Sequence[int], d: int, n: int):
    for combo in combinations_with_replacement(sorted(variables), d):
        exps = [0] * n
        for v in combo:
            exps[v - 1] += 1
        yield tuple(exps)


def power_of_subset_ideal(vars: Iterable[int], a: int, n: int) -> MonomialIdeal:
    """``(x_v : v in vars)^a``; ``a == 0`` gives the unit ideal, empty ``vars`` the zero ideal."""
    vars = sorted(set(vars))
    if a < 0:
        raise MalformedInputError(f"negative power {a}")
    for v in vars:
        if not 1 <= v <= n:
            raise MalformedInputError(f"variable index {v} outside 1..{n}")
    if a == 0:
        return MonomialIdeal.unit(n)
    return _trusted(n, list(_monomials_of_degree(vars, a, n)))


def degree_component(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """The ideal generated by all degree-``j`` monomials of ``I``."""
    if j < 0:
        raise MalformedInputError(f"negative degree {j}")
    out = set()
    everything = range(1, I.n + 1)
    for g in I.gens:
        d = sum(g)
        if d > j:
            continue
        for m in _monomials_of_degree(everything, j - d, I.n):
            out.add(multiply(g, m))
    return _trusted(I.n, out)


def partition_is_valid(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal) -> bool:
    """True iff ``G(I)`` is the disjoint union of ``G(J)`` and ``G(K)`` with both parts nonzero."""
    _same_ring(I, J, K)
    if J.is_zero or K.is_zero:
        return False
    gj, gk = set(J.gens), set(K.gens)
    return not (gj & gk) and gj | gk == set(I.gens)


def relabel(I: MonomialIdeal, mapping: dict, n: int | None = None) -> MonomialIdeal:
    """Rename variables: ``x_k`` becomes ``x_{mapping[k]}`` (1-based) in a ring of ``n`` variables.

    Variables of ``I`` missing from ``mapping`` must not occur in any generator.
    """
    n = I.n if n is None else n
    gens = []
    for g in I.gens:
        exps = [0] * n
        for k, e in enumerate(g):
            if not e:
                continue
            if k + 1 not in mapping:
                raise MalformedInputError(f"x{k + 1} occurs in {format_monomial(g)} but is not relabelled")
            target = mapping[k + 1]
            if not 1 <= target <= n:
                raise MalformedInputError(f"relabel target x{target} outside 1..{n}")
            exps[target - 1] += e
        gens.append(tuple(exps))
    return minimalize(gens, n)


def embed(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """View ``I`` in a ring with ``n >= I.n`` variables (new variables appended)."""
    if n < I.n:
        raise AmbientMismatchError(f"cannot embed {I.n} variables into {n}")
    return _trusted(n, [g + (0,) * (n - I.n) for g in I.gens])
