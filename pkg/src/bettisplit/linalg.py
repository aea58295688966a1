"""Exact rank computations over Q and over prime fields GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import MalformedInputError

DEFAULT_CHARACTERISTIC = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``characteristic == 0`` means exact rationals, otherwise GF(p)."""

    characteristic: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        p = self.characteristic
        if not isinstance(p, int) or isinstance(p, bool) or p < 0:
            raise MalformedInputError(f"invalid field characteristic {p!r}")
        if p != 0 and not _is_prime(p):
            raise MalformedInputError(f"GF({p}) is not a field: {p} is not prime")

    @classmethod
    def parse(cls, text) -> "FieldSpec":
        try:
            return cls(int(str(text).strip()))
        except ValueError as exc:
            raise MalformedInputError(f"invalid field specification {text!r}") from exc

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)
DEFAULT_FIELD = FieldSpec(DEFAULT_CHARACTERISTIC)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


def _rank_mod_p(rows: Iterable[Mapping[int, int]], p: int) -> int:
    # pivots[c] is a row whose leading column is c, scaled so that entry is 1
    pivots: dict = {}
    for raw in rows:
        row = {c: v % p for c, v in raw.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], p - 2, p)
                pivots[c] = {k: (v * inv) % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def _rank_rational(rows: Iterable[Mapping]) -> int:
    # Fraction-free elimination over Z; rank over Q equals rank over Z.
    pivots: dict = {}
    for raw in rows:
        row = _integral_row(raw)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = row
                break
            a, b = piv[c], row[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in row.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    new = {k: v // g for k, v in new.items()}
            row = new
    return len(pivots)


def _integral_row(raw: Mapping) -> dict:
    if all(type(v) is int for v in raw.values()):
        return {c: v for c, v in raw.items() if v}
    entries = {c: Fraction(v) for c, v in raw.items() if v}
    if not entries:
        return {}
    den = 1
    for v in entries.values():
        den = den * v.denominator // gcd(den, v.denominator)
    return {c: int(v * den) for c, v in entries.items()}


def sparse_rank(rows: Iterable[Mapping[int, int]], field: FieldSpec) -> int:
    """Rank of a matrix given as sparse rows ``{column: value}``."""
    if field.characteristic == 0:
        return _rank_rational(rows)
    return _rank_mod_p(rows, field.characteristic)


def matrix_rank(matrix: Sequence[Sequence], field: FieldSpec = DEFAULT_FIELD) -> int:
    """Exact rank of a dense matrix (list of rows) over ``field``.

    Entries may be ints or Fractions; over GF(p) they must be integers.
    """
    rows = []
    for r in matrix:
        row = {}
        for c, v in enumerate(r):
            if v:
                if field.characteristic and Fraction(v).denominator != 1:
                    raise MalformedInputError(f"entry {v!r} is not an element of {field}")
                row[c] = int(v) if field.characteristic else v
        rows.append(row)
    return sparse_rank(rows, field)
