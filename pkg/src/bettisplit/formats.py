"""Text and JSON formats for ideals, complexes and Betti tables.

Ideal files::

    ring 6
    x4*x5*x6, x1*x2*x6
    x1x3x4            # '*' is optional, '#' starts a comment

or JSON ``{"n": 6, "gens": [[0,0,0,1,1,1], ...]}``.  Complex files::

    vertices 3
    [1,2]
    [2,3]

or JSON ``{"n": 3, "facets": [[1,2],[2,3]]}``.
"""

from __future__ import annotations

import json
import logging
import re

from .betti import BettiTable
from .complexes import SimplicialComplex, maximal_faces
from .errors import MalformedInputError
from .monomials import MonomialIdeal, format_monomial, minimalize

log = logging.getLogger(__name__)

FORMATS = ("triangle", "resolution", "csv", "json")
ZERO_SENTINEL = "zero ideal"


def _strip_comments(text: str) -> list:
    return [line.split("#", 1)[0].strip() for line in text.splitlines()]


def _parse_monomial(token: str, n: int) -> tuple:
    token = token.strip()
    if token == "1":
        return (0,) * n
    exps = [0] * n
    pos = 0
    compact = re.sub(r"\s+", "", token)
    while pos < len(compact):
        if compact[pos] == "*":
            pos += 1
            continue
        m = re.match(r"x(\d+)(\^(\d*))?", compact[pos:])
        if not m:
            raise MalformedInputError(f"cannot parse monomial {token!r}")
        k = int(m.group(1))
        if m.group(2) is not None:
            if not m.group(3):
                raise MalformedInputError(f"malformed exponent in {token!r}")
            e = int(m.group(3))
        else:
            e = 1
        if not 1 <= k <= n:
            raise MalformedInputError(f"unknown variable x{k} in a ring with {n} variables")
        exps[k - 1] += e
        pos += m.end()
    return tuple(exps)


def _report_minimalized(given: int, ideal: MonomialIdeal, what: str = "generators") -> None:
    if given != len(ideal.gens):
        log.warning("input %s were not minimal; kept %d of %d", what, len(ideal.gens), given)


def parse_ideal(text: str) -> MonomialIdeal:
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
            n = doc["n"]
            gens = [tuple(g) for g in doc["gens"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise MalformedInputError(f"invalid JSON ideal: {exc}") from exc
        if not isinstance(n, int) or isinstance(n, bool):
            raise MalformedInputError(f"invalid ring size {n!r}")
        ideal = minimalize(gens, n)
        _report_minimalized(len(gens), ideal)
        return ideal

    lines = [line for line in _strip_comments(text) if line]
    if not lines:
        raise MalformedInputError("empty ideal file")
    header = re.fullmatch(r"ring\s+(\d+)", lines[0])
    if not header:
        raise MalformedInputError(f"expected 'ring <n>' header, got {lines[0]!r}")
    n = int(header.group(1))
    if n < 1:
        raise MalformedInputError("ring must have at least one variable")
    tokens = [t for line in lines[1:] for t in line.split(",") if t.strip()]
    gens = [_parse_monomial(t, n) for t in tokens]
    ideal = minimalize(gens, n)
    _report_minimalized(len(gens), ideal)
    return ideal


def render_ideal(I: MonomialIdeal) -> str:
    body = ", ".join(format_monomial(g) for g in I.gens)
    return f"ring {I.n}\n" + (body + "\n" if body else "")


def _parse_vertex_list(chunk: str) -> tuple:
    items = [t for t in re.split(r"[\s,]+", chunk.strip()) if t]
    try:
        return tuple(int(t) for t in items)
    except ValueError as exc:
        raise MalformedInputError(f"bad facet {chunk!r}") from exc


def parse_facet_list(text: str) -> tuple:
    """``(n_vertices, facets in file order)``, without any normalisation."""
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
            return doc["n"], [tuple(f) for f in doc["facets"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise MalformedInputError(f"invalid JSON complex: {exc}") from exc
    lines = [line for line in _strip_comments(text) if line]
    if not lines:
        raise MalformedInputError("empty complex file")
    header = re.fullmatch(r"vertices\s+(\d+)", lines[0])
    if not header:
        raise MalformedInputError(f"expected 'vertices <n>' header, got {lines[0]!r}")
    facets = []
    for line in lines[1:]:
        if "[" in line:
            facets.extend(_parse_vertex_list(c) for c in re.findall(r"\[([^\]]*)\]", line))
        else:
            facets.append(_parse_vertex_list(line))
    return int(header.group(1)), facets


def parse_complex(text: str) -> SimplicialComplex:
    n, facets = parse_facet_list(text)
    maximal = maximal_faces(facets)
    if len(maximal) != len(facets):
        log.warning("input faces were not an antichain; kept %d of %d as facets", len(maximal), len(facets))
    return SimplicialComplex(n, maximal)


def render_complex(D: SimplicialComplex) -> str:
    lines = [f"vertices {D.n_vertices}"] + ["[" + ",".join(map(str, f)) + "]" for f in D.facets]
    return "\n".join(lines) + "\n"


def _triangle(T: BettiTable) -> str:
    cols = range(0, T.projdim + 1)
    regs = [j - i for i, j in T]
    rows = range(min(regs), max(regs) + 1)

    def cell(v):
        return str(v) if v else "."

    body = [["total:"] + [str(T.total(i)) for i in cols]]
    body += [[f"{r}:"] + [cell(T[i, i + r]) for i in cols] for r in rows]
    header = [""] + [str(i) for i in cols]
    table = [header] + body
    widths = [max(len(row[c]) for row in table) for c in range(len(header))]
    out = []
    for row in table:
        first = row[0].rjust(widths[0])
        rest = " ".join(v.rjust(w) for v, w in zip(row[1:], widths[1:]))
        out.append(f"{first} {rest}".rstrip())
    return "\n".join(out) + "\n"


def _resolution(T: BettiTable, target: str) -> str:
    terms = []
    for i in range(T.projdim, -1, -1):
        pieces = []
        for (a, j), v in T.items():
            if a != i:
                continue
            free = "R" if j == 0 else f"R(-{j})"
            pieces.append(free if v == 1 else f"{free}^{v}")
        terms.append(" + ".join(pieces) if pieces else "0")
    return "0 -> " + " -> ".join(terms) + f" -> {target}\n"


def render_betti_table(T: BettiTable, fmt: str = "triangle", target: str = "I") -> str:
    """``target`` names the resolved ideal in the ``resolution`` format."""
    if fmt not in FORMATS:
        raise MalformedInputError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    if fmt == "json":
        doc = {
            "field": T.field.characteristic,
            "n": T.n,
            "entries": [[i, j, v] for (i, j), v in T.items()],
        }
        if T.is_zero:
            doc["zero_ideal"] = True
        return json.dumps(doc, sort_keys=True) + "\n"
    if T.is_zero:
        return ZERO_SENTINEL + "\n"
    if fmt == "csv":
        return "i,j,beta\n" + "".join(f"{i},{j},{v}\n" for (i, j), v in T.items())
    if fmt == "resolution":
        return _resolution(T, target)
    return _triangle(T)
