from __future__ import annotations

import json
import logging
import subprocess
import sys

import pytest

from bettisplit.betti import BettiTable, graded_betti
from bettisplit.cli import main
from bettisplit.errors import MalformedInputError
from bettisplit.formats import (
    parse_complex,
    parse_facet_list,
    parse_ideal,
    render_betti_table,
    render_complex,
    render_ideal,
)
from bettisplit.linalg import QQ

GOLDEN_IDEALS = ["equal_betti_not_cl.ideal", "equal_betti_stable.ideal", "split_noncl_I.ideal", "split_noncl_J.ideal", "split_noncl_K.ideal", "rp2_dual.ideal", "zero.ideal"]
GOLDEN_COMPLEXES = ["union_D.complex", "union_D1.complex", "union_D2.complex", "shellable_not_vd.complex", "rp2.complex"]


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_ideal_text_and_json():
    I = parse_ideal("ring 6\nx4*x5*x6, x1*x2*x6, x1x3x4")
    assert len(I.gens) == 3 and I.n == 6
    assert parse_ideal("ring 3\nx1^2").gens == ((2, 0, 0),)
    assert parse_ideal("ring 2\n").is_zero


def test_parse_ideal_minimalizes_with_warning(caplog):
    with caplog.at_level(logging.WARNING):
        I = parse_ideal('{"n": 2, "gens": [[1, 0], [1, 1]]}')
    assert I.gens == ((1, 0),)
    assert "not minimal" in caplog.text


@pytest.mark.parametrize("text", ["ring 2\nx3", "ring 2\nx1^", "x1", "ring 2\nx1+x2", '{"n": 2}'])
def test_parse_ideal_errors(text):
    with pytest.raises(MalformedInputError):
        parse_ideal(text)


def test_parse_complex_keeps_given_order(fixture_path):
    n, facets = parse_facet_list(fixture_path("shellable_not_vd.complex").read_text())
    assert n == 12 and facets[0] == (2, 3, 4) and facets[-1] == (10, 11, 12) and len(facets) == 32


def test_parse_complex_enforces_antichain(caplog):
    with caplog.at_level(logging.WARNING):
        D = parse_complex("vertices 3\n[1,2] [1]")
    assert D.facets == ((1, 2),)
    assert "antichain" in caplog.text


@pytest.mark.parametrize("name", GOLDEN_IDEALS)
def test_ideal_round_trip(load_ideal, name):
    I = load_ideal(name)
    assert parse_ideal(render_ideal(I)) == I


@pytest.mark.parametrize("name", GOLDEN_COMPLEXES)
def test_complex_round_trip(load_complex, name):
    D = load_complex(name)
    assert parse_complex(render_complex(D)) == D


def test_render_formats(load_ideal):
    T = graded_betti(load_ideal("split_noncl_I.ideal"), QQ)
    assert render_betti_table(T, "resolution") == "0 -> R(-6) -> R(-5)^3 -> R(-3)^3 -> I\n"
    assert render_betti_table(T, "csv") == "i,j,beta\n0,3,3\n1,5,3\n2,6,1\n"
    doc = json.loads(render_betti_table(T, "json"))
    assert doc["entries"] == [[0, 3, 3], [1, 5, 3], [2, 6, 1]] and doc["field"] == 0
    assert render_betti_table(T, "triangle").splitlines()[0].split() == ["0", "1", "2"]
    with pytest.raises(MalformedInputError):
        render_betti_table(T, "latex")


def test_zero_table_sentinel():
    Z = BettiTable({}, QQ, 3)
    for fmt in ("triangle", "resolution", "csv"):
        assert render_betti_table(Z, fmt) == "zero ideal\n"
    assert json.loads(render_betti_table(Z, "json"))["zero_ideal"] is True


def test_cli_betti(capsys, fixture_path):
    code, out, _ = run(capsys, "betti", fixture_path("rp2_dual.ideal"), "--field", "0", "--format", "csv")
    assert code == 0 and out == "i,j,beta\n0,3,10\n1,4,15\n2,5,6\n"
    code, out, _ = run(capsys, "betti", fixture_path("zero.ideal"))
    assert code == 0 and out == "zero ideal\n"


def test_cli_jobs_byte_stable(capsys, fixture_path):
    outputs = set()
    for jobs in (1, 2):
        for fmt in ("triangle", "json"):
            code, out, _ = run(capsys, "betti", fixture_path("equal_betti_not_cl.ideal"), "--format", fmt, "--jobs", jobs)
            outputs.add((fmt, out))
    assert len(outputs) == 2
    _, a, _ = run(capsys, "split", "search", fixture_path("split_noncl_I.ideal"), "--field", "0")
    _, b, _ = run(capsys, "split", "search", fixture_path("split_noncl_I.ideal"), "--field", "0", "--jobs", "2")
    assert a == b


def test_cli_split_commands(capsys, fixture_path):
    I, J, K = (fixture_path(f"split_noncl_{x}.ideal") for x in "IJK")
    code, out, _ = run(capsys, "split", "verify", I, J, K, "--field", "0")
    assert code == 0 and out.startswith("Betti splitting: yes")
    code, out, _ = run(capsys, "split", "verify", I, J, J, "--field", "0")
    assert code == 2
    code, out, _ = run(capsys, "split", "search", fixture_path("rp2_dual.ideal"), "--field", "0")
    assert code == 0 and out == "0/511 partitions split\n"
    code, out, _ = run(capsys, "split", "xi", fixture_path("rp2_dual.ideal"), "--var", "1", "--field", "0")
    assert code == 1 and "Betti splitting: no" in out


def test_cli_complex_commands(capsys, fixture_path):
    code, out, _ = run(capsys, "complex", "shelling", fixture_path("shellable_not_vd.complex"), "--order", "given")
    assert code == 0 and "yes" in out
    code, out, _ = run(capsys, "complex", "shelling", fixture_path("rp2.complex"))
    assert code == 1 and out == "shellable: no\n"
    code, out, _ = run(capsys, "complex", "vd", fixture_path("rp2.complex"))
    assert code == 1
    code, out, _ = run(capsys, "complex", "scm", fixture_path("rp2.complex"), "--field", "2")
    assert code == 1
    code, out, _ = run(capsys, "complex", "scm", fixture_path("rp2.complex"), "--field", "0")
    assert code == 0
    code, out, _ = run(capsys, "complex", "dual", fixture_path("rp2.complex"))
    assert code == 0 and out == fixture_path("rp2_dual.ideal").read_text()
    D, D1, D2 = (fixture_path(f"union_{x}.complex") for x in ("D", "D1", "D2"))
    code, out, _ = run(capsys, "complex", "union-split", D, D1, D2, "--field", "0")
    assert code == 0


def test_cli_fatpoints(capsys):
    code, out, _ = run(capsys, "fatpoints", "compare", "--n", 4, "--a", 1, "--b", 1, "--c", 2)
    assert code == 0 and out == "closed-form == recursion == direct: OK\n"
    code, out, err = run(capsys, "fatpoints", "split", "--n", 4, "--a", 2, "--b", 2, "--c", 2)
    assert code == 2 and out == "" and "x1*x4^2" in err
    code, out, _ = run(capsys, "fatpoints", "ideal", "--n", 4, "--a", 1, "--b", 1, "--c", 1)
    assert code == 0 and out.startswith("ring 4\n")


def test_cli_errors_go_to_stderr(capsys, tmp_path):
    bad = tmp_path / "bad.ideal"
    bad.write_text("ring 2\nx7")
    code, out, err = run(capsys, "betti", bad)
    assert code == 2 and out == "" and "x7" in err
    code, _, _ = run(capsys, "betti", tmp_path / "missing.ideal")
    assert code == 2


def test_cli_resource_cap_exit_code(capsys, tmp_path):
    from itertools import combinations

    n = 8
    gens = ["*".join(f"x{v}" for v in c) for c in combinations(range(1, n + 1), 2)][:21]
    f = tmp_path / "many.ideal"
    f.write_text(f"ring {n}\n" + ", ".join(gens))
    code, _, err = run(capsys, "split", "search", f)
    assert code == 3 and "bound" in err


def test_module_entry_point(fixture_path):
    proc = subprocess.run(
        [sys.executable, "-m", "bettisplit", "betti", str(fixture_path("split_noncl_I.ideal")), "--format", "resolution"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "0 -> R(-6) -> R(-5)^3 -> R(-3)^3 -> I\n"
