"""Command-line interface: subcommands, output formats, exit codes."""

import io
import json
import sys

import pytest

from mapscope.cli import main

FOUR_NODE_TREES = [
    "(3 (1) (1) (1))",
    "(2 (1) (1 (1)))",
    "(2 (1 (1)) (1))",
    "(1 (1 (1) (1)))",
    "(2 (2 (1) (1)))",
    "(1 (1 (1 (1))))",
]
FOUR_NODE_PERMS = ["1 2 3", "1 3 2", "2 1 3", "3 1 2", "2 3 1", "3 2 1"]


def run(argv, capsys, monkeypatch=None, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_trees(capsys):
    'Size-4 trees in enumeration order'
    code, out, err = run(["enumerate", "--object", "trees", "--size", "4"], capsys)
    assert code == 0
    assert out.splitlines() == FOUR_NODE_TREES
    assert err == ""


def test_enumerate_count_json(capsys):
    'Counting maps without listing them'
    code, out, _ = run(
        ["enumerate", "--object", "maps", "--size", "3", "--count-only",
         "--format", "json"],
        capsys,
    )
    assert code == 0
    assert json.loads(out) == {"count": 2}


def test_enumerate_perms_size_zero(capsys):
    'The empty permutation prints as "e"'
    code, out, _ = run(["enumerate", "--object", "perms", "--size", "0"], capsys)
    assert code == 0
    assert out == "e\n"


def test_enumerate_filters(capsys):
    'Tree-side predicates behind --filter'
    code, out, _ = run(
        ["enumerate", "--object", "trees", "--size", "5",
         "--filter", "two-face-free", "--count-only"],
        capsys,
    )
    assert (code, out) == (0, "6\n")
    code, out, _ = run(
        ["enumerate", "--object", "trees", "--size", "5",
         "--filter", "primitive", "--count-only"],
        capsys,
    )
    assert (code, out) == (0, "7\n")


def test_enumerate_size_guard(capsys):
    'Trees and maps need a positive size'
    code, out, err = run(["enumerate", "--object", "trees", "--size", "0"], capsys)
    assert code == 2
    assert out == ""
    assert err.startswith("mapscope:")


def test_size_cap_env(capsys, monkeypatch):
    'MAPSCOPE_MAX_SIZE clamps enumeration sizes'
    monkeypatch.setenv("MAPSCOPE_MAX_SIZE", "3")
    code, _, err = run(["enumerate", "--object", "trees", "--size", "4"], capsys)
    assert code == 2
    assert "MAPSCOPE_MAX_SIZE" in err


def test_biject_tree_to_perm(capsys, monkeypatch):
    'Trees stream through to their permutations'
    code, out, _ = run(
        ["biject", "--from", "tree", "--to", "perm"],
        capsys,
        monkeypatch,
        stdin="\n".join(FOUR_NODE_TREES) + "\n",
    )
    assert code == 0
    assert out.splitlines() == FOUR_NODE_PERMS


def test_biject_perm_to_tree(capsys, monkeypatch):
    'And back again'
    code, out, _ = run(
        ["biject", "--from", "perm", "--to", "tree"],
        capsys,
        monkeypatch,
        stdin="\n".join(FOUR_NODE_PERMS) + "\n",
    )
    assert code == 0
    assert out.splitlines() == FOUR_NODE_TREES


def test_biject_tree_to_map(capsys, monkeypatch):
    'The one-node tree is the single-edge map'
    code, out, _ = run(
        ["biject", "--from", "tree", "--to", "map"],
        capsys,
        monkeypatch,
        stdin="(1)\n",
    )
    assert code == 0
    assert json.loads(out) == {
        "n_darts": 2, "alpha": [1, 0], "sigma": [0, 1], "root": 0,
    }


def test_stats_perm(capsys, monkeypatch):
    'One key=value row per permutation'
    code, out, _ = run(
        ["stats", "--object", "perm"], capsys, monkeypatch, stdin="2 5 3 1 4\n"
    )
    assert code == 0
    assert out == (
        "perm=2 5 3 1 4 length=5 components=1 lr_maxima=2 m_occurrences=1 "
        "indecomposable=True in_class=True primitive=False\n"
    )


def test_stats_map(capsys, monkeypatch):
    'Map rows include face and separability data'
    line = '{"n_darts": 2, "alpha": [1, 0], "sigma": [0, 1], "root": 0}\n'
    code, out, _ = run(["stats", "--object", "map"], capsys, monkeypatch, stdin=line)
    assert code == 0
    assert "edges=1 vertices=2 faces=1 root_face_degree=2" in out
    assert "internal_2faces=0 nonseparable=True multiple_edges=False" in out


def test_series_text(capsys):
    'Text mode prints one coefficient per line, n = 1 upward'
    code, out, _ = run(["series", "--name", "b3", "--terms", "5"], capsys)
    assert code == 0
    assert out.splitlines() == ["1", "0", "1", "1", "5"]


def test_series_csv(capsys):
    'CSV mode pairs coefficients with the first-order estimate'
    code, out, _ = run(
        ["series", "--name", "b1", "--terms", "3", "--format", "csv"], capsys
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,coefficient,asymptotic,relative_error"
    assert lines[1] == "1,1,0.366451883927,0.633548"
    assert lines[2] == "2,0,0.388680918155,"
    assert lines[3] == "3,1,0.634713281491,0.365287"


def test_series_bad_terms(capsys):
    '--terms must be positive'
    code, _, err = run(["series", "--name", "a", "--terms", "0"], capsys)
    assert code == 2
    assert err.startswith("mapscope:")


def test_asympt_json(capsys):
    'Estimates serialize as strings to keep full precision'
    code, out, _ = run(
        ["asympt", "--name", "b2", "--at", "50", "--format", "json"], capsys
    )
    assert code == 0
    assert json.loads(out) == {
        "name": "b2", "n": 50, "estimate": "2.25499516757e+25",
    }


def test_verify_pass_exit0(capsys):
    'A green suite exits 0'
    code, out, _ = run(["verify", "--suite", "counts", "--max-size", "4"], capsys)
    assert code == 0
    assert out.startswith("counts: PASS (n_max=4)")


def test_verify_fail_exit1(capsys):
    'A suite with witnesses exits 1'
    code, out, _ = run(["verify", "--suite", "theorem5", "--max-size", "3"], capsys)
    assert code == 1
    assert out.startswith("theorem5: FAIL")
    assert "expected equal triple" in out


def test_verify_csv(capsys):
    'CSV summarizes one suite per row'
    code, out, _ = run(
        ["verify", "--suite", "counts", "--max-size", "4", "--format", "csv"],
        capsys,
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "suite,params,status,witnesses,runtime"
    assert lines[1].startswith("counts,n_max=4,pass,0,")


def test_verify_json(capsys):
    'JSON mode emits one report object per line'
    code, out, _ = run(
        ["verify", "--suite", "counts", "--max-size", "4", "--format", "json"],
        capsys,
    )
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "counts"
    assert report["status"] == "pass"
    assert report["witnesses"] == []


def test_missing_subcommand(capsys):
    'argparse rejects an empty command line'
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_bad_choice(capsys):
    'Unknown object kinds are rejected by the parser'
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--object", "widgets", "--size", "3"])
    assert exc.value.code == 2
