import json

import pytest

from tropkit import cli, io


LINE = {"n": 2, "terms": [{"exp": [0, 0], "coeff": "0"},
                          {"exp": [1, 0], "coeff": "0"},
                          {"exp": [0, 1], "coeff": "0"}]}
CONIC = {"n": 2, "terms": [{"exp": [0, 0], "coeff": "0"},
                           {"exp": [1, 0], "coeff": "-1"},
                           {"exp": [0, 1], "coeff": "-1"},
                           {"exp": [2, 0], "coeff": "-4"},
                           {"exp": [1, 1], "coeff": "-3"},
                           {"exp": [0, 2], "coeff": "-4"}]}
THETA = {"vertices": ["a", "b"],
         "edges": [{"u": "a", "v": "b", "len": "2"},
                   {"u": "a", "v": "b", "len": "3"},
                   {"u": "a", "v": "b", "len": "5"}]}
K_THETA = {"entries": [{"at": "a", "c": 1}, {"at": "b", "c": 1}]}


def _write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_eval(tmp_path, capsys):
    poly = _write(tmp_path, "line.json", LINE)
    assert cli.run(["eval", poly, "--at", "3,4"]) == 0
    assert capsys.readouterr().out == "4\n"


def test_eval_rejects_decimal(tmp_path, capsys):
    poly = _write(tmp_path, "line.json", LINE)
    assert cli.run(["eval", poly, "--at", "3.5,4"]) == 2
    assert "error" in capsys.readouterr().err


def test_curve_roundtrip_through_intersect(tmp_path, capsys):
    poly1 = _write(tmp_path, "line.json", LINE)
    poly2 = _write(tmp_path, "conic.json", CONIC)
    c1 = str(tmp_path / "c1.json")
    c2 = str(tmp_path / "c2.json")
    assert cli.run(["curve", poly1, "-o", c1]) == 0
    assert cli.run(["curve", poly2, "-o", c2]) == 0
    # round-trip: the emitted JSON re-reads to an identical structure
    data = json.loads(open(c1).read())
    assert io.curve_to_json(io.curve_from_json(data)) == data
    assert cli.run(["intersect", c1, c2]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["total"] == 2


def test_curve_svg(tmp_path):
    poly = _write(tmp_path, "line.json", LINE)
    svg = tmp_path / "line.svg"
    assert cli.run(["curve", poly, "--svg", str(svg), "--bbox=-3,-3,3,3",
                    "-o", str(tmp_path / "c.json")]) == 0
    text = svg.read_text()
    assert text.startswith("<?xml")
    # determinism: a second render is byte-identical
    svg2 = tmp_path / "line2.svg"
    cli.run(["curve", poly, "--svg", str(svg2), "--bbox=-3,-3,3,3",
             "-o", str(tmp_path / "c2.json")])
    assert svg2.read_text() == text


def test_graph_ops(tmp_path, capsys):
    g = _write(tmp_path, "theta.json", THETA)
    D = _write(tmp_path, "K.json", K_THETA)
    assert cli.run(["graph", "genus", g]) == 0
    assert capsys.readouterr().out == "2\n"
    assert cli.run(["graph", "rank", g, D]) == 0
    assert capsys.readouterr().out == "1\n"
    assert cli.run(["graph", "rr-check", g, D]) == 0
    assert capsys.readouterr().out == "true\n"
    assert cli.run(["graph", "canonical", g]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"entries": [{"at": "a", "c": 1}, {"at": "b", "c": 1}]}
    assert cli.run(["graph", "reduce", g, D, "--base", "a"]) == 0
    json.loads(capsys.readouterr().out)


def test_graph_missing_argument(tmp_path, capsys):
    g = _write(tmp_path, "theta.json", THETA)
    assert cli.run(["graph", "rank", g]) == 2


def test_jacobian_ops(tmp_path, capsys):
    g = _write(tmp_path, "theta.json", THETA)
    assert cli.run(["jacobian", "period", g]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"genus": 2, "matrix": [["5", "2"], ["2", "7"]]}
    D = _write(tmp_path, "D.json",
               {"entries": [{"at": "a", "c": 1}, {"at": "b", "c": -1}]})
    assert cli.run(["jacobian", "abel-jacobi", g, D]) == 0
    json.loads(capsys.readouterr().out)


def test_jacobian_domain_error(tmp_path, capsys):
    g = _write(tmp_path, "theta.json", THETA)
    D = _write(tmp_path, "D.json", {"entries": [{"at": "a", "c": 1}]})
    assert cli.run(["jacobian", "abel-jacobi", g, D]) == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "domain"


def test_count(capsys):
    assert cli.run(["count", "--degree", "3", "--genus", "0"]) == 0
    assert capsys.readouterr().out == "12\n"
    assert cli.run(["count", "--degree", "2", "--genus", "0",
                    "--list-diagrams"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["count"] == 1 and len(out["diagrams"]) == 1


def test_count_degree_bound(capsys):
    assert cli.run(["count", "--degree", "7", "--genus", "0"]) == 1
    capsys.readouterr()
    assert cli.run(["count", "--degree", "7", "--genus", "15",
                    "--max-degree", "7"]) == 0


def test_moduli_cross_ratio(tmp_path, capsys):
    tree = _write(tmp_path, "tree.json", {
        "vertices": ["p", "q", "l1", "l2", "l3", "l4"],
        "edges": [{"u": "p", "v": "q", "len": "2"},
                  {"u": "p", "v": "l1", "len": "inf"},
                  {"u": "p", "v": "l2", "len": "inf"},
                  {"u": "q", "v": "l3", "len": "inf"},
                  {"u": "q", "v": "l4", "len": "inf"}]})
    assert cli.run(["moduli", "cross-ratio", tree]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 3
    assert {r["value"] for r in rows} == {"0", "2"}


def test_malformed_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert cli.run(["graph", "genus", str(bad)]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "input"


def test_unknown_subcommand():
    assert cli.run(["nosuch"]) == 2


def test_intersect_seed_changes_nothing(tmp_path, capsys):
    poly = _write(tmp_path, "line.json", LINE)
    c1 = str(tmp_path / "c1.json")
    cli.run(["curve", poly, "-o", c1])
    capsys.readouterr()
    outs = []
    for seed in ("0", "99"):
        assert cli.run(["intersect", c1, c1, "--seed", seed]) == 0
        outs.append(json.loads(capsys.readouterr().out))
    assert outs[0] == outs[1]
    assert outs[0]["total"] == 1
