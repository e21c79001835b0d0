import csv
import io
import json
from fractions import Fraction

import pytest

from pathramsey.cli import main
from pathramsey.graph import complete_graph, cycle_graph, path_graph, serialize_graph


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    def write(name, g):
        p = tmp_path / name
        p.write_text(serialize_graph(g))
        return str(p)

    return tmp_path, write


def test_color2_round_trip(files, capsys):
    tmp, write = files
    g = write("g.txt", path_graph(40))
    out = str(tmp / "c.txt")
    code, text, _ = run(["color2", "--n", "12", "-i", g, "-o", out, "--seed", "7"], capsys)
    assert code == 0 and "verdict: verified-safe" in text
    code, text, _ = run(["verify", "-i", g, "-c", out, "--mode", "exact"], capsys)
    assert code == 0 and text.startswith("verdict: verified-safe")


def test_color2_failure_exit_code(files, capsys):
    _, write = files
    g = write("k.txt", complete_graph(8))
    code, _, err = run(["color2", "--n", "6", "-i", g], capsys)
    assert code == 2 and "no verified 2-coloring" in err


def test_colorr_json(files, capsys):
    tmp, write = files
    g = write("g.txt", cycle_graph(30))
    code, text, _ = run(["colorr", "--r", "3", "--n", "10", "-i", g, "-o", str(tmp / "c.txt"), "--json"], capsys)
    assert code == 0 and json.loads(text)["verdict"] == "verified-safe"


def test_verify_refuted(files, capsys):
    tmp, write = files
    g = write("c6.txt", cycle_graph(6))
    col = tmp / "mono.txt"
    col.write_text("coloring 6 6 2 6\n" + "".join(f"{u} {v} 1\n" for u, v in cycle_graph(6).edges))
    code, text, _ = run(["verify", "-i", g, "-c", str(col)], capsys)
    assert code == 1 and "verdict: refuted" in text and "witness:" in text


def test_oracle_exit_codes(files, capsys):
    _, write = files
    assert run(["oracle", "-i", write("c5.txt", cycle_graph(5)), "--n", "3"], capsys)[0] == 1
    assert run(["oracle", "-i", write("p3.txt", path_graph(3)), "--n", "3"], capsys)[0] == 0
    assert run(["oracle", "-i", write("k7.txt", complete_graph(7)), "--n", "4"], capsys)[0] == 2


def test_gen_and_seed_override(capsys):
    _, a, _ = run(["gen", "gnm:N=10,M=12,seed=1"], capsys)
    _, b, _ = run(["gen", "gnm:N=10,M=12,seed=1", "--seed", "2"], capsys)
    _, c, _ = run(["gen", "gnm:N=10,M=12,seed=2"], capsys)
    assert a.startswith("graph 10 12") and b == c and a != b


def test_curve_minimum(capsys):
    code, text, err = run(["curve", "--from", "1.5", "--to", "3.0", "--step", "0.001"], capsys)
    rows = list(csv.DictReader(io.StringIO(text)))
    best = min(rows, key=lambda r: float(r["max"]))
    assert code == 0 and float(best["max"]) == 3.75
    assert abs(float(best["c"]) - 5 / 3) < 1e-4 and "minimum 3.750000" in err


def test_plane(capsys):
    code, text, _ = run(["plane", "--q", "3"], capsys)
    assert code == 0 and text.startswith("plane 3\n") and len(text.splitlines()) == 13
    code, _, err = run(["plane", "--q", "6"], capsys)
    assert code == 64 and "not a prime power" in err


def test_probe(capsys):
    code, text, _ = run(["probe", "--d", "3", "--n", "6", "--samples", "1", "--factors", "2"], capsys)
    assert code == 0 and text.splitlines()[0].startswith("d,N,sample")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["color2", "-i", "x"],
        ["color2", "--n", "5", "-i", "/no/such/file"],
        ["curve", "--step", "abc"],
        ["colorr", "--r", "1", "--n", "5", "-i", "-"],
        ["gen", "gnm:N=3,M=9"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv, capsys)[0] == 64


def test_bad_graph_file(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("graph 2 1\n0 0\n")
    code, _, err = run(["color2", "--n", "4", "-i", str(p)], capsys)
    assert code == 64 and "self-loop" in err


def test_seed_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("PATHRAMSEY_SEED", "5")
    _, a, _ = run(["gen", "gnm:N=10,M=12"], capsys)
    _, b, _ = run(["gen", "gnm:N=10,M=12", "--seed", "5"], capsys)
    assert a == b
    monkeypatch.setenv("PATHRAMSEY_SEED", "oops")
    assert run(["gen", "gnm:N=10,M=12"], capsys)[0] == 64
