import json
import subprocess
import sys

from gray2.cli import main
from gray2.mates import find_adjunctions, pos_twocat, squares_over
from gray2.poset import ordinal_poset


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_shuffles(capsys):
    code, d = run_json(capsys, "shuffles", "1", "1")
    assert code == 0 and len(d["nodes"]) == 2 and len(d["edges"]) == 1
    code, d = run_json(capsys, "shuffles", "3", "2")
    assert len(d["nodes"]) == 10
    code, out, _ = run(capsys, "shuffles", "0", "5", "--format", "dot")
    assert out.count(";") == 1 and "->" not in out


def test_bound(capsys):
    code, _, err = run(capsys, "shuffles", "7", "1")
    assert code == 2 and "bound" in err
    code, _, _ = run(capsys, "--bound", "8", "shuffles", "7", "1")
    assert code == 0


def test_gray_dumps(capsys):
    code, d = run_json(capsys, "gray", "[1](0)", "[1](0)")
    assert d["summary"]["objects"] == 4
    two = [h for h in d["twocat"]["homs"]
           if len(h["category"]["morphisms"]) > len(h["category"]["objects"])]
    assert len(two) == 1
    _, a = run_json(capsys, "gray", "[0]()", "[2](1,0)")
    _, b = run_json(capsys, "cotensor", "[2](1,0)", "0")
    assert a["summary"] == b["summary"]
    _, c = run_json(capsys, "gray", " [1]( 1 )", "[1](0)")
    hom = next(h for h in c["twocat"]["homs"] if h["src"] == [0, 0] and h["tgt"] == [1, 1])
    assert len(hom["category"]["objects"]) == 4


def test_gray_lax_and_dot(capsys):
    code, out, _ = run(capsys, "gray", "[1](1)", "[1](0)", "--lax", "--format", "dot")
    assert code == 0 and out.startswith("digraph")


def test_parse_error(capsys):
    code, _, err = run(capsys, "gray", "[1](", "[0]")
    assert code == 2 and "parse" in err


def test_constructions(capsys):
    assert run_json(capsys, "phi", "[1](0)", "1")[1]["summary"]["objects"] == 2
    code, d = run_json(capsys, "nu", "[1](1)", "1")
    assert code == 0 and d["source"]["objects"] == 4
    code, d = run_json(capsys, "localize", "[2](0,0)", "[1](0)")
    assert code == 0 and d["iso_to_product"] and len(d["category"]["objects"]) == 6


def test_mates_files(capsys, tmp_path):
    X = pos_twocat([ordinal_poset(1), ordinal_poset(2)])
    f = tmp_path / "pos.json"
    f.write_text(json.dumps(X.to_json()))
    code, d = run_json(capsys, "mates", "find", str(f))
    adjs = find_adjunctions(X)
    assert code == 0 and d["count"] == len(adjs)
    t = next(a for a in adjs if a.A != a.B)
    sq = squares_over(X, t, t)[0]
    g = tmp_path / "sq.json"
    g.write_text(json.dumps({"ambient": {"twocat": X.to_json()}, "square": sq.to_json(),
                             "top_adj": t.to_json(), "bottom_adj": t.to_json()}))
    code, d = run_json(capsys, "mates", "mate", str(g))
    assert code == 0 and d["involution"] and d["mate"]["direction"] == "lax"


def test_verify_pass_and_stable(capsys):
    code, a, _ = run(capsys, "verify", "odot", "--no-timing", "--format", "json")
    assert code == 0
    _, b, _ = run(capsys, "verify", "odot", "--no-timing", "--format", "json")
    assert a == b
    assert json.loads(a)["status"] == "pass"


def test_verify_corrupt_has_witness(capsys):
    code, d = run_json(capsys, "verify", "odot", "--corrupt")
    assert code == 1 and d["status"] == "fail"
    assert all(not c["ok"] and c["witness"] for c in d["checks"])


def test_budget_exceeded_is_distinct(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "odot", "--budget", "50")
    assert code == 3 and "BUDGET-EXCEEDED" in out
    monkeypatch.setenv("GRAY2_BUDGET", "50")
    assert run(capsys, "verify", "odot")[0] == 3
    # the flag wins over the environment
    assert run(capsys, "verify", "odot", "--budget", "10000000")[0] == 0


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "gray2.cfg"
    cfg.write_text("# bounds\nbound = 7\nformat = json\nprobes = [1](1); [2](1,1)\n")
    code, out, _ = run(capsys, "shuffles", "7", "0", "--config", str(cfg))
    assert code == 0 and json.loads(out)["nodes"] == ["HHHHHHH"]
    code, out, _ = run(capsys, "shuffles", "7", "0", "--config", str(cfg), "--bound", "6")
    assert code == 2
    code, out, _ = run(capsys, "verify", "odot", "--config", str(cfg), "--no-timing")
    assert code == 0 and json.loads(out)["cardinalities"]["probes"] == 2
    cfg.write_text("colour = blue\n")
    assert run(capsys, "shuffles", "1", "1", "--config", str(cfg))[0] == 2


def test_unknown_probe(capsys):
    code, _, err = run(capsys, "verify", "odot", "--probes", "nope")
    assert code == 2 and "nope" in err


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "gray2", "shuffles", "2", "1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "3 shuffles" in r.stdout
