"""Golden records for the command-line interface."""
from __future__ import annotations

import pytest
from click.testing import CliRunner

from ccrit.cli import main
from ccrit.formats import to_sparse6
from ccrit.graph import Multigraph, ekey
from ccrit.growback import GrowChoice, build
from ccrit.named import c3_box_c3, named_graph, petersen
from ccrit.search import parse_record


@pytest.fixture
def files(tmp_path):
    out = {}
    k33 = named_graph("K33")
    grown = build(k33, GrowChoice(frozenset(ekey(a, b) for a in (0, 1) for b in (3, 4, 5)), ((0, None), (1, 3)), ((3, "triangle"),))).graph
    for name, g in (("k5", named_graph("K5")), ("k33", k33), ("c3xc3", c3_box_c3()), ("petersen", petersen()), ("grown", grown)):
        p = tmp_path / f"{name}.s6"
        p.write_text(to_sparse6(g) + "\n")
        out[name] = str(p)
    el = tmp_path / "square.txt"
    el.write_text("n=4\n0-1\n1-2\n2-3\n3-0\n")
    out["square"] = str(el)
    return out


def run(*args: str):
    return CliRunner().invoke(main, list(args))


def records(text: str) -> list[dict[str, str]]:
    return [parse_record(ln) for ln in text.splitlines() if "=" in ln]


def test_cr_of_k5(files):
    r = run("cr", "--in", files["k5"])
    assert r.exit_code == 0
    (rec,) = records(r.output)
    assert rec["cr"] == "1" and rec["n"] == "5" and rec["m"] == "10" and rec["witness"] != "-"


def test_critical_c3xc3(files):
    r = run("critical", "--in", files["c3xc3"], "--k", "3", "--cap", "4")
    assert r.exit_code == 0
    assert "status=k-critical cr=3" in r.output


def test_critical_fails_with_exit_one(files):
    r = run("critical", "--in", files["k33"], "--k", "2")
    assert r.exit_code == 1 and "status=cr-too-low" in r.output


def test_v2n_petersen(files):
    r = run("v2n", "--in", files["petersen"])
    assert r.exit_code == 0 and "max_n=4 status=exact" in r.output


def test_v2n_undecided_exits_three(files):
    r = run("v2n", "--in", files["c3xc3"], "--budget", "1")
    assert r.exit_code == 3 and "status=undecided" in r.output


def test_usage_errors_exit_two(files):
    assert run("cr").exit_code == 2
    assert run("cr", "--in", files["k5"], "--format", "dot").exit_code == 2
    assert run("no-such-command").exit_code == 2


def test_edgelist_input(files):
    r = run("cr", "--in", files["square"], "--format", "edgelist")
    assert r.exit_code == 0 and "cr=0" in r.output


def test_bridges_of_k33(files):
    r = run("bridges", "--in", files["k33"], "--cycle", "0,3,1,4,2,5")
    assert r.exit_code == 0
    last = records(r.output)[-1]
    assert last["bridges"] == "3" and last["bipartite"] == "false"


def test_tiles_verify():
    r = run("tiles", "verify")
    assert r.exit_code == 0
    assert "tiles=42 pictures=13 failures=0 status=pass" in r.output


def test_family_gen_is_seeded():
    a = run("--seed", "4", "family", "gen", "--m", "1", "--sample", "2")
    b = run("--seed", "4", "family", "gen", "--m", "1", "--sample", "2")
    assert a.exit_code == 0 and a.output == b.output
    assert len(records(a.output)) == 2


def test_reduce_with_representatives(files):
    r = run("reduce", "--in", files["grown"], "--rep")
    assert r.exit_code == 0
    recs = records(r.output)
    assert recs[0]["status"] == "reduced" and recs[0]["invariants"] in ("-", "ok", "none", "0")
    cases = {x.get("case") for x in recs[1:]}
    assert "dog" in cases


def test_reduce_refuses_k34(tmp_path):
    p = tmp_path / "k34.s6"
    p.write_text(to_sparse6(named_graph("K34")) + "\n")
    r = run("reduce", "--in", str(p))
    assert r.exit_code == 1


def test_hugs_and_extend(files, tmp_path):
    g = named_graph("K33").with_edge(0, 1)
    p = tmp_path / "k33e.s6"
    p.write_text(to_sparse6(g) + "\n")
    r = run("hugs", "--in", str(p))
    assert r.exit_code == 0 and "status=i4c n=6 m=9" in r.output
    r = run("extend", "--in", files["k33"], "--limit", "3")
    assert r.exit_code == 3


def test_classify(files, tmp_path):
    p = tmp_path / "two.s6"
    k5 = named_graph("K5")
    two, mp = k5.disjoint_union(k5)
    from ccrit.graph import identify

    p.write_text(to_sparse6(identify(two, [(0, mp[0])])) + "\n")
    r = run("classify", "--in", str(p))
    assert "sporadic-13" in r.output


def test_sporadic_counts():
    r = run("sporadics")
    assert r.exit_code == 0
    assert "counts=sporadic-13:13,sporadic-36:36,four-K34*:4" in r.output


def test_search_writes_the_store_and_exits_undecided(tmp_path):
    store = str(tmp_path / "store")
    r = run("--store", store, "search-v8free", "--classes", "atlas", "--max-candidates", "2", "--extensions", "1", "--grow-tests", "1")
    assert r.exit_code == 3
    last = records(r.output)[-1]
    assert last["candidates"] == "2" and int(last["undecided"]) >= 1


def test_manifest(files, tmp_path):
    m = tmp_path / "run.txt"
    r = run("--seed", "7", "--manifest", str(m), "cr", "--in", files["k5"])
    assert r.exit_code == 0
    rec = dict(ln.split("=", 1) for ln in m.read_text().splitlines())
    assert rec["command"] == "cr" and rec["seed"] == "7"
    assert len(rec["result_digest"]) == 64
    assert rec[f"input.{files['k5']}"]
    again = tmp_path / "again.txt"
    run("--seed", "7", "--manifest", str(again), "cr", "--in", files["k5"])
    rec2 = dict(ln.split("=", 1) for ln in again.read_text().splitlines())
    assert rec2["result_digest"] == rec["result_digest"]
