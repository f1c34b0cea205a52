"""CLI surface: exit codes, golden outputs, determinism."""

import io
import json
import sys
from contextlib import redirect_stderr, redirect_stdout

from switchkit.cli import run
from switchkit.graphio import emit_graph6
from switchkit.patterns import complete_graph, cycle_graph, pattern


def cli(argv, stdin=""):
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    out, err = io.StringIO(), io.StringIO()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            code = run(argv)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


C4 = emit_graph6(cycle_graph(4))
C5 = emit_graph6(cycle_graph(5))
NAE5 = "nae 5 5 1\n1 2 3 4 5\n"
NAE3 = "nae 3 3 1\n1 2 3\n"


def test_switch_c4_opposite_pair_gives_4k1():
    code, out, _ = cli(["switch", "--set", "0,2"], C4)
    assert code == 0
    assert out.strip() == emit_graph6(pattern("4k1"))


def test_switch_deterministic():
    a = cli(["switch", "--set", "1,3"], C5)
    b = cli(["switch", "--set", "1,3"], C5)
    assert a == b


def test_class_c4():
    code, out, _ = cli(["class"], C4)
    assert code == 0
    lines = out.split()
    assert len(lines) == 3


def test_upper_split_yes_and_witness():
    code, out, _ = cli(["upper", "split"], C4)
    assert code == 0
    verts = [int(t) for t in out.strip().split(",")]
    from switchkit.graph import switch
    from switchkit.split import is_split

    assert is_split(switch(cycle_graph(4), verts))


def test_upper_no_exit_code():
    k4 = emit_graph6(complete_graph(4))
    code, out, _ = cli(["upper", "bipartite-chain"], k4)
    assert code == 1 and out.strip() == "none"


def test_upper_enumerate_matches_oracle():
    code, out, _ = cli(["upper", "split", "--enumerate", "--json"], C4)
    assert code == 0
    sols = json.loads(out)["solutions"]
    assert sols == [[1], [2], [3], [1, 3], [1, 2, 3]]


def test_upper_oracle_flag_agrees():
    for g6 in (C4, C5):
        a = cli(["upper", "split"], g6)[0]
        b = cli(["upper", "split", "--oracle"], g6)[0]
        assert a == b


def test_lower_profile_output():
    p4 = emit_graph6(pattern("p4"))
    code, out, _ = cli(["lower", "chordal"], p4)
    assert code == 0
    assert out.strip() == "yes (1,1,1,1)"


def test_lower_no():
    code, out, _ = cli(["lower", "weakly-chordal"], C5)
    assert code == 1 and out.strip() == "no"


def test_lower_oracle_flag():
    code, out, _ = cli(["lower", "chordal", "--oracle"], C4)
    assert code == 1


def test_batch_mode_lines():
    batch = C4 + "\n" + C5 + "\n"
    code, out, _ = cli(["upper", "split", "--json"], batch)
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 2 and all(r["switchable"] for r in rows)


def test_oracle_command_free_family():
    code, out, _ = cli(["oracle", "lower", "free:c4,c5,c6"], emit_graph6(pattern("p4")))
    assert code == 0 and out.strip() == "yes"


def test_reduce_and_verify_p10():
    code, out, _ = cli(["reduce", "p10", "--json"], NAE5)
    assert code == 0
    payload = json.loads(out)
    assert payload["roles"]["num_vertices"] == 55
    code, out, _ = cli(["verify", "p10", "--assign", "1,0,0,0,0"], NAE5)
    assert code == 0 and out.strip() == "pattern-free"
    code, out, _ = cli(["verify", "p10", "--assign", "0,0,0,0,0"], NAE5)
    assert code == 1 and out.strip() == "pattern-found"


def test_verify_budget_exit_code():
    code, _, err = cli(["verify", "c7", "--assign", "1,0,0", "--budget", "10"], NAE3)
    assert code == 3 and "budget" in err


def test_too_large_exit_code():
    from switchkit.graph import Graph

    big = emit_graph6(Graph.empty(30))
    code, _, err = cli(["upper", "paw-free"], big)
    assert code == 3


def test_usage_error():
    code, _, _ = cli(["upper", "nonesuch"], C4)
    assert code == 2


def test_malformed_graph6():
    code, _, err = cli(["upper", "split"], "this is not graph6")
    assert code == 2


def test_patterns_listing_and_lookup():
    code, out, _ = cli(["patterns"])
    assert code == 0 and "paw" in out.split()
    code, out, _ = cli(["patterns", "paw"])
    assert code == 0 and out.strip() == emit_graph6(pattern("paw"))


def test_edge_format_input():
    code, out, _ = cli(["upper", "split", "--format", "edges"], "4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert code == 0


def test_reduce_roles_sidecar(tmp_path):
    path = tmp_path / "roles.json"
    code, out, _ = cli(["reduce", "c7", "--roles", str(path)], NAE3)
    assert code == 0
    roles = json.loads(path.read_text())
    assert roles["num_vertices"] == 199
    assert len(roles["clauses"][0]["B"]) == 8
