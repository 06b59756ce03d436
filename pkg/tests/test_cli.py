import io
import json

import pytest

from kempeideal.cli import run

F = '{"classes": [[1, 5], [2, 6], [3, 4]]}'
G_EQ = '{"classes": [[1, 3, 5], [2, 6], [4]]}'
G_NEQ = '{"classes": [[1, 6], [2, 4], [3, 5]]}'
PRISM = json.dumps({"vertices": 6, "edges": [[1, 2], [2, 3], [1, 3], [1, 4], [2, 5], [3, 6],
                                             [4, 5], [4, 6], [5, 6]]})


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    text = out.getvalue()
    return code, (json.loads(text) if text.startswith(("{", "[")) else text)


def test_equiv():
    assert call("equiv", "--graph", "prism-minus-edge", "--f", F, "--g", G_EQ) == (0, {"equivalent": True})
    assert call("equiv", "--graph", PRISM, "--f", F, "--g", G_NEQ) == (0, {"equivalent": False})


def test_hilbert():
    code, out = call("hilbert", "--graph", "prism", "--max-k", "5")
    assert code == 0 and out["hilbert"] == [1, 13, 49, 65, 64, 64]


def test_sequence_trivial_and_nontrivial():
    code, out = call("sequence", "--graph", "prism", "--f", F, "--g", F)
    assert code == 0 and out["length"] == 1
    code, out = call("sequence", "--graph", "prism-minus-edge", "--f", F, "--g", G_EQ)
    assert code == 0 and out["sequence"][0] == json.loads(F) and out["sequence"][-1]["classes"] == [[4], [2, 6], [1, 3, 5]]
    code, out = call("sequence", "--graph", "prism", "--f", F, "--g", G_NEQ)
    assert out == {"equivalent": False, "sequence": None}


def test_sequence_roundtrips_through_verify(tmp_path):
    _, out = call("sequence", "--graph", "prism-minus-edge", "--f", F, "--g", G_EQ)
    path = tmp_path / "seq.json"
    path.write_text(json.dumps(out["sequence"]))
    assert call("oracle", "verify", "--graph", "prism-minus-edge", "--seq", str(path)) == \
        (0, {"valid": True, "first_failure": None})


def test_graph_from_file(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(PRISM)
    code, out = call("stable-sets", "--graph", str(path))
    assert code == 0 and out["count"] == 13 and out["stable_sets"][7] == [1, 5]


def test_reps_and_classes():
    code, out = call("reps", "--graph", "prism", "--k", "3")
    assert out["standard_monomials"] == 65 and len(out["full_reps"]) == 2
    for method in "ab":
        code, out = call("classes", "--graph", "prism", "--k", "3", "--method", method)
        assert code == 0 and out["count"] == 2
    assert call("oracle", "classes", "--graph", "prism", "--k", "3")[1]["count"] == 2


def test_class_of():
    code, out = call("class-of", "--graph", "prism-minus-edge", "--coloring", F)
    assert {"classes": [[4], [2, 6], [1, 3, 5]]} in out["class"]
    assert call("class-of", "--graph", "prism", "--coloring", F, "--k", "4")[0] == 1


def test_ideal_and_groebner():
    code, out = call("ideal", "--graph", "P3", "--which", "L", "--groebner")
    assert code == 0
    assert [g["text"] for g in out["generators"]] == ["x{1}*x{3} - x{1,3}*x{}"]
    direct = call("groebner", "--graph", "prism", "--which", "K")[1]
    alt = call("groebner", "--graph", "prism", "--method", "algorithm1")[1]
    assert direct == alt and direct["size"] == 47
    assert call("groebner", "--graph", "prism", "--which", "J", "--method", "algorithm1")[0] == 1


def test_kempe_basis():
    code, out = call("kempe-basis", "--graph", "P3")
    assert code == 0 and len(out["entries"]) == 1 and len(out["entries"][0]["sequence"]) == 2


def test_explicit_order():
    sets = [[], [1], [2], [3], [4], [5], [6], [1, 5], [1, 6], [2, 4], [2, 6], [3, 4], [3, 5]]
    code, out = call("hilbert", "--graph", "prism", "--max-k", "3", "--order", json.dumps(sets[::-1]))
    # x_{} is not smallest, but the Hilbert function does not depend on the order
    assert code == 0 and out["hilbert"] == [1, 13, 49, 65]
    assert call("hilbert", "--graph", "prism", "--max-k", "3", "--order", json.dumps(sets[1:]))[0] == 1


@pytest.mark.parametrize("argv", [
    ["equiv", "--graph", '{"vertices": 3, "edges": [[1,2],', "--f", F, "--g", F],
    ["equiv", "--graph", "prism", "--f", '{"classes": [[1, 2], [3]]}', "--g", F],
    ["equiv", "--graph", "prism", "--f", F, "--g", '{"classes": [[1, 5], [2, 6], [3, 4], []]}'],
    ["stable-sets", "--graph", "/nonexistent/graph.json"],
    ["stable-sets", "--graph", '{"vertices": 2, "edges": [[1, 3]]}'],
    ["paper-suite", "--only", "nonsense"],
])
def test_domain_errors_exit_1(argv, capsys):
    assert run(argv, io.StringIO()) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_malformed_json_reports_location(capsys):
    run(["stable-sets", "--graph", '{"vertices": 3,\n "edges": [[1,2],'], io.StringIO())
    assert "line 2, column" in capsys.readouterr().err


def test_resource_cap_exit_2():
    assert run(["oracle", "classes", "--graph", "twelve", "--k", "3"], io.StringIO()) == 2
    assert run(["oracle", "equiv", "--graph", "prism", "--f", F, "--g", F,
                "--oracle-max-vertices", "5"], io.StringIO()) == 2


def test_regression_suite():
    code, out = call("paper-suite")
    assert code == 0 and out["passed"]
    assert {i["name"] for i in out["items"]} >= {"stable-sets", "equiv", "reps", "hilbert", "classes", "chain"}
    code, out = call("paper-suite", "--only", "hilbert")
    assert [i["name"] for i in out["items"]] == ["hilbert"]


def test_text_format():
    code, out = call("paper-suite", "--only", "hilbert", "--format", "text")
    assert code == 0 and "PASS hilbert" in out
    code, out = call("reps", "--graph", "prism", "--k", "3", "--format", "text")
    assert "{1,5} {2,6} {3,4}" in out


def test_output_is_deterministic():
    a = call("groebner", "--graph", "prism-minus-edge")[1]
    b = call("groebner", "--graph", "prism-minus-edge")[1]
    assert json.dumps(a) == json.dumps(b)
