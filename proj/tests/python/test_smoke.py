import pytest

import boxram


def test_counts():
    assert boxram.surjection_count(3, 2) == 6
    assert [boxram.omega_box_degree(d) for d in range(1, 6)] == [1, 3, 13, 75, 541]
    assert boxram.canonical_relation_count(2) == 8
    assert boxram.omega_box_degree(30) > 2**64


def test_structures():
    p3 = boxram.graph(3, [(0, 1), (1, 2)])
    assert boxram.validate_structure(p3)["size"] == 3
    assert len(boxram.automorphisms(p3)) == 2
    assert len(boxram.embeddings(boxram.graph(2, [(0, 1)]), p3)) == 4
    with pytest.raises(boxram.BoxramError):
        boxram.validate_structure({"signature": [{"name": "E", "arity": 2}], "size": 2, "relations": {"E": [[0, 5]]}})


def test_sim_classes_on_chain():
    point = boxram.linear_order(1)
    classes = boxram.sim_classes([point, point], boxram.linear_order(4))
    assert len(classes) == 3
    assert sum(c["member_count"] for c in classes) == 16


def test_ramsey_k6_k5():
    edge, tri = boxram.graph(2, [(0, 1)]), boxram.graph(3, [(0, 1), (0, 2), (1, 2)])
    k = lambda n: boxram.graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    assert boxram.ramsey_check(k(6), tri, edge)["verdict"] == "holds"
    r = boxram.ramsey_check(k(5), tri, edge)
    assert r["verdict"] == "fails"
    assert len(r["counterexample"]) == 10
    with pytest.raises(boxram.BudgetExceededError):
        raise boxram.BudgetExceededError("x")
    assert boxram.ramsey_check(k(6), tri, edge, budget=5)["verdict"] == "budget-exceeded"


def test_cli_round_trip():
    code, report, _ = boxram.run("surjections", "--d", 3, "--k", 2)
    assert code == 0
    assert report["verb"] == "surjections"
    code, report, err = boxram.run("frobnicate")
    assert code == 1 and report is None and err
