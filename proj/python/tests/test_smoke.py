import json

import pytest

import weylalt


def test_adjoint_a4():
    elems = weylalt.alternation_set("A", 4, "highest-root", "neg-root:1:4")
    assert elems == ["1", "s1", "s2", "s3", "s4", "s1s3", "s1s4", "s2s3", "s2s4", "s3s2", "s2s3s2"]
    assert elems == weylalt.alternation_set("A", 4, "highest-root", "neg-root:1:4", naive=True)
    assert weylalt.bas("A", 4, mu="neg-root:1:4") == ["s1", "s2", "s3", "s4", "s2s3", "s3s2", "s2s3s2"]
    assert len(weylalt.independent_subsets("A", 4, mu="neg-root:1:4")) == 11


def test_json_document():
    doc = json.loads(weylalt.alternation_set_json("A", 4, mu="neg-root:1:4"))
    assert doc["size"] == 11
    assert doc["root_system"] == "A4"


def test_multiplicities():
    assert weylalt.multiplicity("A", 2, mu="zero") == 2
    assert weylalt.multiplicity("D", 4, mu="zero") == 4
    assert weylalt.q_multiplicity("A", 3, mu="neg-root:1:1") == "q^4 + q^3 - q"
    assert weylalt.kostant_partition("A", 3, "highest-root") == 4


def test_type_a():
    assert len(weylalt.catalog_bas(5, 2, 4)) == 10
    assert weylalt.catalog_bas(1, 1, 1) == []
    assert weylalt.x_sequences(3) == [[0, 0, 0], [0, 0, 1], [0, 2, 0], [1, 0, 0], [1, 0, 1]]
    assert weylalt.psi(3, [1, 0, 1]) == "s1s3"
    assert [weylalt.fibonacci(n) for n in range(7)] == [0, 1, 1, 2, 3, 5, 8]
    assert weylalt.lucas(4) == 7
    assert [weylalt.h_value(r, 1) for r in range(1, 5)] == [1, 3, 5, 11]


def test_sweep_and_verify():
    rows = weylalt.count_sweep(5, 2)
    assert all(row["match"] for row in rows)
    assert weylalt.verify("recurrences", 7)["ok"]
    assert weylalt.verify("catalog", 5)["ok"]


def test_errors():
    with pytest.raises(ValueError):
        weylalt.alternation_set("A", 0)
    with pytest.raises(ValueError):
        weylalt.bas("A", 2, "zero", "highest-root")
    with pytest.raises(ValueError):
        weylalt.verify("nonsense")
