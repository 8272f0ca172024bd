import os
from fractions import Fraction
from pathlib import Path

import pytest

import blossomcert as bc

DATA = Path(os.environ.get("BLOSSOMCERT_DATA", Path(__file__).resolve().parents[2] / "data"))


def path4():
    return bc.Instance(4, [(1, 2, 5), (2, 3, 1), (3, 4, 5)])


def test_solve_path4_snapshots():
    run = bc.solve(path4())
    assert run["status"] == "perfect-found"
    assert [s["weight"] for s in run["snapshots"]] == ["0", "1", "10"]
    assert run["snapshots"][1]["matching"] == [[2, 3]]
    assert run["snapshots"][1]["certificate"]["gamma"] == "1"


def test_weights_accept_fractions_and_strings():
    inst = bc.Instance(3, [(1, 2, Fraction(-5, 2)), (2, 3, "7/2")])
    run = bc.solve(inst)
    assert run["shift"] == "5/2"
    assert run["snapshots"][1]["weight"] == "0"
    assert bc.fraction(run["snapshots"][1]["original_weight"]) == Fraction(-5, 2)
    with pytest.raises(TypeError):
        bc.Instance(2, [(1, 2, 1.5)])


def test_verify_and_oracle_agree():
    inst = bc.read_instance(str(DATA / "three_forests.txt"))
    run = bc.solve(inst)
    assert bc.verify(inst, run)["pass"] is True
    table = bc.oracle(inst)
    assert table["nu"] == 4
    assert [e["min_weight"] for e in table["by_cardinality"]] == [
        s["weight"] for s in run["snapshots"]
    ]


def test_scripted_run_fails_verification():
    inst = bc.figure2_instance()
    run = bc.solve(inst, scripted=[[1, 1, 3]])
    assert run["snapshots"][4]["weight"] == "4"
    verdict = bc.verify(inst, run)
    assert verdict["pass"] is False
    assert any(v["constraint"] == "cs_exposed_node" for v in verdict["violations"])
    with pytest.raises(bc.InfeasibleDualUpdate):
        bc.solve(inst, scripted=[[3, 3, 3]])


def test_counterexample_report():
    report = bc.compare_dual_policies(bc.figure2_instance(), [1, 1, 3])
    assert report["divergence"] == {"k": 4, "scripted_weight": "4", "oracle_weight": "3"}
    assert bc.compare_dual_policies(bc.figure2_instance(), [1, 1, 1])["divergence"] is None


def test_reductions():
    assert bc.min_perfect_matching_weight(bc.doubled_graph(bc.Instance(2, [(1, 2, -5)]))) == -10
    assert bc.min_perfect_matching_weight(bc.parse_instance("p edge 3 1\ne 1 2 1\n")) is None

    inst = path4()
    comp = bc.auxiliary_completion(inst, bc.solve(inst), 1)
    assert comp["instance"].node_count == 6
    assert comp["matching"] == [[1, 5], [2, 3], [4, 6]]
    assert comp["verdict"]["pass"] is True


def test_input_errors():
    with pytest.raises(bc.ParseError):
        bc.parse_instance("p edge 2 1\ne 1 1 3\n")
    with pytest.raises(bc.InstanceError):
        bc.Instance(2, [(1, 2, 1), (2, 1, 1)])
    with pytest.raises(bc.OracleBudgetError):
        bc.oracle(bc.figure2_instance(), limit=4)
    with pytest.raises(ValueError):
        bc.solve(path4(), mode="sideways")
