from heptacol.Engine.engine_solver import Status
from heptacol.GraphCore.graph_basic import build_graph
from heptacol.TestKit.kit_generators import GenSpec
from heptacol.TestKit.kit_named import blownup_cycle, cycle
from heptacol.user.instance_stack import InstanceStack
from heptacol.user.lcol_cmds import (explain_promise, generate_instance, make_instance, oracle_outcome, promise_dot,
                                     solve_instance)


def test_instance_stack_names_instances():
    stack = InstanceStack()
    inst = make_instance("p lcol 2 1\ne 1 2\n")
    assert stack.add(inst) == "instance1"
    assert stack.add(inst, "k2") == "k2"
    stack.record("k2", solve_instance(inst))
    assert stack.get("k2") is inst
    assert stack.outcomes["k2"].status is Status.SAT
    stack.add(inst, "k2")
    assert "k2" not in stack.outcomes
    assert stack.get("missing") is None


def test_explain_components():
    # C5 on 1..5, C7 on 6..12 and an edge 13 - 14
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 7) for i in range(7)]
    edges += [(12, 13)]
    report = explain_promise(build_graph(14, edges))
    assert report["status"] == "OK"
    kinds = [c["kind"] for c in report["components"]]
    assert kinds == ["c5_skeleton", "blownup_c7", "bipartite"]
    assert report["components"][1]["classes"] == [[v] for v in range(6, 13)]
    assert report["components"][1]["cycle"][0] == 6


def test_explain_reports_witness():
    report = explain_promise(build_graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert report["status"] == "INVALID"
    assert report["witness"] == "witness triangle 1 2 3"


def test_explain_blowup_classes():
    report = explain_promise(blownup_cycle(7, 2))
    (component,) = report["components"]
    assert sorted(len(cls) for cls in component["classes"]) == [2] * 7


def test_promise_dot_needs_a_five_cycle():
    assert promise_dot(cycle(7)) is None
    assert promise_dot(cycle(5)).count(" -- ") == 5


def test_generated_instance_round_trip():
    text = generate_instance(GenSpec("blownup_c5", (2,) * 5, seed=4, list_prob=0.5))
    inst = make_instance(text)
    assert inst.graph.n == 10
    assert inst.comments[0].startswith("generated kind=blownup_c5")
    assert oracle_outcome(inst) is solve_instance(inst).status
