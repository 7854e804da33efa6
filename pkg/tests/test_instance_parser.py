import json

import pytest
from hypothesis import given

from heptacol.Engine.engine_solver import Outcome, SolveStats, Status
from heptacol.GraphCore.graph_basic import build_graph
from heptacol.InstanceParser.emitter import emit_instance, emit_result, witness_line
from heptacol.InstanceParser.parser import Instance, parse_colouring, parse_instance
from heptacol.Recognition.recog_forbidden import PromiseViolation
from heptacol.aux.exceptions import (DuplicateEdge, DuplicateListLine, EmptyList, InstanceSyntaxError, LoopEdge,
                                     VertexOutOfRange)
from heptacol.aux.helpers import FULL_MASK, mask_of

from .strategies import promise_instances

K2 = "p lcol 2 1\ne 1 2\n"


def test_parse_edge():
    inst = parse_instance(K2)
    assert inst.graph == build_graph(2, [(0, 1)])
    assert inst.lists == [FULL_MASK, FULL_MASK]


def test_parse_list_line():
    inst = parse_instance(K2 + "l 1 13\n")
    assert inst.lists == [mask_of([1, 3]), FULL_MASK]


def test_comments_are_kept():
    inst = parse_instance("c first\nc   second line\n" + K2)
    assert inst.comments == ["first", "second line"]


def test_blank_lines_are_skipped():
    assert parse_instance("\n" + K2 + "\n\n").graph.m == 1


@pytest.mark.parametrize("text, line_no", [
    (K2 + "l 1 4\n", 3),
    (K2 + "l 1 31\n", 3),
    (K2 + "l 3 1\n", 3),
    ("e 1 2\np lcol 2 1\n", 1),
    ("p lcol 2 1\np lcol 2 1\n", 2),
    ("p lcol 2 1\ne 1 1\n", 2),
    ("p lcol 3 2\ne 1 2\ne 2 1\n", 3),
    ("p lcol 2 2\ne 1 2\n", 0),
    ("p lcol 2 x\n", 1),
    ("q 1 2\n", 1),
])
def test_syntax_errors_carry_line_numbers(text, line_no):
    with pytest.raises(InstanceSyntaxError) as err:
        parse_instance(text)
    assert err.value.line_no == line_no


@pytest.mark.parametrize("text, kind, line_no", [
    ("p lcol 2 1\ne 1 1\n", LoopEdge, 2),
    ("p lcol 2 1\ne 1 3\n", VertexOutOfRange, 2),
    (K2 + "l 0 1\n", VertexOutOfRange, 3),
    ("p lcol 3 2\ne 1 2\ne 2 1\n", DuplicateEdge, 3),
])
def test_edge_errors_keep_their_kind(text, kind, line_no):
    with pytest.raises(kind) as err:
        parse_instance(text)
    assert isinstance(err.value, InstanceSyntaxError)
    assert err.value.line_no == line_no


def test_duplicate_edge_names_the_pair():
    with pytest.raises(DuplicateEdge) as err:
        parse_instance("p lcol 3 2\ne 1 2\ne 2 1\n")
    assert err.value.edge == (1, 2)
    assert str(err.value) == "line 3: duplicate edge {1, 2}"


def test_duplicate_list_line():
    with pytest.raises(DuplicateListLine):
        parse_instance(K2 + "l 1 1\nl 1 2\n")


def test_empty_list():
    with pytest.raises(EmptyList):
        parse_instance(K2 + "l 2\n")


def test_missing_problem_line():
    with pytest.raises(InstanceSyntaxError):
        parse_instance("c nothing here\n")


def test_parse_colouring():
    assert parse_colouring("SAT\nv 1 1\nv 2 2\n", 2) == [1, 2]
    assert parse_colouring("v 2 3\nc note\nv 1 1", 2) == [1, 3]


@pytest.mark.parametrize("text", ["v 1 1\n", "v 1 1\nv 1 2\nv 2 1\n", "v 1 4\nv 2 1\n", "v 3 1\n"])
def test_bad_colourings(text):
    with pytest.raises(InstanceSyntaxError):
        parse_colouring(text, 2)


def test_emit_instance():
    g = build_graph(3, [(0, 1), (1, 2)])
    text = emit_instance(g, [FULL_MASK, mask_of([2, 3]), FULL_MASK], ["made by hand"])
    assert text == "c made by hand\np lcol 3 2\ne 1 2\ne 2 3\nl 2 23\n"


@given(promise_instances())
def test_emitted_instances_parse_back(instance):
    g, lists = instance
    parsed = parse_instance(emit_instance(g, lists))
    assert parsed == Instance(g, lists if lists is not None else [FULL_MASK] * g.n)


def test_emit_sat():
    outcome = Outcome(Status.SAT, colouring=(1, 2))
    assert emit_result(outcome) == "SAT\nv 1 1\nv 2 2\n"


def test_emit_unsat():
    assert emit_result(Outcome(Status.UNSAT)) == "UNSAT\n"


def test_emit_triangle_witness():
    outcome = Outcome(Status.INVALID, violation=PromiseViolation.triangle(0, 1, 2))
    assert emit_result(outcome) == "INVALID\nwitness triangle 1 2 3\n"
    assert witness_line(PromiseViolation.induced_p7(range(7))) == "witness induced_p7 1 2 3 4 5 6 7"


def test_emit_stats_lines():
    outcome = Outcome(Status.UNSAT, stats=SolveStats(branches=4, sat_instances=2))
    lines = emit_result(outcome, with_stats=True).splitlines()
    assert lines[0] == "UNSAT"
    assert "c stat branches 4" in lines
    assert "c stat sat_instances 2" in lines
    assert "c stat branches_survived 0" in lines


def test_emit_json():
    outcome = Outcome(Status.SAT, colouring=(1, 2), stats=SolveStats(branches=1, millis=3.25))
    record = json.loads(emit_result(outcome, "json"))
    assert record == {"status": "SAT", "colouring": [1, 2],
                      "stats": {"branches": 1, "branches_survived": 0, "propagations": 0, "sat_instances": 0,
                                "fallback_used": 0}}
    timed = json.loads(emit_result(outcome, "json", with_stats=True))
    assert timed["stats"]["millis"] == 3.25


def test_emit_json_witness():
    outcome = Outcome(Status.INVALID, violation=PromiseViolation.breach("no anchor", (4,)))
    record = json.loads(emit_result(outcome, "json"))
    assert record["witness"] == {"kind": "structure_breach", "vertices": [5], "note": "no anchor"}


def test_emit_rejects_unknown_format():
    with pytest.raises(ValueError):
        emit_result(Outcome(Status.UNSAT), "xml")
