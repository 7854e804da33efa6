"""Instance and colouring file parser

Instance files carry one item per line:

    c <anything>          comment
    p lcol <n> <m>        problem line, exactly once, before any e/l line
    e <u> <v>             edge, 1-indexed, undirected, no duplicates
    l <v> <digits>        optional list, ascending non-empty digits over 1..3

Colouring files hold `v <id> <colour>` lines, optionally after a `SAT` line.

This file can also be imported as a module and contains the following
functions:
    * parse_instance - parses an instance file, returns Instance
    * parse_colouring - parses a colouring file for a graph of n vertices
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from pyparsing import (Group, Keyword, Optional as Opt, ParseException, StringEnd,
                       Word, nums, rest_of_line)

from ..GraphCore.graph_basic import Graph, build_graph
from ..aux.exceptions import (DuplicateEdgeLine, DuplicateListLine, EmptyList, InstanceSyntaxError, LoopEdgeLine,
                              VertexOutOfRangeLine)
from ..aux.helpers import FULL_MASK, mask_of

integer = Word(nums).set_parse_action(lambda t: int(t[0]))

comment_line = Keyword("c") + rest_of_line
problem_line = Group(Keyword("p").suppress() + Keyword("lcol").suppress() + integer("n") + integer("m"))
edge_line = Group(Keyword("e").suppress() + integer("u") + integer("v"))
list_line = Group(Keyword("l").suppress() + integer("v") + Opt(Word("123")("digits")))

instance_line = (comment_line("comment") | problem_line("problem")
                 | edge_line("edge") | list_line("lst")) + StringEnd()

sat_line = Keyword("SAT")
vertex_line = Group(Keyword("v").suppress() + integer("v") + integer("colour"))
colouring_line = (comment_line("comment") | sat_line("sat") | vertex_line("vertex")) + StringEnd()


@dataclass
class Instance:
    """
    A parsed instance.

    attributes:
        graph: the graph on vertices 0..n-1
        lists: colour mask per vertex
        comments: comment lines, without the leading 'c'
    """

    graph: Graph
    lists: List[int]
    comments: List[str] = field(default_factory=list, compare=False)


def _parse_line(grammar, line: str, line_no: int):
    try:
        return grammar.parse_string(line, parse_all=True)
    except ParseException as err:
        raise InstanceSyntaxError(line_no, f"cannot parse {line!r} ({err.msg})") from None


def _check_vertex(v: int, n: int, line_no: int) -> int:
    if not 1 <= v <= n:
        raise VertexOutOfRangeLine(line_no, v, n)
    return v - 1


def _list_mask(digits: str, line_no: int) -> int:
    if not digits:
        raise EmptyList(line_no, "empty colour list")
    if list(digits) != sorted(set(digits)):
        raise InstanceSyntaxError(line_no, f"colour list {digits!r} is not strictly ascending")
    return mask_of(int(d) for d in digits)


def parse_instance(text: str) -> Instance:
    """Parse a string in instance format.

    :param text: the instance file contents
    :returns: an Instance; vertices without an `l` line get the full list
    """
    header: Optional[Tuple[int, int]] = None
    edges = []
    seen_edges = set()
    lists = {}
    comments = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parsed = _parse_line(instance_line, line, line_no)
        if "comment" in parsed:
            comments.append(" ".join(parsed[1:]).strip())
            continue
        if "problem" in parsed:
            if header is not None:
                raise InstanceSyntaxError(line_no, "second problem line")
            header = (parsed.problem.n, parsed.problem.m)
            continue
        if header is None:
            raise InstanceSyntaxError(line_no, "missing problem line")
        n = header[0]
        if "edge" in parsed:
            u = _check_vertex(parsed.edge.u, n, line_no)
            v = _check_vertex(parsed.edge.v, n, line_no)
            if u == v:
                raise LoopEdgeLine(line_no, u + 1)
            key = (min(u, v), max(u, v))
            if key in seen_edges:
                raise DuplicateEdgeLine(line_no, key[0] + 1, key[1] + 1)
            seen_edges.add(key)
            edges.append(key)
        else:
            v = _check_vertex(parsed.lst.v, n, line_no)
            if v in lists:
                raise DuplicateListLine(line_no, f"second list line for vertex {v + 1}")
            digits = parsed.lst.digits or ""
            lists[v] = _list_mask(digits, line_no)

    if header is None:
        raise InstanceSyntaxError(0, "missing problem line")
    n, m = header
    if len(edges) != m:
        raise InstanceSyntaxError(0, f"problem line announces {m} edges, found {len(edges)}")
    graph = build_graph(n, edges)
    return Instance(graph, [lists.get(v, FULL_MASK) for v in range(n)], comments)


def parse_colouring(text: str, n: int) -> List[int]:
    """
    Parse `v <id> <colour>` lines into a colouring of vertices 0..n-1.

    Raises:
        InstanceSyntaxError: malformed line, repeated or missing vertex,
            colour outside 1..3
    """
    colouring = [0] * n
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parsed = _parse_line(colouring_line, line, line_no)
        if "vertex" not in parsed:
            continue
        v = _check_vertex(parsed.vertex.v, n, line_no)
        colour = parsed.vertex.colour
        if colour not in (1, 2, 3):
            raise InstanceSyntaxError(line_no, f"colour {colour} outside 1..3")
        if colouring[v]:
            raise InstanceSyntaxError(line_no, f"vertex {v + 1} coloured twice")
        colouring[v] = colour
    missing = [v + 1 for v, c in enumerate(colouring) if not c]
    if missing:
        raise InstanceSyntaxError(0, f"no colour for vertex {missing[0]}")
    return colouring
