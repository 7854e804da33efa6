"""Forbidden induced subgraphs of the promise class.

This file contains the following:
    * ViolationKind, PromiseViolation - witness values
    * is_triangle, is_induced_path - independent witness checks
    * find_triangle, find_induced_p7, check_promise
"""

import enum
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from ..GraphCore.graph_basic import Graph

LOG = logging.getLogger(__name__)


class ViolationKind(enum.Enum):
    TRIANGLE = "triangle"
    INDUCED_P7 = "induced_p7"
    STRUCTURE_BREACH = "structure_breach"


@dataclass(frozen=True)
class PromiseViolation:
    """
    Evidence that a graph lies outside the {P7, triangle}-free class, or
    that a structural check failed without a direct witness.

    attributes:
        kind (ViolationKind)
        vertices (tuple): ordered witness; empty for most breaches
        note (str): which check failed
    """

    kind: ViolationKind
    vertices: Tuple[int, ...] = ()
    note: str = ""

    @classmethod
    def triangle(cls, a: int, b: int, c: int, note: str = "") -> "PromiseViolation":
        return cls(ViolationKind.TRIANGLE, (a, b, c), note)

    @classmethod
    def induced_p7(cls, path: Sequence[int], note: str = "") -> "PromiseViolation":
        return cls(ViolationKind.INDUCED_P7, tuple(path), note)

    @classmethod
    def breach(cls, note: str, vertices: Sequence[int] = ()) -> "PromiseViolation":
        if not note:
            raise ValueError("a structure breach needs a note")
        return cls(ViolationKind.STRUCTURE_BREACH, tuple(vertices), note)

    def verify(self, graph: Graph) -> bool:
        """Independently confirm the witness against the graph."""
        if self.kind is ViolationKind.TRIANGLE:
            return is_triangle(graph, self.vertices)
        if self.kind is ViolationKind.INDUCED_P7:
            return len(self.vertices) == 7 and is_induced_path(graph, self.vertices)
        return bool(self.note)

    def relabel(self, ids: Sequence[int]) -> "PromiseViolation":
        """Map local vertex ids through ids (local i -> ids[i])."""
        return PromiseViolation(self.kind, tuple(ids[v] for v in self.vertices), self.note)


def is_triangle(graph: Graph, vertices: Sequence[int]) -> bool:
    if len(vertices) != 3 or len(set(vertices)) != 3:
        return False
    a, b, c = vertices
    return graph.has_edge(a, b) and graph.has_edge(b, c) and graph.has_edge(a, c)


def is_induced_path(graph: Graph, vertices: Sequence[int]) -> bool:
    """True iff the vertices, in order, induce exactly a path."""
    k = len(vertices)
    if len(set(vertices)) != k or any(not 0 <= v < graph.n for v in vertices):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            if graph.has_edge(vertices[i], vertices[j]) != (j == i + 1):
                return False
    return True


def find_triangle(graph: Graph) -> Optional[Tuple[int, int, int]]:
    """
    Return the lexicographically smallest triangle (u < v < w), or None
    if the graph is triangle-free.
    """
    for u in range(graph.n):
        higher = graph.neighbour_set(u).bits >> (u + 1) << (u + 1)
        for v in graph.adj[u]:
            if v <= u:
                continue
            common = higher & graph.neighbour_set(v).bits
            common = common >> (v + 1) << (v + 1)
            if common:
                w = (common & -common).bit_length() - 1
                return (u, v, w)
    return None


def _find_induced_path(graph: Graph, length: int) -> Optional[Tuple[int, ...]]:
    # depth-first extension; blocked holds the closed neighbourhoods of
    # every path vertex except the last one
    rows = [graph.neighbour_set(v).bits for v in range(graph.n)]

    def extend(path, blocked):
        if len(path) == length:
            return tuple(path) if path[0] < path[-1] else None
        last = path[-1]
        candidates = rows[last] & ~blocked
        next_blocked = blocked | rows[last] | (1 << last)
        while candidates:
            low = candidates & -candidates
            x = low.bit_length() - 1
            candidates ^= low
            path.append(x)
            found = extend(path, next_blocked)
            path.pop()
            if found:
                return found
        return None

    for start in range(graph.n):
        found = extend([start], 1 << start)
        if found:
            return found
    return None


def find_induced_p7(graph: Graph) -> Optional[Tuple[int, ...]]:
    """
    Return seven vertices inducing a path, in path order, or None if the
    graph is P7-free.

    The search runs on one representative per false-twin class: an
    induced P7 never holds two vertices with equal neighbourhoods, so the
    quotient has one iff the graph has one.
    """
    from .recog_twins import twin_quotient

    quotient, reps = twin_quotient(graph)
    path = _find_induced_path(quotient, 7)
    if path is None:
        return None
    return tuple(reps[v] for v in path)


def check_promise(graph: Graph) -> Optional[PromiseViolation]:
    """
    Return None iff the graph is triangle-free and P7-free, otherwise a
    verified witness.
    """
    tri = find_triangle(graph)
    if tri is not None:
        LOG.info("promise check: triangle %s", tri)
        return PromiseViolation.triangle(*tri)
    path = find_induced_p7(graph)
    if path is not None:
        LOG.info("promise check: induced P7 %s", path)
        return PromiseViolation.induced_p7(path)
    return None
