"""False twins and blown-up seven-cycles.

This file contains the following:
    * false_twin_classes - partition by equal neighbourhoods
    * twin_quotient - induced subgraph on one representative per class
    * TwinDecomposition, recognize_blownup_c7
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from ..GraphCore.graph_basic import Graph, VertexSet
from .recog_forbidden import PromiseViolation

LOG = logging.getLogger(__name__)


def false_twin_classes(graph: Graph) -> List[VertexSet]:
    """
    Group vertices with identical neighbourhoods; classes are ordered by
    their smallest member.
    """
    groups = defaultdict(list)
    for v in range(graph.n):
        groups[graph.adj[v]].append(v)
    return sorted((VertexSet.of(g) for g in groups.values()), key=VertexSet.smallest)


def twin_quotient(graph: Graph) -> Tuple[Graph, Tuple[int, ...]]:
    """
    Return the subgraph induced by the smallest member of each twin class
    and the ascending tuple of those representatives.
    """
    reps = [cls.smallest() for cls in false_twin_classes(graph)]
    return graph.induced_subgraph(reps)


@dataclass(frozen=True)
class TwinDecomposition:
    """
    A blown-up C7: classes[i] is the stable class of cycle vertex
    representatives[i]; consecutive classes are completely joined.
    """

    classes: Tuple[VertexSet, ...]
    representatives: Tuple[int, ...]

    def class_of(self) -> dict:
        index = {}
        for i, cls in enumerate(self.classes):
            for v in cls:
                index[v] = i
        return index


def _p7_missing_join(cycle: Sequence[int], i: int, x: int, y: int) -> Tuple[int, ...]:
    # x in V_i and y in V_{i+1}, both off the cycle and non-adjacent
    return (x,) + tuple(cycle[(i - j) % 7] for j in range(1, 6)) + (y,)


def recognize_blownup_c7(graph: Graph, c7: Sequence[int]) -> Union[TwinDecomposition, PromiseViolation]:
    """
    Classify every vertex by its neighbours on the induced seven-cycle c7
    and confirm that the graph is the blow-up of c7.

    Requires a connected graph whose shortest odd cycle has length 7.
    Returns the decomposition, or the violation found first: a triangle,
    an induced P7 built as in the structural argument, or a breach whose
    note names an induced C5 when the length-7 precondition was wrong.
    """
    cycle = tuple(c7)
    if len(cycle) != 7:
        raise ValueError("c7 must list seven vertices")
    position = {v: i for i, v in enumerate(cycle)}
    label = {v: i for i, v in enumerate(cycle)}
    on_cycle = set(cycle)

    for x in range(graph.n):
        if x in on_cycle:
            continue
        hits = sorted(position[w] for w in graph.adj[x] if w in position)
        if not hits:
            continue
        for a in hits:
            if (a + 1) % 7 in hits:
                return PromiseViolation.triangle(x, cycle[a], cycle[(a + 1) % 7],
                                                 note="vertex with consecutive cycle neighbours")
        if len(hits) == 1:
            i = hits[0]
            return PromiseViolation.induced_p7(
                (x,) + tuple(cycle[(i + j) % 7] for j in range(6)),
                note="vertex with a single cycle neighbour")
        for a in hits:
            for b in hits:
                if (b - a) % 7 == 3:
                    c5 = (x, cycle[a], cycle[(a + 1) % 7], cycle[(a + 2) % 7], cycle[b])
                    return PromiseViolation.breach("induced C5 found while classifying", c5)
        # two hits at distance two: x is a twin of the middle vertex
        a, b = hits
        label[x] = (a + 1) % 7 if (b - a) % 7 == 2 else (b + 1) % 7

    uncovered = [v for v in range(graph.n) if v not in label]
    if uncovered:
        for y in uncovered:
            for x in graph.adj[y]:
                if x in label and x not in on_cycle:
                    i = label[x]
                    return PromiseViolation.induced_p7(
                        (y, x) + tuple(cycle[(i + j) % 7] for j in range(1, 6)),
                        note="vertex without cycle neighbours")
        return PromiseViolation.breach("graph is not connected", uncovered[:1])

    for u, v in graph.edges():
        i, j = label[u], label[v]
        gap = (j - i) % 7
        if gap in (1, 6):
            continue
        if gap == 0:
            return PromiseViolation.triangle(u, v, cycle[(i - 1) % 7], note="edge inside a class")
        if gap in (2, 5):
            middle = cycle[(i + 1) % 7] if gap == 2 else cycle[(i - 1) % 7]
            return PromiseViolation.triangle(u, v, middle, note="edge between classes at distance two")
        # distance three closes a five-cycle through the far side
        if gap == 3:
            c5 = (u, cycle[(i - 1) % 7], cycle[(i - 2) % 7], cycle[(i - 3) % 7], v)
        else:
            c5 = (v, cycle[(j - 1) % 7], cycle[(j - 2) % 7], cycle[(j - 3) % 7], u)
        return PromiseViolation.breach("induced C5 found between classes at distance three", c5)

    classes = [[] for _ in range(7)]
    for v in range(graph.n):
        classes[label[v]].append(v)
    sizes = [len(c) for c in classes]
    edge_count = sum(sizes[i] * sizes[(i + 1) % 7] for i in range(7))
    if edge_count != graph.m:
        for i in range(7):
            for x in classes[i]:
                for y in classes[(i + 1) % 7]:
                    if not graph.has_edge(x, y):
                        return PromiseViolation.induced_p7(_p7_missing_join(cycle, i, x, y),
                                                           note="missing edge between consecutive classes")
    LOG.debug("blown-up C7 with class sizes %s", sizes)
    return TwinDecomposition(tuple(VertexSet.of(c) for c in classes), cycle)
