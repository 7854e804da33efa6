"""Shortest odd cycles, the anchors of the solver."""

import logging
from collections import deque
from typing import Dict, Optional, Tuple

from ..GraphCore.graph_basic import Graph
from ..GraphCore.graph_traversal import Bipartition, bipartite_check
from .recog_forbidden import find_triangle
from .recog_twins import twin_quotient

LOG = logging.getLogger(__name__)


def _odd_depth_from(graph: Graph, s: int, max_depth: int) -> Optional[int]:
    """
    Breadth-first search from s up to max_depth; return the depth d of the
    first edge joining two vertices at the same depth, or None.
    """
    dist = {s: 0}
    level = [s]
    d = 0
    while level and d <= max_depth:
        for u in level:
            for w in graph.adj[u]:
                if dist.get(w) == d:
                    return d
        if d == max_depth:
            break
        nxt = []
        for u in level:
            for w in graph.adj[u]:
                if w not in dist:
                    dist[w] = d + 1
                    nxt.append(w)
        level = nxt
        d += 1
    return None


def _odd_girth(graph: Graph, floor: int = 3) -> Optional[int]:
    """Length of a shortest odd cycle, None if the graph is bipartite; stops at floor."""
    best = None
    for s in range(graph.n):
        limit = graph.n if best is None else (best - 3) // 2
        if limit < 0:
            break
        d = _odd_depth_from(graph, s, limit)
        if d is not None:
            best = 2 * d + 1
            if best == floor:
                break
    return best


def _parity_distances(graph: Graph, s: int) -> Dict[Tuple[int, int], int]:
    # shortest walk from s to (v, parity) using only vertices >= s
    dist = {(s, 0): 0}
    queue = deque([(s, 0)])
    while queue:
        v, p = queue.popleft()
        d = dist[v, p]
        for w in graph.adj[v]:
            if w >= s and (w, 1 - p) not in dist:
                dist[w, 1 - p] = d + 1
                queue.append((w, 1 - p))
    return dist


def _first_cycle_at(graph: Graph, s: int, length: int) -> Optional[Tuple[int, ...]]:
    """
    Lexicographically first closed walk of the given (odd girth) length
    starting at s and avoiding vertices below s; such a walk is a cycle.
    """
    dist = _parity_distances(graph, s)
    if dist.get((s, 1), length + 1) > length:
        return None
    walk = [s]
    x = s
    for i in range(length - 1):
        left = length - i - 1
        x = next(y for y in graph.adj[x] if y >= s and dist.get((y, left % 2), left + 1) <= left)
        walk.append(x)
    return tuple(walk)


def _shortest_odd_cycle_simple(graph: Graph) -> Optional[Tuple[int, ...]]:
    tri = find_triangle(graph)
    if tri is not None:
        return tri
    if isinstance(bipartite_check(graph), Bipartition):
        return None
    length = _odd_girth(graph, floor=5)
    for s in range(graph.n):
        cycle = _first_cycle_at(graph, s, length)
        if cycle is not None:
            return cycle
    raise AssertionError("odd girth without an odd cycle")


def shortest_odd_cycle(graph: Graph) -> Optional[Tuple[int, ...]]:
    """
    Return a minimum-length odd cycle, or None if the graph is bipartite.

    Among all minimum odd cycles the result has the smallest start vertex,
    then the lexicographically smallest vertex sequence (so it continues
    towards the smaller of the two cycle neighbours of its start). A
    minimum odd cycle is chordless, so it never holds two false twins; the
    search runs on the twin quotient and maps back to representatives,
    which are the smallest members of their classes.
    """
    quotient, reps = twin_quotient(graph)
    cycle = _shortest_odd_cycle_simple(quotient)
    if cycle is None:
        return None
    mapped = tuple(reps[v] for v in cycle)
    LOG.debug("shortest odd cycle of length %d", len(mapped))
    return mapped
