"""Breadth-first traversals: connected components and bipartiteness."""

from collections import deque
from dataclasses import dataclass
from typing import List, Tuple, Union

from .graph_basic import Graph, VertexSet


@dataclass(frozen=True)
class Bipartition:
    left: VertexSet
    right: VertexSet


@dataclass(frozen=True)
class OddCycle:
    vertices: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def connected_components(graph: Graph) -> List[VertexSet]:
    """
    Partition the vertices into connected components, ordered by their
    smallest member.
    """
    seen = [False] * graph.n
    components = []
    for root in range(graph.n):
        if seen[root]:
            continue
        seen[root] = True
        members = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in graph.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    queue.append(w)
        components.append(VertexSet.of(members))
    return components


def bipartite_check(graph: Graph) -> Union[Bipartition, OddCycle]:
    """
    Two-colour the graph by breadth-first search.

    Returns:
        Bipartition with every edge crossing (left, right); roots of the
        search land on the left side. Otherwise an OddCycle present in the
        graph (consecutive vertices adjacent, closing edge last-first).
    """
    side = [-1] * graph.n
    parent = [-1] * graph.n
    depth = [0] * graph.n
    for root in range(graph.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in graph.adj[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif side[w] == side[v]:
                    return OddCycle(_close_cycle(parent, depth, v, w))
    left = VertexSet.of(v for v in range(graph.n) if side[v] == 0)
    right = VertexSet.of(v for v in range(graph.n) if side[v] == 1)
    return Bipartition(left, right)


def _close_cycle(parent: List[int], depth: List[int], u: int, v: int) -> Tuple[int, ...]:
    # walk both tree paths up to the lowest common ancestor
    pu, pv = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        pu.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        pv.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        pu.append(a)
        pv.append(b)
    # pu ends with the ancestor; pv too, drop its copy
    return tuple(pu + pv[-2::-1])
