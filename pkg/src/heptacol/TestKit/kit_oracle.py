"""Brute-force reference solvers used to cross-check the engine."""

from typing import List, Optional, Sequence, Tuple

from ..Engine.engine_solver import verify_colouring
from ..GraphCore.graph_basic import Graph
from ..aux.exceptions import InternalInvariantError, SizeGuard
from ..aux.helpers import FULL_MASK, bit, colours_of, mask_size

ENUMERATION_LIMIT = 16


def _masks(graph: Graph, lists: Optional[Sequence[int]]) -> List[int]:
    return [FULL_MASK] * graph.n if lists is None else list(lists)


def oracle_solve(graph: Graph, lists: Optional[Sequence[int]] = None) -> Optional[List[int]]:
    """
    Backtracking list 3-colouring, always branching on an uncoloured vertex
    with the fewest colours left and pruning neighbours' domains forward.
    """
    domains = _masks(graph, lists)
    colouring = [0] * graph.n

    def search(domains: List[int], left: int) -> bool:
        if left == 0:
            return True
        v = min((u for u in range(graph.n) if not colouring[u]),
                key=lambda u: (mask_size(domains[u]), u))
        for c in colours_of(domains[v]):
            b = bit(c)
            nxt = list(domains)
            nxt[v] = b
            if any(not colouring[w] and nxt[w] == b for w in graph.adj[v]):
                continue
            for w in graph.adj[v]:
                nxt[w] &= ~b
            colouring[v] = c
            if search(nxt, left - 1):
                return True
            colouring[v] = 0
        return False

    if any(m == 0 for m in domains) or not search(domains, graph.n):
        return None
    if not verify_colouring(graph, lists, colouring):
        raise InternalInvariantError("oracle produced an improper colouring")
    return colouring


def enumerate_colourings(graph: Graph, lists: Optional[Sequence[int]] = None) -> List[Tuple[int, ...]]:
    """
    Every proper list colouring, in lexicographic order over vertices 0..n-1.

    Raises:
        SizeGuard: more than ENUMERATION_LIMIT vertices
    """
    if graph.n > ENUMERATION_LIMIT:
        raise SizeGuard(f"enumeration limited to {ENUMERATION_LIMIT} vertices, got {graph.n}")
    masks = _masks(graph, lists)
    found = []
    colouring = [0] * graph.n

    def extend(v: int) -> None:
        if v == graph.n:
            found.append(tuple(colouring))
            return
        for c in colours_of(masks[v]):
            if all(colouring[w] != c for w in graph.adj[v] if w < v):
                colouring[v] = c
                extend(v + 1)
        colouring[v] = 0

    extend(0)
    return found
