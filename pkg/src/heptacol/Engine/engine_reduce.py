"""Reduction of a residual list instance (lists of size at most two) to 2-SAT."""

from typing import List, Sequence, Tuple

from ..GraphCore.graph_basic import Graph
from ..Sat2.sat_instance import TwoSatInstance, lit, neg
from ..aux.exceptions import InternalInvariantError, PreconditionBreach
from ..aux.helpers import colours_of, mask_size
from .engine_lists import ListState


def _takes(var: int, mask: int, colour: int) -> int:
    """Literal for 'the vertex behind var takes colour'."""
    return lit(var, colour == colours_of(mask)[0])


def residual_to_2sat(state: ListState, graph: Graph) -> Tuple[TwoSatInstance, List[int]]:
    """
    One variable per vertex with a two-colour list, true iff the vertex
    takes the smaller colour. Every edge and every colour admissible at
    both ends forbids the equal choice.

    Returns:
        the instance and var_map, var_map[x] being the vertex of variable x

    Raises:
        PreconditionBreach: some list still has three colours
    """
    masks = state.masks
    var_of = {}
    var_map = []
    for v, m in enumerate(masks):
        size = mask_size(m)
        if size == 3:
            raise PreconditionBreach(f"vertex {v} still has three colours")
        if size == 2:
            var_of[v] = len(var_map)
            var_map.append(v)
    inst = TwoSatInstance(len(var_map))
    for u, v in graph.edges():
        shared = masks[u] & masks[v]
        if not shared:
            continue
        if u not in var_of or v not in var_of:
            raise InternalInvariantError(f"edge {{{u}, {v}}} keeps a shared colour next to an assigned vertex")
        x, y = var_of[u], var_of[v]
        for c in colours_of(shared):
            inst.add_clause(neg(_takes(x, masks[u], c)), neg(_takes(y, masks[v], c)))
    return inst, var_map


def decode_assignment(state: ListState, var_map: Sequence[int], assignment: Sequence[bool]) -> List[int]:
    """Turn a 2-SAT model into a colouring of all vertices."""
    colouring = [colours_of(m)[0] for m in state.masks]
    for x, v in enumerate(var_map):
        if not assignment[x]:
            colouring[v] = colours_of(state.masks[v])[1]
    return colouring
