"""Per-vertex colour lists, propagation and safe elimination.

This file contains the following:
    * TrailEntry, ListState - masks plus the log of every removed colour
    * propagate - singleton lists delete their colour from neighbours
    * eliminate_safe - full lists whose neighbours all miss a colour take it
"""

import logging
from typing import List, NamedTuple, Optional, Sequence, Tuple

from ..GraphCore.graph_basic import Graph
from ..aux.exceptions import Conflict
from ..aux.helpers import FULL_MASK, bit, colours_of, mask_size, only_colour, smallest_colour

LOG = logging.getLogger(__name__)


class TrailEntry(NamedTuple):
    vertex: int
    colour: int
    cause: Tuple


class ListState:
    """
    Working lists of one branch.

    attributes:
        masks (list of int): current admissible colours per vertex
        assigned (dict): vertex -> colour for every singleton list
        trail (list of TrailEntry): every colour removal, in order
    """

    __slots__ = ("masks", "assigned", "trail", "pending")

    def __init__(self, masks: Sequence[int]):
        self.masks = list(masks)
        self.trail: List[TrailEntry] = []
        self.assigned = {}
        self.pending = []
        for v, m in enumerate(self.masks):
            if not 0 < m <= FULL_MASK:
                raise ValueError(f"vertex {v} has an invalid colour list {m:#b}")
            if mask_size(m) == 1:
                self.assigned[v] = only_colour(m)
                self.pending.append(v)

    def copy(self) -> "ListState":
        other = ListState.__new__(ListState)
        other.masks = list(self.masks)
        other.assigned = dict(self.assigned)
        other.trail = list(self.trail)
        other.pending = list(self.pending)
        return other

    def restrict(self, v: int, allowed: int, cause: Tuple) -> None:
        """
        Intersect the list of v with allowed.

        Raises:
            Conflict: the list of v becomes empty
        """
        old = self.masks[v]
        new = old & allowed
        if new == old:
            return
        for c in colours_of(old & ~new):
            self.trail.append(TrailEntry(v, c, cause))
        self.masks[v] = new
        if new == 0:
            raise Conflict(v, str(cause))
        if mask_size(new) == 1:
            self.assigned[v] = only_colour(new)
            self.pending.append(v)

    def assign(self, v: int, colour: int, cause: Tuple) -> None:
        if not self.masks[v] & bit(colour):
            raise Conflict(v, f"{cause}: colour {colour} not admissible")
        self.restrict(v, bit(colour), cause)

    def full_vertices(self) -> List[int]:
        return [v for v, m in enumerate(self.masks) if m == FULL_MASK]

    @staticmethod
    def replay(initial: Sequence[int], trail: Sequence[TrailEntry]) -> List[int]:
        """Re-apply a trail to the initial masks."""
        masks = list(initial)
        for entry in trail:
            masks[entry.vertex] &= ~bit(entry.colour)
        return masks


def propagate(graph: Graph, state: ListState) -> ListState:
    """
    Run to fixpoint: every vertex with a single colour deletes it from the
    lists of its neighbours.

    Raises:
        Conflict: some list empties
    """
    pending = state.pending
    masks = state.masks
    while pending:
        v = pending.pop()
        colour = state.assigned[v]
        b = bit(colour)
        cause = ("prop", v)
        for w in graph.adj[v]:
            if masks[w] & b:
                state.restrict(w, ~b & FULL_MASK, cause)
    return state


def eliminate_safe(graph: Graph, state: ListState) -> List[Tuple[int, int]]:
    """
    Give every full-list vertex whose neighbours all miss a colour j the
    smallest such j (colour 1 when it has no neighbours).

    Expects a propagation fixpoint. A safe assignment never touches a
    neighbour's list, so one pass suffices.
    """
    made = []
    masks = state.masks
    for v in range(graph.n):
        if masks[v] != FULL_MASK:
            continue
        seen = 0
        for w in graph.adj[v]:
            seen |= masks[w]
            if seen == FULL_MASK:
                break
        missing = FULL_MASK & ~seen
        if not missing:
            continue
        colour = smallest_colour(missing)
        state.assign(v, colour, ("safe", v))
        made.append((v, colour))
    # the new singletons cannot remove anything
    state.pending.clear()
    if made:
        LOG.debug("safe elimination assigned %d vertices", len(made))
    return made


def initial_state(masks: Optional[Sequence[int]], n: int) -> ListState:
    return ListState([FULL_MASK] * n if masks is None else masks)
