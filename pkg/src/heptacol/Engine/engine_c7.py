"""List colouring of a blown-up C7.

A blown-up C7 is coloured by giving each class V_i a colour set S_i with
consecutive sets disjoint; a vertex v of V_i then takes the smallest colour
of L(v) ∩ S_i. S_i is feasible for V_i when it meets every list of the
class, so the search runs over the 7 non-empty subsets of {1, 2, 3} per
class around the cycle.
"""

import logging
from typing import Dict, List, Optional, Sequence

from ..Recognition.recog_twins import TwinDecomposition
from ..aux.helpers import FULL_MASK, smallest_colour

LOG = logging.getLogger(__name__)

SUBSETS = tuple(range(1, FULL_MASK + 1))


def _feasible(masks: Sequence[int], members) -> List[int]:
    return [s for s in SUBSETS if all(masks[v] & s for v in members)]


def colour_blownup_c7(dec: TwinDecomposition, masks: Sequence[int]) -> Optional[Dict[int, int]]:
    """
    Return vertex -> colour for every vertex of the decomposition, or None
    when no list colouring exists.

    The first class takes its feasible sets in ascending mask order; the
    remaining classes follow greedily with the smallest set that still
    closes the cycle.
    """
    classes = dec.classes
    if len(classes) != 7:
        raise ValueError("a blown-up C7 has seven classes")
    feasible = [_feasible(masks, members) for members in classes]
    for s0 in feasible[0]:
        # reachable[i]: sets at class i from which the path to class 6 can close against s0
        reachable = [[] for _ in range(7)]
        reachable[6] = [s for s in feasible[6] if not s & s0]
        for i in range(5, 0, -1):
            reachable[i] = [s for s in feasible[i] if any(not s & t for t in reachable[i + 1])]
        chosen = [s0]
        for i in range(1, 7):
            nxt = [s for s in reachable[i] if not s & chosen[-1]]
            if not nxt:
                break
            chosen.append(nxt[0])
        if len(chosen) < 7:
            continue
        LOG.debug("blown-up C7 colour sets %s", chosen)
        return {v: smallest_colour(masks[v] & chosen[i]) for i, members in enumerate(classes) for v in members}
    return None
